#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "nichols/braiding.hpp"
#include "nichols/cartan.hpp"

namespace nichols {

/*
 * Reflection at vertex i: the matrix (t_jk) with
 *   t_jk = q_jk q_ik^{-c_ij} q_ji^{-c_ik} q_ii^{c_ij c_ik}
 * where (c_ij)_j is row i of the generalized Cartan matrix. Requires that
 * row to be defined; NotReflectable otherwise. The result goes through
 * BraidingMatrix::raw since reflected diagonals may contain 1.
 */
BraidingMatrix reflect_matrix(const BraidingMatrix& m, unsigned i, unsigned n_max = 100);

/*
 * The linear map s_i on Z^theta, alpha_j -> alpha_j - c_ij alpha_i, as a
 * theta x theta integer matrix acting on coordinate columns. Built from
 * row i of the Cartan matrix.
 */
std::vector<std::vector<long>> simple_reflection(const std::vector<long>& c_row, unsigned i);

std::vector<long> apply_map(const std::vector<std::vector<long>>& s, const std::vector<long>& v);

struct Root {
    std::vector<long> coords;       // in the basis of its matrix of origin
    Scalar q_beta;                  // bq(beta, beta) there
    std::optional<unsigned> height; // min{ n : (n)_{q_beta} = 0 }; nullopt = infinite
};

struct GroupoidNode {
    BraidingMatrix matrix; // representative of its diagram class
    std::vector<Root> roots;
};

struct GroupoidEdge {
    unsigned from = 0;
    unsigned vertex = 0;
    unsigned to = 0;
};

enum class Verdict { FiniteSystem, InfiniteDetected, CapExceeded };

const char* verdict_name(Verdict v);

struct Caps {
    unsigned max_matrices = 10000;
    long max_root_height = 1000;
    unsigned cartan_n_max = 100;
};

struct GroupoidReport {
    std::vector<GroupoidNode> nodes; // BFS order, seed first
    std::vector<GroupoidEdge> edges;
    Verdict verdict = Verdict::FiniteSystem;
    std::string reason; // which detector fired, empty for FiniteSystem
};

struct GkValue {
    enum Kind { Finite, Infinite, Unknown } kind = Unknown;
    unsigned value = 0; // meaningful when kind == Finite

    bool operator==(const GkValue& b) const {
        return kind == b.kind && (kind != Finite || value == b.value);
    }
    std::string str() const;
};

/*
 * Breadth-first closure of {m} under reflections with diagram-key
 * deduplication, followed by saturation of the simple-root orbit along the
 * discovered edges. Infinite-system detectors, in check order:
 *   - a diagonal entry 1 at a vertex with an incident edge
 *   - a vertex whose Cartan row is undefined (exact verdict only)
 *   - Cartan type whose exponent matrix has an affine component
 *   - a loop at the seed whose composed root map is unipotent != identity
 *   - rank 2 with connected seed: a tracked root with q_beta,beta = 1
 * Cap exhaustion (matrix count, root height, or a bounded Cartan scan)
 * reports CapExceeded and is never upgraded to a mathematical verdict.
 */
GroupoidReport enumerate(const BraidingMatrix& m, const Caps& caps = {});

/*
 * Count of seed-node roots of infinite height for a FiniteSystem report,
 * Infinite for InfiniteDetected, Unknown for CapExceeded.
 */
GkValue gk_dimension(const GroupoidReport& report);

struct Rank2Decision {
    bool finite = false; // finite root system vs infinite GK dimension
    std::string reason;  // shortcut or detector that fired, empty when finite
    std::optional<GroupoidReport> report; // present when finite
};

/*
 * Rank-2 decision: scalar shortcuts first (each certifies infinite GK), then
 * the full enumeration. Shortcuts, in check order: an exactly undefined
 * Cartan entry; both Cartan entries <= -3; the q11 / q11^4 family; a double
 * root 2 beta_m from p_m = -1 with y_{m+1} != 0; the w0-obstruction
 * predicate; semigeneric edge filters (one reflection is taken first when
 * both diagonal entries are torsion). Throws CapExceeded when enumeration
 * exhausts its caps with no verdict.
 */
Rank2Decision decide_rank2(const BraidingMatrix& m, const Caps& caps = {});

} // namespace nichols
