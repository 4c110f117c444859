#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "nichols/scalar.hpp"

namespace nichols {

/*
 * Braiding matrix of a diagonal braided vector space: theta x theta nonzero
 * scalars q_ij, all held at one cyclotomic level. The validated constructor
 * additionally requires q_ii != 1; reflections may produce matrices violating
 * that, so they go through raw().
 */
class BraidingMatrix {
public:
    BraidingMatrix(unsigned theta, std::vector<Scalar> entries);

    // shape and nonzero checks only (diagonal entries may be 1)
    static BraidingMatrix raw(unsigned theta, std::vector<Scalar> entries);

    static BraidingMatrix from_json(const nlohmann::json& j);
    nlohmann::json to_json() const;

    unsigned theta() const { return theta_; }
    unsigned level() const { return m_; }

    const Scalar& at(unsigned i, unsigned j) const; // 0-based
    Scalar qtilde(unsigned i, unsigned j) const;    // q_ij * q_ji, i != j

    bool diagonal_valid() const; // q_ii != 1 for all i

    // canonical serialization of all entries; equal matrices at equal level
    // produce equal keys
    std::string key() const;

    bool operator==(const BraidingMatrix& b) const;
    bool operator!=(const BraidingMatrix& b) const { return !(*this == b); }

private:
    BraidingMatrix() = default;
    void lift_entries();
    void check_shape() const;

    unsigned theta_ = 0;
    unsigned m_ = 1;
    std::vector<Scalar> entries_; // row-major
};

/*
 * Decorated graph of a braiding: vertices carry q_ii, an edge (i,j) is
 * present exactly when qtilde_ij != 1 and carries that value. Two matrices
 * with equal diagonals and equal qtilde have identical diagrams.
 */
struct DynkinDiagram {
    unsigned theta = 0;
    std::vector<Scalar> vertex_labels;
    std::map<std::pair<unsigned, unsigned>, Scalar> edges; // keys i < j

    bool has_edge(unsigned i, unsigned j) const;
    const Scalar& edge_label(unsigned i, unsigned j) const;

    // connected components as sorted vertex lists, in order of least vertex
    std::vector<std::vector<unsigned>> components() const;
    bool connected() const { return components().size() <= 1; }

    // canonical serialization; the groupoid uses this to identify nodes
    std::string key() const;
};

DynkinDiagram diagram(const BraidingMatrix& m);

// bicharacter on Z^theta: bq(u, v) = prod_{i,j} q_ij^{u_i v_j}
Scalar bicharacter(const BraidingMatrix& m, const std::vector<long>& u,
                   const std::vector<long>& v);

enum class BraidClass { Torsion, Generic, Semigeneric };

const char* braid_class_name(BraidClass c);

/*
 * Trichotomy: Torsion when every q_ii and qtilde_ij has finite order;
 * Generic when every q_ii has infinite order and every qtilde_ij is 1 or of
 * infinite order; Semigeneric otherwise.
 */
BraidClass classify_class(const BraidingMatrix& m);

} // namespace nichols
