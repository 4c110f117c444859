#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "nichols/braiding.hpp"
#include "nichols/scalar.hpp"

namespace nichols {

/*
 * c_ij = -min{ n >= 0 : (n+1)_{q_ii} (1 - q_ii^n qtilde_ij) = 0 }.
 *
 * For q_ii of finite order N the minimum always exists within n <= N-1, so
 * the answer is exact. For infinite order the search reduces to the single
 * equation q_ii^n = qtilde_ij^{-1}, solved exactly when the scalars are
 * monomials in (zeta, q); otherwise a bounded scan up to n_max applies and a
 * missing solution is only a bounded verdict (exact = false).
 */
struct CartanEntry {
    bool reflectable = false;
    long value = 0;    // c_ij <= 0, valid when reflectable
    bool exact = true; // when !reflectable: definitive vs bounded-scan verdict
};

CartanEntry cartan_entry(const BraidingMatrix& m, unsigned i, unsigned j, unsigned n_max = 100);

/*
 * Cartan-type exponents: a_ii = 2 and a_ij <= 0 with qtilde_ij = q_ii^{a_ij},
 * chosen in (-ord q_ii, 0] at finite order. nullopt when some pair admits no
 * such exponent (for non-monomial infinite-order entries this is a bounded
 * answer with the same n_max caveat as cartan_entry).
 */
std::optional<std::vector<std::vector<long>>> cartan_type_exponents(const BraidingMatrix& m,
                                                                    unsigned n_max = 100);

enum class GcmClass { Finite, Affine, Indefinite, NotApplicable };

const char* gcm_class_name(GcmClass c);

/*
 * Classification of an indecomposable symmetrizable generalized Cartan
 * matrix by the signature of its symmetrization: Finite iff positive
 * definite, Affine iff positive semidefinite with one-dimensional kernel,
 * Indefinite otherwise.
 */
GcmClass classify_gcm(const std::vector<std::vector<long>>& a);

// Split into indecomposable diagonal blocks and classify each; blocks are
// reported as (sorted vertex list, class) ordered by least vertex.
std::vector<std::pair<std::vector<unsigned>, GcmClass>> classify_gcm_components(
    const std::vector<std::vector<long>>& a);

struct CartanData {
    std::vector<std::vector<long>> c; // c_ii = 2; row i meaningful iff reflectable[i]
    std::vector<bool> reflectable;
    bool bounded = false; // some non-reflectable verdict came from a capped scan
    std::optional<std::vector<std::vector<long>>> cartan_exponents; // a_ij when Cartan type
    GcmClass gcm_class = GcmClass::NotApplicable; // set when Cartan type and indecomposable
};

CartanData cartan_data(const BraidingMatrix& m, unsigned n_max = 100);

} // namespace nichols
