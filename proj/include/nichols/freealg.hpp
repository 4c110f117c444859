#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nichols/braiding.hpp"
#include "nichols/scalar.hpp"

namespace nichols {

using Word = std::vector<uint8_t>; // letters are 0-based vertex indices
using Degree = std::vector<long>;  // letter-count vector in Z^theta

Degree word_degree(unsigned theta, const Word& w);

/*
 * Sparse element of the free algebra T(V) on generators x_1..x_theta.
 * Multiplication is plain concatenation; the braiding enters only through
 * the coproduct and the adjoint operator below.
 */
class FreeElement {
public:
    explicit FreeElement(unsigned theta) : theta_(theta) {}

    static FreeElement unit(unsigned theta);
    static FreeElement generator(unsigned theta, unsigned i);
    static FreeElement term(unsigned theta, const Word& w, const Scalar& c);

    unsigned theta() const { return theta_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<Word, Scalar>& terms() const { return terms_; }
    Scalar coeff(const Word& w) const;

    void add(const Word& w, const Scalar& c);

    FreeElement operator-() const;
    friend FreeElement operator+(const FreeElement& a, const FreeElement& b);
    friend FreeElement operator-(const FreeElement& a, const FreeElement& b);
    friend FreeElement operator*(const FreeElement& a, const FreeElement& b);
    friend FreeElement operator*(const Scalar& c, const FreeElement& a);
    FreeElement pow(unsigned e) const;

    bool operator==(const FreeElement& b) const;
    bool operator!=(const FreeElement& b) const { return !(*this == b); }

    // common Z^theta-degree of all words; nullopt when zero or inhomogeneous
    std::optional<Degree> uniform_degree() const;

    std::string str() const;

private:
    unsigned theta_;
    std::map<Word, Scalar> terms_; // no zero coefficients stored
};

// Element of T(V) (x) T(V); product carries the braiding factor
// (u (x) v)(u' (x) v') = bq(deg v, deg u') (uu' (x) vv').
class TensorElement {
public:
    explicit TensorElement(unsigned theta) : theta_(theta) {}

    unsigned theta() const { return theta_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<std::pair<Word, Word>, Scalar>& terms() const { return terms_; }

    void add(const Word& l, const Word& r, const Scalar& c);

    friend TensorElement operator+(const TensorElement& a, const TensorElement& b);
    friend TensorElement operator-(const TensorElement& a, const TensorElement& b);
    bool operator==(const TensorElement& b) const;
    bool operator!=(const TensorElement& b) const { return !(*this == b); }

    // the part whose left tensor factors have the given degree
    TensorElement left_degree_part(const Degree& d) const;
    // distinct left-factor degrees, each listed once
    std::vector<Degree> left_degrees() const;

private:
    unsigned theta_;
    std::map<std::pair<Word, Word>, Scalar> terms_;
};

TensorElement tensor_of(const FreeElement& a, const FreeElement& b);

/*
 * Skew derivation: on a word, each occurrence of letter i at position p is
 * removed with coefficient prod_{k>p} q_{i, w_k}. This is the expansion of
 * the Leibniz rule d_i(xy) = x d_i(y) + d_i(x)(alpha_i . y) with the action
 * alpha_i . x_j = q_ij x_j, so d_1(x_1 x_2) = q_12 x_2.
 */
FreeElement derivation(const BraidingMatrix& m, unsigned i, const FreeElement& x);

// ad x_1 on a homogeneous element of degree beta: x_1 x - bq(alpha_1, beta) x x_1
FreeElement ad_x1(const BraidingMatrix& m, const FreeElement& x);

// algebra map T(V) -> T(V) (x) T(V) sending x_i to x_i (x) 1 + 1 (x) x_i
TensorElement coproduct(const BraidingMatrix& m, const FreeElement& x);

/* rank-2 element builders (theta must be 2) */

// y_k = (ad x_1)^k x_2
FreeElement y_element(const BraidingMatrix& m, unsigned k);
// w_m = y_{m+2} y_m - bq(beta_{m+2}, beta_m) y_m y_{m+2}
FreeElement w_element(const BraidingMatrix& m, unsigned mm);
// w_m minus its y_{m+1}^2 correction; requires p_{m+1} != -1
FreeElement wtilde_element(const BraidingMatrix& m, unsigned mm);
// Y(t) = sum_j (q11^n q12)^{-j} [(N-t-1+j)!_q / (j)!_q] y_n^{t-j} y_{n+1} y_n^j
// with q = p_n of order N; defined for 0 <= t <= N-1 (the factorial ratio is
// computed as the division-free product prod_{l=j+1}^{N-t-1+j} (l)_q)
FreeElement Y_element(const BraidingMatrix& m, unsigned t, unsigned n, unsigned N);

// beta_m = m alpha_1 + alpha_2 and p_m = bq(beta_m, beta_m)
Degree beta_degree(unsigned mm);
Scalar p_value(const BraidingMatrix& m, unsigned mm);

/*
 * Membership oracle for the defining ideal: a homogeneous x of total degree
 * n maps to zero in the Nichols algebra iff every n-fold composition of the
 * derivations annihilates it. Depth-first with early exit on the first
 * surviving constant.
 */
bool is_zero_in_nichols(const BraidingMatrix& m, const FreeElement& x, unsigned max_degree = 12);

// dimension of the Nichols algebra's component of the given degree: rank of
// the word-by-derivation-sequence pairing matrix over the scalar field
unsigned graded_dim(const BraidingMatrix& m, const Degree& degree, unsigned max_degree = 12);

/*
 * Element mini-language: sums/differences of '*'-separated factors, each a
 * scalar atom ("2", "1/2", "z^3", "q^-1"), a generator x<i>, y(k), w(m),
 * wtilde(m), Y(t,n,N), or a parenthesized expression; nonnegative integer
 * powers bind to the preceding factor. Example: "y(3)^2 - 2*q^-1*x1*x2".
 */
FreeElement parse_element(const BraidingMatrix& m, const std::string& src);

} // namespace nichols
