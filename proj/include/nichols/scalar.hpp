#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nichols/cyclotomic.hpp"

namespace nichols {

/*
 * Scalar: element of Q(zeta_M)(q), the field of rational functions in one
 * transcendental q over the M-th cyclotomic field.  Stored as a fraction of
 * dense polynomials in q with Cyc coefficients.  Canonical form: denominator
 * monic, gcd(numerator, denominator) = 1, zero is the empty numerator.  Two
 * scalars with equal value compare equal bit for bit once lifted to a common
 * cyclotomic order.
 */
class Scalar {
public:
    Scalar() : m_(1), num_(), den_{Cyc::one(1)} {}

    static Scalar zero(unsigned M = 1);
    static Scalar one(unsigned M = 1);
    static Scalar from_int(long v);
    static Scalar from_rational(const Rat& r);
    static Scalar from_cyc(const Cyc& c);
    static Scalar q_power(long e);                       // q^e, e may be negative
    static Scalar root_of_unity(unsigned N, long k);     // zeta_N^k at order N
    static Scalar monomial(const Rat& coef, unsigned M, long zexp, long qexp);

    unsigned level() const { return m_; }

    bool is_zero() const { return num_.empty(); }
    bool is_one() const;
    bool is_constant() const; // free of q
    Cyc constant_value() const;

    struct Monomial {
        Cyc coeff;
        long qexp;
    };
    // Set when the value is c * q^e (single-term numerator and denominator).
    std::optional<Monomial> as_monomial() const;

    Scalar operator-() const;
    friend Scalar operator+(const Scalar& a, const Scalar& b);
    friend Scalar operator-(const Scalar& a, const Scalar& b);
    friend Scalar operator*(const Scalar& a, const Scalar& b);
    friend Scalar operator/(const Scalar& a, const Scalar& b);
    Scalar& operator+=(const Scalar& b) { return *this = *this + b; }
    Scalar& operator-=(const Scalar& b) { return *this = *this - b; }
    Scalar& operator*=(const Scalar& b) { return *this = *this * b; }
    Scalar& operator/=(const Scalar& b) { return *this = *this / b; }

    Scalar inverse() const;
    Scalar pow(long e) const;

    bool operator==(const Scalar& b) const;
    bool operator!=(const Scalar& b) const { return !(*this == b); }

    std::string str() const;
    std::string key() const; // stable canonical serialization at this level

    // Literal grammar: ['-'] [rational] ['*'] ['z' ['^' int]] ['*'] ['q' ['^' int]]
    // where z stands for zeta_M.  Examples: "1", "-3/2*z^5*q^2", "q^-1", "z".
    static Scalar parse(const std::string& literal, unsigned M);

    Scalar lifted(unsigned M2) const;

private:
    unsigned m_;
    std::vector<Cyc> num_, den_; // polynomials in q over Q(zeta_M)

    void normalize();
    static Scalar make(unsigned M, std::vector<Cyc> num, std::vector<Cyc> den);
};

// Fully split monomial form coeff * zeta_M^zexp * q^qexp with rational coeff.
struct ZetaMonomial {
    Rat coeff;
    unsigned zexp = 0; // 0 <= zexp < M
    long qexp = 0;
};

// nullopt for zero, for sums, and for monomials whose cyclotomic coefficient
// is not a rational multiple of a single power of zeta_M
std::optional<ZetaMonomial> as_zeta_monomial(const Scalar& s);

struct Order {
    enum Kind { Finite, Infinite, NotRootOfUnity } kind;
    unsigned value = 0; // meaningful when kind == Finite

    bool finite() const { return kind == Finite; }
};

// Multiplicative order of a nonzero scalar; ZeroInput on zero.
Order order_of(const Scalar& a);

// (n)_a = 1 + a + ... + a^{n-1}
Scalar q_int(unsigned n, const Scalar& a);
// (n)_a! = (1)_a (2)_a ... (n)_a
Scalar q_factorial(unsigned n, const Scalar& a);
// prod_{j=lo}^{hi} (j)_a, the division-free factorial ratio (hi)_a!/(lo-1)_a!
Scalar q_int_product(unsigned lo, unsigned hi, const Scalar& a);
// Gaussian binomial evaluated at a, computed through the polynomial
// product-of-ratios recurrence (every intermediate quotient is a polynomial).
Scalar q_binomial(unsigned k, unsigned i, const Scalar& a);
// mu_k = prod_{i=0}^{k-1} (1 - q11^i qt12)
Scalar mu(unsigned k, const Scalar& q11, const Scalar& qt12);

} // namespace nichols
