#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "nichols/error.hpp"

namespace nichols {

using Rat = mpq_class;

/* Dense univariate polynomials over Q, ascending powers, no trailing zeros. */
using RatPoly = std::vector<Rat>;

void rp_trim(RatPoly& p);
int rp_deg(const RatPoly& p); // -1 for the zero polynomial
RatPoly rp_mul(const RatPoly& a, const RatPoly& b);
RatPoly rp_sub(const RatPoly& a, const RatPoly& b);
// Exact division, throws NonInvertibleDivision on a nonzero remainder.
RatPoly rp_div_exact(const RatPoly& a, const RatPoly& b);

unsigned euler_phi(unsigned m);
unsigned lcm_u(unsigned a, unsigned b);

// m-th cyclotomic polynomial (monic, integer coefficients), cached.
const RatPoly& cyclotomic_poly(unsigned m);

/*
 * Element of the cyclotomic field Q(zeta_M) in the power basis
 * 1, z, ..., z^{phi(M)-1} of z = zeta_M reduced modulo Phi_M.
 * The order M is carried by the value; binary operations lift both
 * operands to lcm of their orders.
 */
class Cyc {
public:
    Cyc() : m_(1), c_(1) {}

    static Cyc zero(unsigned M);
    static Cyc one(unsigned M);
    static Cyc rational(const Rat& r, unsigned M = 1);
    static Cyc zeta_pow(unsigned M, long e);

    unsigned level() const { return m_; }
    const std::vector<Rat>& coeffs() const { return c_; }

    bool is_zero() const;
    bool is_one() const;
    bool is_rational(Rat* out = nullptr) const;

    Cyc lifted(unsigned M2) const; // requires level() | M2

    Cyc operator-() const;
    friend Cyc operator+(const Cyc& a, const Cyc& b);
    friend Cyc operator-(const Cyc& a, const Cyc& b);
    friend Cyc operator*(const Cyc& a, const Cyc& b);
    Cyc inverse() const; // DivisionByZero on zero
    bool operator==(const Cyc& b) const;
    bool operator!=(const Cyc& b) const { return !(*this == b); }

    std::string str() const; // e.g. "1-3/2*z^5"

private:
    unsigned m_;
    std::vector<Rat> c_; // size phi(m_)

    static Cyc from_raw(unsigned M, std::vector<Rat> raw); // reduces mod Phi_M
    friend struct CycTable;
};

} // namespace nichols
