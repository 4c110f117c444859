#include "nichols/scalar.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace nichols {

/* ---- polynomials over Q(zeta_M), all coefficients at the same level ---- */

namespace {

using CPoly = std::vector<Cyc>;

void cp_trim(CPoly& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

int cp_deg(const CPoly& p) { return static_cast<int>(p.size()) - 1; }

CPoly cp_mul(const CPoly& a, const CPoly& b, unsigned M) {
    if (a.empty() || b.empty()) return {};
    CPoly r(a.size() + b.size() - 1, Cyc::zero(M));
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (size_t j = 0; j < b.size(); ++j) {
            if (b[j].is_zero()) continue;
            r[i + j] = r[i + j] + a[i] * b[j];
        }
    }
    cp_trim(r);
    return r;
}

CPoly cp_add(const CPoly& a, const CPoly& b, unsigned M) {
    CPoly r = a;
    if (b.size() > r.size()) r.resize(b.size(), Cyc::zero(M));
    for (size_t i = 0; i < b.size(); ++i) r[i] = r[i] + b[i];
    cp_trim(r);
    return r;
}

std::pair<CPoly, CPoly> cp_divmod(const CPoly& a, const CPoly& b, unsigned M) {
    if (b.empty()) fail(Err::DivisionByZero, "division by the zero polynomial");
    CPoly rem = a, quo;
    int db = cp_deg(b);
    Cyc lead_inv = b.back().inverse();
    if (cp_deg(rem) >= db) quo.assign(rem.size() - b.size() + 1, Cyc::zero(M));
    while (cp_deg(rem) >= db) {
        int k = cp_deg(rem) - db;
        Cyc c = rem.back() * lead_inv;
        quo[static_cast<size_t>(k)] = c;
        for (int i = 0; i <= db; ++i)
            rem[static_cast<size_t>(k + i)] = rem[static_cast<size_t>(k + i)] - c * b[static_cast<size_t>(i)];
        cp_trim(rem);
    }
    return {quo, rem};
}

CPoly cp_monic(CPoly p) {
    if (p.empty()) return p;
    if (p.back().is_one()) return p;
    Cyc inv = p.back().inverse();
    for (auto& c : p) c = c * inv;
    return p;
}

CPoly cp_gcd(CPoly a, CPoly b, unsigned M) {
    cp_trim(a);
    cp_trim(b);
    while (!b.empty()) {
        auto [q, r] = cp_divmod(a, b, M);
        (void)q;
        a = std::move(b);
        b = cp_monic(std::move(r));
    }
    return cp_monic(std::move(a));
}

CPoly cp_lift(const CPoly& a, unsigned M2) {
    CPoly r;
    r.reserve(a.size());
    for (const auto& c : a) r.push_back(c.lifted(M2));
    return r;
}

} // namespace

/* ---- Scalar ---- */

Scalar Scalar::make(unsigned M, std::vector<Cyc> num, std::vector<Cyc> den) {
    Scalar s;
    s.m_ = M;
    s.num_ = std::move(num);
    s.den_ = std::move(den);
    s.normalize();
    return s;
}

void Scalar::normalize() {
    cp_trim(num_);
    cp_trim(den_);
    if (den_.empty()) fail(Err::DivisionByZero, "zero denominator");
    if (num_.empty()) {
        den_ = {Cyc::one(m_)};
        return;
    }
    if (cp_deg(den_) > 0 || cp_deg(num_) > 0) {
        CPoly g = cp_gcd(num_, den_, m_);
        if (cp_deg(g) > 0) {
            num_ = cp_divmod(num_, g, m_).first;
            den_ = cp_divmod(den_, g, m_).first;
        }
    }
    if (!den_.back().is_one()) {
        Cyc inv = den_.back().inverse();
        for (auto& c : num_) c = c * inv;
        for (auto& c : den_) c = c * inv;
    }
}

Scalar Scalar::zero(unsigned M) { return make(M, {}, {Cyc::one(M)}); }

Scalar Scalar::one(unsigned M) { return make(M, {Cyc::one(M)}, {Cyc::one(M)}); }

Scalar Scalar::from_int(long v) { return from_rational(Rat(v)); }

Scalar Scalar::from_rational(const Rat& r) { return make(1, {Cyc::rational(r, 1)}, {Cyc::one(1)}); }

Scalar Scalar::from_cyc(const Cyc& c) { return make(c.level(), {c}, {Cyc::one(c.level())}); }

Scalar Scalar::q_power(long e) {
    if (e >= 0) {
        CPoly num(static_cast<size_t>(e) + 1, Cyc::zero(1));
        num.back() = Cyc::one(1);
        return make(1, std::move(num), {Cyc::one(1)});
    }
    CPoly den(static_cast<size_t>(-e) + 1, Cyc::zero(1));
    den.back() = Cyc::one(1);
    return make(1, {Cyc::one(1)}, std::move(den));
}

Scalar Scalar::root_of_unity(unsigned N, long k) {
    if (N == 0) fail(Err::OutOfRange, "root of unity order must be positive");
    return from_cyc(Cyc::zeta_pow(N, k));
}

Scalar Scalar::monomial(const Rat& coef, unsigned M, long zexp, long qexp) {
    Scalar s = from_cyc(Cyc::zeta_pow(M, zexp));
    s = s * from_rational(coef);
    return s * q_power(qexp);
}

bool Scalar::is_one() const {
    return num_.size() == 1 && den_.size() == 1 && num_[0].is_one() && den_[0].is_one();
}

bool Scalar::is_constant() const { return num_.size() <= 1 && den_.size() == 1; }

Cyc Scalar::constant_value() const {
    if (!is_constant()) fail(Err::OutOfRange, "scalar depends on q");
    if (num_.empty()) return Cyc::zero(m_);
    return num_[0] * den_[0].inverse();
}

std::optional<Scalar::Monomial> Scalar::as_monomial() const {
    if (is_zero()) return std::nullopt;
    size_t nn = 0, nc = 0;
    for (const auto& c : num_)
        if (!c.is_zero()) ++nn;
    for (const auto& c : den_)
        if (!c.is_zero()) ++nc;
    if (nn != 1 || nc != 1) return std::nullopt;
    long ne = cp_deg(num_), de = cp_deg(den_);
    return Monomial{num_.back() * den_.back().inverse(), ne - de};
}

Scalar Scalar::lifted(unsigned M2) const {
    if (M2 == m_) return *this;
    Scalar s;
    s.m_ = M2;
    s.num_ = cp_lift(num_, M2);
    s.den_ = cp_lift(den_, M2);
    return s;
}

Scalar Scalar::operator-() const {
    Scalar s = *this;
    for (auto& c : s.num_) c = -c;
    return s;
}

Scalar operator+(const Scalar& a, const Scalar& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    unsigned M = lcm_u(a.m_, b.m_);
    Scalar x = a.lifted(M), y = b.lifted(M);
    if (x.is_constant() && y.is_constant()) {
        Cyc c = x.num_.empty() ? Cyc::zero(M) : x.num_[0];
        Cyc d = y.num_.empty() ? Cyc::zero(M) : y.num_[0];
        Cyc s = c + d;
        if (s.is_zero()) return Scalar::zero(M);
        return Scalar::make(M, {std::move(s)}, {Cyc::one(M)});
    }
    CPoly num = cp_add(cp_mul(x.num_, y.den_, M), cp_mul(y.num_, x.den_, M), M);
    CPoly den = cp_mul(x.den_, y.den_, M);
    return Scalar::make(M, std::move(num), std::move(den));
}

Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }

Scalar operator*(const Scalar& a, const Scalar& b) {
    if (a.is_zero() || b.is_zero()) return Scalar::zero(lcm_u(a.m_, b.m_));
    unsigned M = lcm_u(a.m_, b.m_);
    Scalar x = a.lifted(M), y = b.lifted(M);
    if (x.is_constant() && y.is_constant()) {
        return Scalar::make(M, {x.num_[0] * y.num_[0]}, {Cyc::one(M)});
    }
    CPoly num = cp_mul(x.num_, y.num_, M);
    CPoly den = cp_mul(x.den_, y.den_, M);
    return Scalar::make(M, std::move(num), std::move(den));
}

Scalar Scalar::inverse() const {
    if (is_zero()) fail(Err::DivisionByZero, "inverse of zero");
    return make(m_, den_, num_);
}

Scalar operator/(const Scalar& a, const Scalar& b) {
    if (b.is_zero()) fail(Err::DivisionByZero, "division by zero");
    return a * b.inverse();
}

Scalar Scalar::pow(long e) const {
    if (e == 0) return Scalar::one(m_);
    Scalar base = e > 0 ? *this : inverse();
    unsigned long n = static_cast<unsigned long>(e > 0 ? e : -e);
    Scalar acc = Scalar::one(m_);
    while (n) {
        if (n & 1) acc = acc * base;
        base = (n >>= 1) ? base * base : base;
    }
    return acc;
}

bool Scalar::operator==(const Scalar& b) const {
    unsigned M = lcm_u(m_, b.m_);
    Scalar x = lifted(M), y = b.lifted(M);
    if (x.num_.size() != y.num_.size() || x.den_.size() != y.den_.size()) return false;
    for (size_t i = 0; i < x.num_.size(); ++i)
        if (x.num_[i] != y.num_[i]) return false;
    for (size_t i = 0; i < x.den_.size(); ++i)
        if (x.den_[i] != y.den_[i]) return false;
    return true;
}

std::optional<ZetaMonomial> as_zeta_monomial(const Scalar& s) {
    auto m = s.as_monomial();
    if (!m) return std::nullopt;
    unsigned M = m->coeff.level();
    for (unsigned k = 0; k < M; ++k) {
        Cyc w = m->coeff * Cyc::zeta_pow(M, -static_cast<long>(k));
        const auto& v = w.coeffs();
        bool pure = true;
        for (size_t i = 1; i < v.size(); ++i)
            if (v[i] != 0) {
                pure = false;
                break;
            }
        if (pure) return ZetaMonomial{v.empty() ? Rat(0) : v[0], k, m->qexp};
    }
    return std::nullopt;
}

static void render_poly(std::ostringstream& os, const std::vector<Cyc>& p) {
    bool first = true;
    for (size_t i = 0; i < p.size(); ++i) {
        if (p[i].is_zero()) continue;
        std::string cs = p[i].str();
        if (!first) os << " + ";
        first = false;
        bool plain = (cs.find('+') == std::string::npos && cs.find('-', 1) == std::string::npos);
        if (i == 0) {
            os << cs;
        } else {
            if (!(plain && cs == "1")) {
                if (plain)
                    os << cs << "*";
                else
                    os << "(" << cs << ")*";
            }
            os << "q";
            if (i > 1) os << "^" << i;
        }
    }
    if (first) os << "0";
}

std::string Scalar::str() const {
    if (is_zero()) return "0";
    if (auto zm = as_zeta_monomial(*this)) {
        const Rat& r = zm->coeff;
        unsigned e = zm->zexp;
        std::ostringstream os;
        bool wrote = false;
        if (r == -1 && (e != 0 || zm->qexp != 0)) {
            os << "-";
        } else if (r != 1 || (e == 0 && zm->qexp == 0)) {
            os << r.get_str();
            wrote = true;
        }
        if (e != 0) {
            if (wrote) os << "*";
            os << "z";
            if (e != 1) os << "^" << e;
            wrote = true;
        }
        if (zm->qexp != 0) {
            if (wrote) os << "*";
            os << "q";
            if (zm->qexp != 1) os << "^" << zm->qexp;
        }
        return os.str();
    }
    std::ostringstream os;
    if (den_.size() == 1 && den_[0].is_one()) {
        render_poly(os, num_);
    } else {
        os << "(";
        render_poly(os, num_);
        os << ")/(";
        render_poly(os, den_);
        os << ")";
    }
    return os.str();
}

std::string Scalar::key() const {
    std::ostringstream os;
    os << m_ << "|";
    auto dump = [&os](const std::vector<Cyc>& p) {
        for (const auto& c : p) {
            for (const auto& r : c.coeffs()) os << r.get_str() << ",";
            os << ";";
        }
    };
    dump(num_);
    os << "|";
    dump(den_);
    return os.str();
}

/* ---- literal parsing ---- */

Scalar Scalar::parse(const std::string& literal, unsigned M) {
    size_t pos = 0;
    std::string s;
    for (char ch : literal)
        if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
    auto parse_fail = [&](const std::string& why) -> void {
        fail(Err::ParseError, "'" + literal + "' at " + std::to_string(pos) + ": " + why);
    };
    auto peek = [&]() -> int { return pos < s.size() ? s[pos] : -1; };
    auto parse_int = [&](bool allow_sign) -> long {
        size_t start = pos;
        if (allow_sign && (peek() == '-' || peek() == '+')) ++pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start || (pos == start + 1 && !std::isdigit(static_cast<unsigned char>(s[start]))))
            parse_fail("expected integer");
        return std::stol(s.substr(start, pos - start));
    };

    bool neg = false;
    if (peek() == '-') {
        neg = true;
        ++pos;
    }
    Rat coef(1);
    bool any = false;
    if (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
        long numpart = parse_int(false);
        long denpart = 1;
        if (peek() == '/') {
            ++pos;
            denpart = parse_int(false);
            if (denpart == 0) parse_fail("zero denominator");
        }
        coef = Rat(numpart, denpart);
        coef.canonicalize();
        any = true;
        if (peek() == '*') ++pos;
    }
    long zexp = 0, qexp = 0;
    if (peek() == 'z') {
        ++pos;
        zexp = 1;
        if (peek() == '^') {
            ++pos;
            zexp = parse_int(true);
        }
        any = true;
        if (peek() == '*') ++pos;
    }
    if (peek() == 'q') {
        ++pos;
        qexp = 1;
        if (peek() == '^') {
            ++pos;
            qexp = parse_int(true);
        }
        any = true;
    }
    if (!any) parse_fail("empty literal");
    if (pos != s.size()) parse_fail("trailing characters");
    if (neg) coef = -coef;
    return monomial(coef, M, zexp, qexp);
}

/* ---- order and q-combinatorics ---- */

Order order_of(const Scalar& a) {
    if (a.is_zero()) fail(Err::ZeroInput, "order of zero is undefined");
    if (!a.is_constant()) return {Order::Infinite, 0};
    Cyc c = a.constant_value();
    if (c.is_one()) return {Order::Finite, 1};
    unsigned bound = lcm_u(2, a.level());
    Cyc p = c;
    for (unsigned n = 1; n <= bound; ++n) {
        if (p.is_one()) return {Order::Finite, n};
        p = p * c;
    }
    return {Order::NotRootOfUnity, 0};
}

Scalar q_int(unsigned n, const Scalar& a) {
    Scalar r = Scalar::zero(a.level());
    for (unsigned j = 0; j < n; ++j) r = r * a + Scalar::one(a.level());
    return r;
}

Scalar q_factorial(unsigned n, const Scalar& a) { return q_int_product(1, n, a); }

Scalar q_int_product(unsigned lo, unsigned hi, const Scalar& a) {
    Scalar r = Scalar::one(a.level());
    for (unsigned j = lo; j <= hi; ++j) r = r * q_int(j, a);
    return r;
}

Scalar q_binomial(unsigned k, unsigned i, const Scalar& a) {
    if (i > k) fail(Err::OutOfRange, "binomial index out of range");
    // product-of-ratios over Q[x]: b_j = b_{j-1} * (k-i+j)_x / (j)_x stays polynomial
    auto qint_poly = [](unsigned n) {
        RatPoly p(n, Rat(1));
        return p;
    };
    RatPoly b = {Rat(1)};
    for (unsigned j = 1; j <= i; ++j) b = rp_div_exact(rp_mul(b, qint_poly(k - i + j)), qint_poly(j));
    // evaluate at a by Horner
    Scalar r = Scalar::zero(a.level());
    for (size_t t = b.size(); t-- > 0;) r = r * a + Scalar::from_rational(b[t]);
    return r;
}

Scalar mu(unsigned k, const Scalar& q11, const Scalar& qt12) {
    Scalar r = Scalar::one(lcm_u(q11.level(), qt12.level()));
    Scalar p = Scalar::one(q11.level());
    for (unsigned i = 0; i < k; ++i) {
        r = r * (Scalar::one() - p * qt12);
        p = p * q11;
    }
    return r;
}

} // namespace nichols
