#include "nichols/cyclotomic.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>

namespace nichols {

void rp_trim(RatPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

int rp_deg(const RatPoly& p) { return static_cast<int>(p.size()) - 1; }

RatPoly rp_mul(const RatPoly& a, const RatPoly& b) {
    if (a.empty() || b.empty()) return {};
    RatPoly r(a.size() + b.size() - 1, Rat(0));
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    rp_trim(r);
    return r;
}

RatPoly rp_sub(const RatPoly& a, const RatPoly& b) {
    RatPoly r = a;
    if (b.size() > r.size()) r.resize(b.size(), Rat(0));
    for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    rp_trim(r);
    return r;
}

static std::pair<RatPoly, RatPoly> rp_divmod(const RatPoly& a, const RatPoly& b) {
    if (b.empty()) fail(Err::DivisionByZero, "polynomial division by zero");
    RatPoly rem = a, quo;
    int db = rp_deg(b);
    if (rp_deg(rem) >= db) quo.assign(rem.size() - b.size() + 1, Rat(0));
    while (rp_deg(rem) >= db) {
        int k = rp_deg(rem) - db;
        Rat c = rem.back() / b.back();
        quo[k] = c;
        for (int i = 0; i <= db; ++i) rem[k + i] -= c * b[i];
        rp_trim(rem);
    }
    return {quo, rem};
}

RatPoly rp_div_exact(const RatPoly& a, const RatPoly& b) {
    auto [q, r] = rp_divmod(a, b);
    if (!r.empty()) fail(Err::NonInvertibleDivision, "polynomial division leaves a remainder");
    return q;
}

unsigned euler_phi(unsigned m) {
    unsigned result = m;
    for (unsigned p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            result -= result / p;
            while (m % p == 0) m /= p;
        }
    }
    if (m > 1) result -= result / m;
    return result;
}

unsigned lcm_u(unsigned a, unsigned b) { return a / std::gcd(a, b) * b; }

/* Per-order immutable context: Phi_M and the rows z^e mod Phi_M. */
struct CycTable {
    unsigned M = 1;
    unsigned phi = 1;
    RatPoly phi_poly;
    // rows[e - phi] = coefficients of z^e reduced mod Phi_M, length phi
    std::vector<std::vector<Rat>> rows;

    explicit CycTable(unsigned m) : M(m), phi(euler_phi(m)), phi_poly(cyclotomic_poly(m)) {
        unsigned top = std::max(2 * phi >= 2 ? 2 * phi - 2 : 0u, M >= 1 ? M - 1 : 0u);
        std::vector<Rat> cur(phi, Rat(0));
        if (phi >= 1) {
            // start at e = phi: z^phi = -(lower coefficients of Phi)
            for (unsigned j = 0; j < phi; ++j) cur[j] = -phi_poly[j];
            rows.push_back(cur);
            for (unsigned e = phi + 1; e <= top; ++e) {
                std::vector<Rat> nxt(phi, Rat(0));
                Rat lead = cur[phi - 1];
                for (unsigned j = phi; j-- > 1;) nxt[j] = cur[j - 1];
                nxt[0] = 0;
                if (lead != 0)
                    for (unsigned j = 0; j < phi; ++j) nxt[j] -= lead * phi_poly[j];
                rows.push_back(nxt);
                cur = nxt;
            }
        }
    }

    void reduce(std::vector<Rat>& raw) const {
        // fold exponents >= phi down into the power basis
        if (raw.size() > phi) {
            for (size_t e = raw.size(); e-- > phi;) {
                if (raw[e] == 0) continue;
                const auto& row = rows.at(e - phi);
                for (unsigned j = 0; j < phi; ++j) raw[j] += raw[e] * row[j];
                raw[e] = 0;
            }
        }
        raw.resize(phi, Rat(0));
    }
};

static std::mutex g_cyc_mutex;

static const RatPoly& cyclotomic_poly_locked(unsigned m, std::map<unsigned, RatPoly>& cache) {
    auto it = cache.find(m);
    if (it != cache.end()) return it->second;
    // x^m - 1 divided by Phi_d for all proper divisors d of m
    RatPoly num(m + 1, Rat(0));
    num[0] = -1;
    num[m] = 1;
    for (unsigned d = 1; d < m; ++d) {
        if (m % d != 0) continue;
        num = rp_div_exact(num, cyclotomic_poly_locked(d, cache));
    }
    return cache.emplace(m, std::move(num)).first->second;
}

const RatPoly& cyclotomic_poly(unsigned m) {
    if (m == 0) fail(Err::OutOfRange, "cyclotomic order must be positive");
    static std::map<unsigned, RatPoly> cache;
    std::lock_guard<std::mutex> lock(g_cyc_mutex);
    return cyclotomic_poly_locked(m, cache);
}

static const CycTable& cyc_table(unsigned m) {
    static std::map<unsigned, std::unique_ptr<CycTable>> cache;
    {
        std::lock_guard<std::mutex> lock(g_cyc_mutex);
        auto it = cache.find(m);
        if (it != cache.end()) return *it->second;
    }
    cyclotomic_poly(m); // build outside the table lock path
    auto table = std::make_unique<CycTable>(m);
    std::lock_guard<std::mutex> lock(g_cyc_mutex);
    auto [it, inserted] = cache.emplace(m, std::move(table));
    (void)inserted;
    return *it->second;
}

Cyc Cyc::zero(unsigned M) {
    Cyc c;
    c.m_ = M;
    c.c_.assign(cyc_table(M).phi, Rat(0));
    return c;
}

Cyc Cyc::one(unsigned M) {
    Cyc c = zero(M);
    c.c_[0] = 1;
    return c;
}

Cyc Cyc::rational(const Rat& r, unsigned M) {
    Cyc c = zero(M);
    c.c_[0] = r;
    return c;
}

Cyc Cyc::zeta_pow(unsigned M, long e) {
    const auto& t = cyc_table(M);
    long r = e % static_cast<long>(M);
    if (r < 0) r += M;
    std::vector<Rat> raw(static_cast<size_t>(r) + 1, Rat(0));
    raw[static_cast<size_t>(r)] = 1;
    t.reduce(raw);
    Cyc c;
    c.m_ = M;
    c.c_ = std::move(raw);
    return c;
}

Cyc Cyc::from_raw(unsigned M, std::vector<Rat> raw) {
    cyc_table(M).reduce(raw);
    Cyc c;
    c.m_ = M;
    c.c_ = std::move(raw);
    return c;
}

bool Cyc::is_zero() const {
    for (const auto& x : c_)
        if (x != 0) return false;
    return true;
}

bool Cyc::is_one() const {
    if (c_[0] != 1) return false;
    for (size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0) return false;
    return true;
}

bool Cyc::is_rational(Rat* out) const {
    for (size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0) return false;
    if (out) *out = c_[0];
    return true;
}

Cyc Cyc::lifted(unsigned M2) const {
    if (M2 == m_) return *this;
    if (M2 % m_ != 0) fail(Err::OutOfRange, "cyclotomic lift requires a multiple order");
    unsigned k = M2 / m_;
    std::vector<Rat> raw(static_cast<size_t>(c_.size() - 1) * k + 1, Rat(0));
    for (size_t i = 0; i < c_.size(); ++i) raw[i * k] = c_[i];
    return from_raw(M2, std::move(raw));
}

Cyc Cyc::operator-() const {
    Cyc r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
}

Cyc operator+(const Cyc& a, const Cyc& b) {
    unsigned M = lcm_u(a.m_, b.m_);
    Cyc x = a.lifted(M), y = b.lifted(M);
    for (size_t i = 0; i < x.c_.size(); ++i) x.c_[i] += y.c_[i];
    return x;
}

Cyc operator-(const Cyc& a, const Cyc& b) { return a + (-b); }

Cyc operator*(const Cyc& a, const Cyc& b) {
    unsigned M = lcm_u(a.m_, b.m_);
    Cyc x = a.lifted(M), y = b.lifted(M);
    size_t n = x.c_.size();
    std::vector<Rat> raw(2 * n - 1, Rat(0));
    for (size_t i = 0; i < n; ++i) {
        if (x.c_[i] == 0) continue;
        for (size_t j = 0; j < n; ++j) {
            if (y.c_[j] == 0) continue;
            raw[i + j] += x.c_[i] * y.c_[j];
        }
    }
    return Cyc::from_raw(M, std::move(raw));
}

Cyc Cyc::inverse() const {
    if (is_zero()) fail(Err::DivisionByZero, "inverse of zero in cyclotomic field");
    // extended Euclid of (this, Phi_M) over Q
    const auto& t = cyc_table(m_);
    RatPoly r0 = t.phi_poly, r1(c_.begin(), c_.end());
    rp_trim(r1);
    RatPoly s0 = {}, s1 = {Rat(1)}; // coefficients of `this` in the Bezout identity
    while (true) {
        auto [q, r2] = rp_divmod(r0, r1);
        if (r2.empty()) break;
        RatPoly s2 = rp_sub(s0, rp_mul(q, s1));
        r0 = std::move(r1);
        r1 = std::move(r2);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    // r1 is a gcd; for an element coprime to Phi_M it is a nonzero constant
    if (rp_deg(r1) != 0) fail(Err::NonInvertibleDivision, "element not invertible mod Phi_M");
    Rat lead = r1[0];
    std::vector<Rat> raw(s1.begin(), s1.end());
    for (auto& x : raw) x /= lead;
    return from_raw(m_, std::move(raw));
}

bool Cyc::operator==(const Cyc& b) const {
    unsigned M = lcm_u(m_, b.m_);
    Cyc x = lifted(M), y = b.lifted(M);
    return x.c_ == y.c_;
}

std::string Cyc::str() const {
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        Rat a = c_[i];
        if (first) {
            if (a < 0) { os << "-"; a = -a; }
        } else {
            os << (a < 0 ? "-" : "+");
            if (a < 0) a = -a;
        }
        first = false;
        if (i == 0) {
            os << a.get_str();
        } else {
            if (a != 1) os << a.get_str() << "*";
            os << "z";
            if (i > 1) os << "^" << i;
        }
    }
    if (first) os << "0";
    return os.str();
}

} // namespace nichols
