#include "nichols/rank2.hpp"

#include <random>
#include <sstream>
#include <utility>

#include "nichols/error.hpp"
#include "nichols/groupoid.hpp"

namespace nichols {

namespace {

Scalar one() { return Scalar::one(); }

// y_k != 0 in the Nichols algebra iff (k)!_{q11} mu_k != 0
bool y_nonzero(unsigned k, const Scalar& q11, const Scalar& qt) {
    return !(q_factorial(k, q11) * mu(k, q11, qt)).is_zero();
}

} // namespace

Rank2Params Rank2Params::of(const BraidingMatrix& m) {
    if (m.theta() != 2) fail(Err::BadInput, "rank-2 parameters need theta == 2");
    return {m.at(0, 0), m.at(0, 1), m.at(1, 0), m.at(1, 1)};
}

BraidingMatrix Rank2Params::matrix() const {
    return BraidingMatrix::raw(2, {q11, q12, q21, q22});
}

Scalar Rank2Params::qt12() const { return q12 * q21; }

Scalar Rank2Params::p(unsigned mm) const {
    return q11.pow(long(mm) * long(mm)) * qt12().pow(long(mm)) * q22;
}

Scalar d_t(unsigned n, unsigned t, const Rank2Params& params) {
    if (n == 0) fail(Err::OutOfRange, "d_t needs n >= 1");
    Scalar q = params.p(n);
    Order ord = order_of(q);
    if (!ord.finite() || ord.value < 2)
        fail(Err::OrderUndefined, "p_n must be a root of unity of order >= 2");
    unsigned N = ord.value;
    if (t < 1 || t > N - 1) fail(Err::OutOfRange, "t must lie in [1, N-1]");
    Scalar tq = q_int(t, q);
    if (tq.is_zero()) fail(Err::DivisionByZero, "(t)_q vanishes");
    Scalar qt = params.qt12();
    return one() - q.pow(t + 1) * params.q11.pow(2L * n) * qt
        + q.pow(t) * (one() - params.q11.pow(n) * qt) * q_int(n + 1, params.q11) / tq;
}

Scalar wm_condition(unsigned mm, const Rank2Params& params) {
    Scalar q11 = params.q11, qt = params.qt12();
    Scalar pm = params.p(mm), pm1 = params.p(mm + 1);
    Scalar den = (one() + q11) * (one() + pm1);
    if (den.is_zero())
        fail(Err::DenominatorVanishes, "(1+q11)(1+p_{m+1}) vanishes");
    Scalar ratio = pm1 / q11;
    Scalar inner = one() + ratio
        + pm * q_int_product(mm + 1, mm + 2, q11) * (one() - q11.pow(mm) * qt)
              * (one() - q11.pow(mm + 1) * qt) / den;
    return (one() - ratio) * inner;
}

bool w0_vanishes(const Rank2Params& params) {
    Scalar qt = params.qt12();
    if (!y_nonzero(2, params.q11, qt))
        fail(Err::HypothesisViolated, "y_2 = 0");
    if ((params.p(1) + one()).is_zero())
        fail(Err::HypothesisViolated, "p_1 = -1");
    Scalar v = (qt * params.q22 - one()) * (params.q22 + one())
        * (params.q11 * qt.pow(2) * params.q22 + one());
    return v.is_zero();
}

bool w1_vanishes(const Rank2Params& params, W1Branch branch) {
    Scalar q11 = params.q11, qt = params.qt12(), q22 = params.q22;
    if (!y_nonzero(3, q11, qt))
        fail(Err::HypothesisViolated, "y_3 = 0");
    if ((params.p(2) + one()).is_zero())
        fail(Err::HypothesisViolated, "p_2 = -1");
    Scalar common = one() - q11.pow(3) * qt;
    switch (branch) {
    case W1Branch::Q22MinusOne:
        if (!(q22 + one()).is_zero())
            fail(Err::HypothesisViolated, "q22 != -1");
        return (common * (q11.pow(3) * qt.pow(2) + one()) * q_int(3, -(q11 * qt)))
            .is_zero();
    case W1Branch::QtQ22One:
        if (!(qt * q22).is_one())
            fail(Err::HypothesisViolated, "qt12 q22 != 1");
        return (common * (q11.pow(2) + one()) * q_int(3, -(q11.pow(2) * qt))).is_zero();
    case W1Branch::CentralMinusOne:
        if (!(q11 * qt.pow(2) * q22 + one()).is_zero())
            fail(Err::HypothesisViolated, "q11 qt12^2 q22 != -1");
        return (common * (q11.pow(2) + one())).is_zero();
    }
    fail(Err::BadInput, "unknown branch");
}

RootCriteria root_criteria(unsigned n, const Rank2Params& params) {
    if (n == 0) fail(Err::OutOfRange, "root criteria need n >= 1");
    Scalar q = params.p(n);
    Order ord = order_of(q);
    if (!ord.finite() || ord.value < 2)
        fail(Err::OrderUndefined, "p_n must be a root of unity of order >= 2");

    RootCriteria rc;
    rc.n = n;
    rc.N = ord.value;
    Scalar qt = params.qt12();
    rc.next_y_nonzero = y_nonzero(n + 1, params.q11, qt);
    rc.all_d_nonzero = true;
    for (unsigned t = 1; t + 1 < rc.N; ++t) {
        rc.d.push_back(d_t(n, t, params));
        if (rc.d.back().is_zero()) rc.all_d_nonzero = false;
    }
    rc.big_root = rc.all_d_nonzero && rc.next_y_nonzero;
    rc.q_at_big_root = q.pow(long(rc.N) * long(rc.N));
    rc.infinite_by_weight_one = rc.big_root && rc.q_at_big_root.is_one();
    rc.yy2_scalar = (q + one()).is_zero();
    rc.double_root = rc.yy2_scalar && rc.next_y_nonzero;
    rc.yy1_scalar =
        (params.q11.pow(long(n) * long(n + 1)) * qt.pow(n + 1) * params.q22).is_one();
    return rc;
}

/* ---------------- verification suites ---------------- */

bool SuiteReport::all_pass() const {
    for (const auto& l : lines)
        if (!l.pass) return false;
    return true;
}

nlohmann::json SuiteReport::to_json() const {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& l : lines)
        rows.push_back({{"label", l.label},
                        {"relation", l.relation},
                        {"evaluation", l.evaluation},
                        {"pass", l.pass}});
    return {{"suite", suite}, {"all_pass", all_pass()}, {"lines", rows}};
}

std::string SuiteReport::table() const {
    std::ostringstream out;
    out << "suite " << suite << "\n";
    size_t w = 5;
    for (const auto& l : lines) w = std::max(w, l.label.size());
    for (const auto& l : lines) {
        out << "  " << l.label << std::string(w - l.label.size() + 2, ' ')
            << (l.pass ? "pass" : "FAIL") << "  " << l.relation << "  ["
            << l.evaluation << "]\n";
    }
    out << "  => " << (all_pass() ? "all lines pass" : "some line FAILED") << "\n";
    return out.str();
}

namespace {

// One displayed table row: optional embedded equalities, then lhs != rhs.
struct TableRow {
    unsigned t;
    std::string relation;
    std::vector<std::pair<Scalar, Scalar>> equal;
    Scalar lhs, rhs;
};

SuiteReport run_dt_table(const std::string& name, const Rank2Params& params,
                         unsigned n, const char* prefix,
                         const std::vector<TableRow>& rows) {
    SuiteReport rep;
    rep.suite = name;
    for (const auto& row : rows) {
        SuiteLine line;
        line.label = prefix + std::to_string(row.t);
        line.relation = row.relation;
        bool ok = row.lhs != row.rhs;
        for (const auto& [a, b] : row.equal) ok = ok && a == b;
        Scalar dt = d_t(n, row.t, params);
        ok = ok && !dt.is_zero();
        line.pass = ok;
        line.evaluation = "lhs = " + row.lhs.str() + ", rhs = " + row.rhs.str()
            + ", d = " + dt.str();
        rep.lines.push_back(std::move(line));
    }
    return rep;
}

// q11 = r of order 8, qt12 = r^-3, q22 = r: the two-sided forms cleared from
// d_t = 0 <=> (1-r^{7t+6})(1-r^{7t}) = 2 r^{7t+7}, with the intermediate
// simplifications spelled out on the even rows.
SuiteReport suite_aij3_g8() {
    Scalar r = Scalar::root_of_unity(8, 1);
    Rank2Params params{r, r.pow(-3), one(), r};
    auto f = [&](long a, long b) { return (one() - r.pow(a)) * (one() - r.pow(b)); };
    Scalar two = Scalar::from_int(2);
    std::vector<TableRow> rows;
    rows.push_back({1, "(1-r^5)(1-r^7) != 2r^6", {}, f(5, 7), two * r.pow(6)});
    rows.push_back({2, "(1-r^4)(1-r^6) = 2(1-r^6) != 2r^5",
                    {{f(4, 6), two * (one() - r.pow(6))}}, f(4, 6), two * r.pow(5)});
    rows.push_back({3, "(1-r^3)(1-r^5) != 2r^4", {}, f(3, 5), two * r.pow(4)});
    rows.push_back({4, "(1-r^2)(1-r^4) = 2(1-r^2) != 2r^3",
                    {{f(2, 4), two * (one() - r.pow(2))}}, f(2, 4), two * r.pow(3)});
    rows.push_back({5, "(1-r)(1-r^3) != 2r^2", {}, f(1, 3), two * r.pow(2)});
    rows.push_back({6, "(1-1)(1-r^2) = 0 != 2r",
                    {{f(0, 2), Scalar::zero()}}, f(0, 2), two * r});
    return run_dt_table("aij3/G8", params, 1, "t=", rows);
}

// q11 = r^17 of the primitive 24th root r, qt12 = r^-3, q22 = r:
// d_t = 0 <=> (1-r^{15t-2})(1-r^{15t}) = -r^{15t} (1+r^2)(1+r^17)(1+r^3).
SuiteReport suite_aij3_g24() {
    Scalar r = Scalar::root_of_unity(24, 1);
    Rank2Params params{r.pow(17), r.pow(-3), one(), r};
    Scalar P = (one() + r.pow(2)) * (one() + r.pow(17)) * (one() + r.pow(3));
    auto f = [&](long a, long b) { return (one() - r.pow(a)) * (one() - r.pow(b)); };
    Scalar two = Scalar::from_int(2);
    std::string ptxt = "(1+r^2)(1+r^17)(1+r^3)";
    std::vector<TableRow> rows;
    rows.push_back({1, "(1-r^13)(1-r^15) != r^3 " + ptxt, {}, f(13, 15), r.pow(3) * P});
    rows.push_back({2, "(1-r^4)(1-r^6) != r^18 " + ptxt, {}, f(4, 6), r.pow(18) * P});
    rows.push_back({3, "(1-r^19)(1-r^21) != r^9 " + ptxt, {}, f(19, 21), r.pow(9) * P});
    rows.push_back({4, "2(1-r^10) != " + ptxt, {}, two * (one() - r.pow(10)), P});
    rows.push_back({5, "(1-r)(1-r^3) != r^15 " + ptxt, {}, f(1, 3), r.pow(15) * P});
    rows.push_back({6, "(1-r^16)(1-r^18) != r^6 " + ptxt, {}, f(16, 18), r.pow(6) * P});
    return run_dt_table("aij3/G24", params, 1, "t=", rows);
}

// q11 = -r^5 with r a primitive 20th root, qt12 = r^-3, q22 = r:
// d_t = 0 <=> (1-r^{13t})^2 = r^{13t+5} (1+r^2)(1+r^5)(1+r^3).
SuiteReport suite_aij3_g20() {
    Scalar r = Scalar::root_of_unity(20, 1);
    Rank2Params params{-r.pow(5), r.pow(-3), one(), r};
    Scalar P = (one() + r.pow(2)) * (one() + r.pow(5)) * (one() + r.pow(3));
    std::string ptxt = "(1+r^2)(1+r^5)(1+r^3)";
    Scalar two = Scalar::from_int(2), four = Scalar::from_int(4);
    auto sq = [&](Scalar s) { return s * s; };
    auto pl = [&](long a) { return one() + r.pow(a); };
    auto mi = [&](long a) { return one() - r.pow(a); };
    std::vector<TableRow> rows;
    rows.push_back({1, "(1+r^3)^2 != r^18 " + ptxt, {}, sq(pl(3)), r.pow(18) * P});
    rows.push_back({2, "(1-r^6)^2 != r^11 " + ptxt, {}, sq(mi(6)), r.pow(11) * P});
    rows.push_back({3, "(1+r^9)^2 != r^4 " + ptxt, {}, sq(pl(9)), r.pow(4) * P});
    rows.push_back({4, "(1+r^2)^2 != r^17 " + ptxt, {}, sq(pl(2)), r.pow(17) * P});
    rows.push_back({5, "2r^15 != r^10 " + ptxt, {}, two * r.pow(15), r.pow(10) * P});
    rows.push_back({6, "(1+r^8)^2 != r^3 " + ptxt, {}, sq(pl(8)), r.pow(3) * P});
    rows.push_back({7, "(1+r)^2 != r^16 " + ptxt, {}, sq(pl(1)), r.pow(16) * P});
    rows.push_back({8, "(1-r^4)^2 != r^9 " + ptxt, {}, sq(mi(4)), r.pow(9) * P});
    rows.push_back({9, "(1+r^7)^2 != r^2 " + ptxt, {}, sq(pl(7)), r.pow(2) * P});
    rows.push_back({10, "4 != r^15 " + ptxt, {}, four, r.pow(15) * P});
    rows.push_back({11, "(1-r^3)^2 != r^8 " + ptxt, {}, sq(mi(3)), r.pow(8) * P});
    rows.push_back({12, "(1+r^6)^2 != r " + ptxt, {}, sq(pl(6)), r * P});
    rows.push_back({13, "(1-r^9)^2 != r^14 " + ptxt, {}, sq(mi(9)), r.pow(14) * P});
    rows.push_back({14, "(1-r^2)^2 != r^7 " + ptxt, {}, sq(mi(2)), r.pow(7) * P});
    rows.push_back({15, "2r^5 != " + ptxt, {}, two * r.pow(5), P});
    rows.push_back({16, "(1-r^8)^2 != r^13 " + ptxt, {}, sq(mi(8)), r.pow(13) * P});
    rows.push_back({17, "(1-r)^2 != r^6 " + ptxt, {}, sq(mi(1)), r.pow(6) * P});
    rows.push_back({18, "(1+r^4)^2 != r^19 " + ptxt, {}, sq(pl(4)), r.pow(19) * P});
    return run_dt_table("aij3/G20", params, 1, "t=", rows);
}

// q11 = r^10 with r a primitive 14th root, qt12 = r^12, q22 = r:
// d_t = 0 <=> (1-r^{9t+13})(1-r^{9t}) = r^{9t} (1+r)(r^3-1)(1+r^2).
SuiteReport suite_428_g14() {
    Scalar r = Scalar::root_of_unity(14, 1);
    Rank2Params params{r.pow(10), r.pow(12), one(), r};
    Scalar P = (one() + r) * (r.pow(3) - one()) * (one() + r.pow(2));
    std::string ptxt = "(1+r)(r^3-1)(1+r^2)";
    Scalar two = Scalar::from_int(2);
    auto pl = [&](long a) { return one() + r.pow(a); };
    auto mi = [&](long a) { return one() - r.pow(a); };
    std::vector<TableRow> rows;
    rows.push_back({1, "(1+r)(1+r^2) != r^9 " + ptxt, {}, pl(1) * pl(2), r.pow(9) * P});
    rows.push_back({2, "(1-r^3)(1-r^4) != r^4 " + ptxt, {}, mi(3) * mi(4), r.pow(4) * P});
    rows.push_back({3, "(1+r^5)(1+r^6) != r^13 " + ptxt, {}, pl(5) * pl(6), r.pow(13) * P});
    rows.push_back({4, "2(1+r) != r^8 " + ptxt, {}, two * pl(1), r.pow(8) * P});
    rows.push_back({5, "(1-r^2)(1-r^3) != r^3 " + ptxt, {}, mi(2) * mi(3), r.pow(3) * P});
    rows.push_back({6, "(1+r^4)(1+r^6) != r^12 " + ptxt, {}, pl(4) * pl(6), r.pow(12) * P});
    rows.push_back({7, "2(1-r^6) != -" + ptxt, {}, two * mi(6), -P});
    rows.push_back({8, "(1-r)(1-r^2) != r^2 " + ptxt, {}, mi(1) * mi(2), r.pow(2) * P});
    rows.push_back({9, "(1+r^3)(1+r^4) != r^11 " + ptxt, {}, pl(3) * pl(4), r.pow(11) * P});
    rows.push_back({10, "(1-r^5)(1-r^6) != r^6 " + ptxt, {}, mi(5) * mi(6), r.pow(6) * P});
    rows.push_back({11, "0 != r " + ptxt, {}, Scalar::zero(), r * P});
    rows.push_back({12, "(1+r^2)(1+r^3) != r^10 " + ptxt, {}, pl(2) * pl(3), r.pow(10) * P});
    return run_dt_table("4.2.8/G14", params, 1, "t=", rows);
}

// q11 = q a primitive 18th root, qt12 = q^-5, q22 = q^5, n = 3:
// d_l = 0 <=> q^{l+3} (1-q^{-l})^2 = (q^2-1)(q^4-1), checked for l = 1..16.
SuiteReport suite_426_g18() {
    Scalar q = Scalar::root_of_unity(18, 1);
    Rank2Params params{q, q.pow(-5), one(), q.pow(5)};
    Scalar rhs = (q.pow(2) - one()) * (q.pow(4) - one());
    std::vector<TableRow> rows;
    for (unsigned l = 1; l <= 16; ++l) {
        Scalar lhs = q.pow(long(l) + 3) * (one() - q.pow(-long(l))).pow(2);
        rows.push_back({l,
                        "q^" + std::to_string(l + 3) + "(1-q^-" + std::to_string(l)
                            + ")^2 != (q^2-1)(q^4-1)",
                        {}, lhs, rhs});
    }
    return run_dt_table("4.2.6/G18", params, 3, "l=", rows);
}

/* sampling for the closed forms of the wtilde_m criterion */

// Deterministic sampler independent of library distribution internals.
struct SampleRng {
    std::mt19937_64 eng;
    explicit SampleRng(uint64_t seed) : eng(seed) {}
    unsigned pick(unsigned lo, unsigned hi) {
        return lo + unsigned(eng() % (uint64_t(hi) - lo + 1));
    }
    long spick(long lo, long hi) { return lo + long(eng() % uint64_t(hi - lo + 1)); }
};

// Orders M from the base list whose composite with the branch's forced
// torsion (factor k) keeps the working field small: lcm <= 60 and
// phi(lcm) <= cap. Exact rational-function arithmetic over Q(zeta)(q) slows
// sharply with phi, so q-power samples are confined to small fields while
// pure torsion samples roam the whole list.
std::vector<unsigned> orders_for(unsigned k, unsigned cap_phi) {
    static const unsigned base[] = {1,  2,  3,  4,  5,  6,  7,  8,  9,  10,
                                    11, 12, 13, 14, 15, 16, 17, 18, 19, 20,
                                    21, 22, 23, 24, 30, 36, 40, 48, 60};
    std::vector<unsigned> out;
    for (unsigned M : base) {
        unsigned l = lcm_u(M, k);
        if (l <= 60 && euler_phi(l) <= cap_phi) out.push_back(M);
    }
    return out;
}

// Mode cycle per sample index: three torsion-only draws over the whole
// order list, one dual q-power draw in a phi <= 4 field, one single q-power
// draw in a phi <= 8 field.
unsigned phi_cap(unsigned mode) { return mode <= 2 ? 16 : (mode == 3 ? 4 : 8); }

Scalar draw_torsion(SampleRng& rng, unsigned k, unsigned cap) {
    std::vector<unsigned> list = orders_for(k, cap);
    unsigned M = list[rng.pick(0, unsigned(list.size() - 1))];
    return Scalar::monomial(Rat(1), M, rng.spick(0, long(M) - 1), 0);
}

// Two free parameters drawn in the same field.
void draw_pair(SampleRng& rng, unsigned mode, unsigned k, Scalar& a, Scalar& b) {
    unsigned cap = phi_cap(mode);
    std::vector<unsigned> list = orders_for(k, cap);
    unsigned M = list[rng.pick(0, unsigned(list.size() - 1))];
    a = Scalar::monomial(Rat(1), M, rng.spick(0, long(M) - 1), 0);
    b = Scalar::monomial(Rat(1), M, rng.spick(0, long(M) - 1), 0);
    if (mode == 3) {
        a = a * Scalar::q_power(rng.spick(-2, 2));
        b = b * Scalar::q_power(rng.spick(-2, 2));
    } else if (mode == 4) {
        Scalar e = Scalar::q_power(rng.spick(0, 1) != 0 ? 1 : -1);
        (rng.pick(0, 1) != 0 ? a : b) *= e;
    }
}

struct WmBranch {
    std::string label;
    std::string relation;
    unsigned m;
    unsigned k; // torsion factor the constraint forces into the field
    // draws (q11, qt12, q22); the braiding realizes qt12 as q12 with q21 = 1
    Scalar (*rhs)(const Scalar& q11, const Scalar& qt, const Scalar& q22);
    void (*draw)(SampleRng& rng, unsigned idx, unsigned k, Scalar& q11,
                 Scalar& qt, Scalar& q22);
    // denominators of the displayed right-hand side
    Scalar (*guard)(const Scalar& q11, const Scalar& qt, const Scalar& q22);
};

const WmBranch wm_branches[] = {
    {"i", "m=0: (1+q22)(1-qt*q22)(1+q11*qt^2*q22) / (1+q11*qt*q22)", 0, 1,
     [](const Scalar& q11, const Scalar& qt, const Scalar& q22) {
         return (one() + q22) * (one() - qt * q22)
             * (one() + q11 * qt.pow(2) * q22) / (one() + q11 * qt * q22);
     },
     [](SampleRng& rng, unsigned idx, unsigned k, Scalar& q11, Scalar& qt,
        Scalar& q22) {
         unsigned mode = idx % 5;
         draw_pair(rng, mode, k, q11, qt);
         q22 = draw_torsion(rng, k, phi_cap(mode));
         if (mode == 3) q22 *= Scalar::q_power(rng.spick(-2, 2));
     },
     [](const Scalar& q11, const Scalar& qt, const Scalar& q22) {
         return one() + q11 * qt * q22;
     }},
    {"ii", "m=1, q22=-1: (1+q11^3*qt^2)(1-q11^3*qt)(3)_{-q11*qt} / (1+q11^2*qt)", 1,
     2,
     [](const Scalar& q11, const Scalar& qt, const Scalar&) {
         return (one() + q11.pow(3) * qt.pow(2)) * (one() - q11.pow(3) * qt)
             * q_int(3, -(q11 * qt)) / (one() + q11.pow(2) * qt);
     },
     [](SampleRng& rng, unsigned idx, unsigned k, Scalar& q11, Scalar& qt,
        Scalar& q22) {
         draw_pair(rng, idx % 5, k, q11, qt);
         q22 = -one();
     },
     [](const Scalar& q11, const Scalar& qt, const Scalar&) {
         return one() + q11.pow(2) * qt;
     }},
    {"iii", "m=1, qt*q22=1: (1-q11^3*qt)(4)_{q11}(3)_{-q11^2*qt} / (1+q11^4*qt)", 1,
     1,
     [](const Scalar& q11, const Scalar& qt, const Scalar&) {
         return (one() - q11.pow(3) * qt) * q_int(4, q11)
             * q_int(3, -(q11.pow(2) * qt)) / (one() + q11.pow(4) * qt);
     },
     [](SampleRng& rng, unsigned idx, unsigned k, Scalar& q11, Scalar& qt,
        Scalar& q22) {
         draw_pair(rng, idx % 5, k, q11, qt);
         q22 = qt.inverse();
     },
     [](const Scalar& q11, const Scalar& qt, const Scalar&) {
         return one() + q11.pow(4) * qt;
     }},
    {"iv", "m=1, q11*qt^2*q22=-1: (1+q11^2)(1-qt^-1)(1-q11^3*qt) / (1-q11)", 1, 2,
     [](const Scalar& q11, const Scalar& qt, const Scalar&) {
         return (one() + q11.pow(2)) * (one() - qt.inverse())
             * (one() - q11.pow(3) * qt) / (one() - q11);
     },
     [](SampleRng& rng, unsigned idx, unsigned k, Scalar& q11, Scalar& qt,
        Scalar& q22) {
         draw_pair(rng, idx % 5, k, q11, qt);
         q22 = -(q11 * qt.pow(2)).inverse();
     },
     [](const Scalar& q11, const Scalar&, const Scalar&) { return one() - q11; }},
    {"v",
     "m=2, q22=-1: (1+q11^8*qt^3)(1-q11^4*qt)(q11^10*qt^4+(q11^7+q11^6)*qt^3"
     "-(3)_{q11}*q11^4*qt^2+(q11^4+q11^3)*qt+1) / (3)_{q11^3*qt}",
     2, 2,
     [](const Scalar& q11, const Scalar& qt, const Scalar&) {
         Scalar big = q11.pow(10) * qt.pow(4)
             + (q11.pow(7) + q11.pow(6)) * qt.pow(3)
             - q_int(3, q11) * q11.pow(4) * qt.pow(2)
             + (q11.pow(4) + q11.pow(3)) * qt + one();
         return (one() + q11.pow(8) * qt.pow(3)) * (one() - q11.pow(4) * qt) * big
             / q_int(3, q11.pow(3) * qt);
     },
     [](SampleRng& rng, unsigned idx, unsigned k, Scalar& q11, Scalar& qt,
        Scalar& q22) {
         draw_pair(rng, idx % 5, k, q11, qt);
         q22 = -one();
     },
     [](const Scalar& q11, const Scalar& qt, const Scalar&) {
         return q_int(3, q11.pow(3) * qt);
     }},
    {"vi", "m=2, qt*q22=1, q11^2=-1: 1-qt^4", 2, 4,
     [](const Scalar&, const Scalar& qt, const Scalar&) { return one() - qt.pow(4); },
     [](SampleRng& rng, unsigned idx, unsigned k, Scalar& q11, Scalar& qt,
        Scalar& q22) {
         unsigned mode = idx % 5;
         q11 = Scalar::root_of_unity(4, rng.pick(0, 1) == 0 ? 1 : 3);
         qt = draw_torsion(rng, k, phi_cap(mode));
         if (mode == 3)
             qt *= Scalar::q_power(rng.spick(-2, 2));
         else if (mode == 4)
             qt *= Scalar::q_power(rng.spick(0, 1) != 0 ? 1 : -1);
         q22 = qt.inverse();
     },
     [](const Scalar&, const Scalar&, const Scalar&) { return one(); }},
    {"vii",
     "m=2, qt*q22=1, (3)_{-q11^2*qt}=0: "
     "(1+q11^4*qt)(1-q11^4*qt)(1-q11^5*qt)(5)_{q11}(3)_{-q11} / (1+q11^9*qt^2)",
     2, 6,
     [](const Scalar& q11, const Scalar& qt, const Scalar&) {
         return (one() + q11.pow(4) * qt) * (one() - q11.pow(4) * qt)
             * (one() - q11.pow(5) * qt) * q_int(5, q11) * q_int(3, -q11)
             / (one() + q11.pow(9) * qt.pow(2));
     },
     [](SampleRng& rng, unsigned idx, unsigned k, Scalar& q11, Scalar& qt,
        Scalar& q22) {
         // the constraint copies q-powers of q11 into qt and q22, so both
         // q-power modes stay in a phi <= 4 field
         unsigned mode = idx % 5;
         q11 = draw_torsion(rng, k, mode <= 2 ? 16 : 4);
         if (mode == 3)
             q11 *= Scalar::q_power(rng.spick(-2, 2));
         else if (mode == 4)
             q11 *= Scalar::q_power(rng.spick(0, 1) != 0 ? 1 : -1);
         Scalar omega = Scalar::root_of_unity(3, rng.pick(0, 1) == 0 ? 1 : 2);
         qt = -(q11.pow(-2)) * omega;
         q22 = qt.inverse();
     },
     [](const Scalar& q11, const Scalar& qt, const Scalar&) {
         return one() + q11.pow(9) * qt.pow(2);
     }},
};

SuiteReport suite_wm_bis(uint64_t seed) {
    SuiteReport rep;
    rep.suite = "wm-bis/sampling";
    const unsigned samples = 200;
    unsigned branch_idx = 0;
    for (const WmBranch& br : wm_branches) {
        SampleRng rng(seed * 1315423911u + ++branch_idx * 2654435761u);
        unsigned done = 0, attempts = 0, mismatches = 0;
        while (done < samples && attempts < 60 * samples) {
            ++attempts;
            Scalar q11, qt, q22;
            br.draw(rng, done, br.k, q11, qt, q22);
            // admissible: both the criterion's and the display's denominators
            Scalar pm1 = q11.pow(long(br.m + 1) * long(br.m + 1))
                * qt.pow(br.m + 1) * q22;
            if ((one() + q11).is_zero() || (one() + pm1).is_zero()) continue;
            if (br.guard(q11, qt, q22).is_zero()) continue;
            Rank2Params params{q11, qt, one(), q22};
            Scalar lhs = wm_condition(br.m, params);
            if (lhs != br.rhs(q11, qt, q22)) ++mismatches;
            ++done;
        }
        SuiteLine line;
        line.label = br.label;
        line.relation = br.relation;
        line.evaluation = std::to_string(done) + " admissible samples, "
            + std::to_string(mismatches) + " mismatches";
        line.pass = (done == samples && mismatches == 0);
        rep.lines.push_back(std::move(line));
    }
    return rep;
}

/* the semigeneric rank-2 corollary */

SuiteReport suite_semigeneric() {
    SuiteReport rep;
    rep.suite = "semigeneric/corollary";

    struct Shape {
        std::string label, relation;
        unsigned M;
        std::string q11, q12; // q21 = 1, q22 = q
        bool admitted;
        unsigned gk; // expected GK dimension when admitted
    };
    const Shape shapes[] = {
        {"ord2 h=1", "(-1) --q^-1-- (q): admitted, finite root system, gk 1",
         1, "-1", "q^-1", true, 1},
        {"ord2 h=2", "(-1) --q^-2-- (q): admitted, finite root system, gk 2",
         1, "-1", "q^-2", true, 2},
        {"ord3 h=1", "(z_3) --q^-1-- (q): admitted, finite root system, gk 2",
         3, "z", "q^-1", true, 2},
        {"ord2 h=3", "(-1) --q^-3-- (q): rejected, infinite GK",
         1, "-1", "q^-3", false, 0},
        {"ord3 h=2", "(z_3) --q^-2-- (q): rejected, infinite GK",
         3, "z", "q^-2", false, 0},
        {"ord4 h=1", "(z_4) --q^-1-- (q): rejected, infinite GK",
         4, "z", "q^-1", false, 0},
    };

    for (const Shape& s : shapes) {
        BraidingMatrix m = BraidingMatrix::raw(
            2, {Scalar::parse(s.q11, s.M), Scalar::parse(s.q12, s.M),
                Scalar::parse("1", s.M), Scalar::parse("q", s.M)});
        SuiteLine line;
        line.label = s.label;
        line.relation = s.relation;
        Rank2Decision dec = decide_rank2(m);
        if (s.admitted) {
            bool ok = dec.finite && dec.report.has_value();
            GkValue gk;
            if (ok) gk = gk_dimension(*dec.report);
            ok = ok && gk == GkValue{GkValue::Finite, s.gk};
            line.pass = ok;
            line.evaluation = dec.finite
                ? "finite root system, gk = " + gk.str()
                : "unexpectedly infinite: " + dec.reason;
        } else {
            line.pass = !dec.finite;
            line.evaluation = dec.finite ? "unexpectedly finite"
                                         : "infinite (" + dec.reason + ")";
        }
        rep.lines.push_back(std::move(line));
    }
    return rep;
}

} // namespace

std::vector<std::string> suite_names() {
    return {"aij3/G8",   "aij3/G24",       "aij3/G20",
            "4.2.8/G14", "4.2.6/G18",      "wm-bis/sampling",
            "semigeneric/corollary"};
}

SuiteReport verify_suite(const std::string& name, uint64_t seed) {
    if (name == "aij3/G8") return suite_aij3_g8();
    if (name == "aij3/G24") return suite_aij3_g24();
    if (name == "aij3/G20") return suite_aij3_g20();
    if (name == "4.2.8/G14") return suite_428_g14();
    if (name == "4.2.6/G18") return suite_426_g18();
    if (name == "wm-bis/sampling") return suite_wm_bis(seed);
    if (name == "semigeneric/corollary") return suite_semigeneric();
    fail(Err::UnknownSuite, "no suite named '" + name + "'");
}

} // namespace nichols
