#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "nichols/braiding.hpp"
#include "nichols/scalar.hpp"

namespace nichols {

/*
 * Rank-2 parameter pack: the four matrix entries together with the derived
 * quantities attached to the degrees beta_m = m alpha_1 + alpha_2, namely
 * qt12 = q12 q21 and p_m = bq(beta_m, beta_m) = q11^{m^2} qt12^m q22.
 */
struct Rank2Params {
    Scalar q11, q12, q21, q22;

    static Rank2Params of(const BraidingMatrix& m); // theta must be 2
    BraidingMatrix matrix() const;

    Scalar qt12() const;
    Scalar p(unsigned mm) const;
};

/*
 * d_t = 1 - q^{t+1} q11^{2n} qt12 + q^t (1 - q11^n qt12) (n+1)_{q11} / (t)_q
 * with q = p_n. The value depends on n, not only on t.
 *
 * pre: p_n is a root of unity of order N >= 2 (else OrderUndefined) and
 * 1 <= t <= N-1 (else OutOfRange). (t)_q != 0 holds automatically for
 * t < N; DivisionByZero guards the remaining boundary.
 */
Scalar d_t(unsigned n, unsigned t, const Rank2Params& params);

/*
 * The scalar whose vanishing characterizes wtilde_m = 0 under the standing
 * hypotheses (y_{m+2} != 0, p_{m+1} != -1, and proportionality of the lower
 * w_k -- assumed, not checked here):
 *
 *   (1 - p_{m+1}/q11) * (1 + p_{m+1}/q11
 *       + p_m (m+1)_{q11} (m+2)_{q11} (1-q11^m qt12)(1-q11^{m+1} qt12)
 *         / ((1+q11)(1+p_{m+1})))
 *
 * errors: DenominatorVanishes when (1+q11)(1+p_{m+1}) = 0.
 */
Scalar wm_condition(unsigned mm, const Rank2Params& params);

/*
 * Closed-form test for wtilde_0 = 0, valid when y_2 != 0 and p_1 != -1
 * (checked through the scalar criterion (k)!_{q11} mu_k != 0; violations
 * raise HypothesisViolated): true iff
 * (qt12 q22 - 1)(q22 + 1)(q11 qt12^2 q22 + 1) = 0.
 */
bool w0_vanishes(const Rank2Params& params);

/*
 * Closed-form tests for wtilde_1 = 0, one per constraint branch:
 *   Q22MinusOne       q22 = -1        : (1-q11^3 qt)(q11^3 qt^2 + 1)(3)_{-q11 qt} = 0
 *   QtQ22One          qt12 q22 = 1    : (1-q11^3 qt)(q11^2 + 1)(3)_{-q11^2 qt} = 0
 *   CentralMinusOne   q11 qt^2 q22 = -1: (1-q11^3 qt)(q11^2 + 1) = 0
 * All require y_3 != 0, p_2 != -1, and the branch equation itself;
 * violations raise HypothesisViolated.
 */
enum class W1Branch { Q22MinusOne, QtQ22One, CentralMinusOne };
bool w1_vanishes(const Rank2Params& params, W1Branch branch);

/*
 * Root-vector criteria at beta_n: the d_t ladder for 1 <= t <= N-2, the
 * N beta_n root with its self-braiding p_n^{N^2}, the p_n = -1 double root,
 * and the two quadratic-relation scalar conditions. All y_k != 0 checks use
 * the scalar criterion.
 */
struct RootCriteria {
    unsigned n = 0;
    unsigned N = 0;                // order of p_n
    bool next_y_nonzero = false;   // y_{n+1} != 0
    std::vector<Scalar> d;         // d_t for t = 1..N-2, in order
    bool all_d_nonzero = false;
    bool big_root = false;         // N beta_n is a root
    Scalar q_at_big_root;          // p_n^{N^2}
    bool infinite_by_weight_one = false; // big root of self-braiding 1
    bool double_root = false;      // n >= 1, p_n = -1, y_{n+1} != 0
    bool yy1_scalar = false;       // q11^{n(n+1)} qt12^{n+1} q22 == 1
    bool yy2_scalar = false;       // p_n == -1
};
// errors: OrderUndefined when p_n is not a root of unity; OutOfRange for n = 0
RootCriteria root_criteria(unsigned n, const Rank2Params& params);

/* verification suites */

struct SuiteLine {
    std::string label;      // which displayed line, e.g. "t=6"
    std::string relation;   // the asserted (in)equality in plain text
    std::string evaluation; // exact values both sides reduce to
    bool pass = false;
};

struct SuiteReport {
    std::string suite;
    std::vector<SuiteLine> lines;

    bool all_pass() const;
    nlohmann::json to_json() const;
    std::string table() const;
};

std::vector<std::string> suite_names();

/*
 * Evaluate one named check suite in exact arithmetic. The sampling suite
 * draws its points from the given seed; the fixed-table suites ignore it.
 * errors: UnknownSuite.
 */
SuiteReport verify_suite(const std::string& name, uint64_t seed = 0);

} // namespace nichols
