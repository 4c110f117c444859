#include <doctest.h>

#include "nichols/error.hpp"
#include "nichols/scalar.hpp"
#include "testutil.hpp"

using namespace nichols;
using testutil::Rng;

TEST_CASE("constants and basic predicates") {
    CHECK(Scalar::zero().is_zero());
    CHECK(Scalar::one().is_one());
    CHECK(Scalar::from_int(0) == Scalar::zero(7));
    CHECK(Scalar::from_int(1) == Scalar::one(12));
    CHECK(Scalar::q_power(0).is_one());
    CHECK_FALSE(Scalar::q_power(1).is_constant());
    CHECK(Scalar::root_of_unity(4, 2) == Scalar::from_int(-1));
    CHECK(Scalar::root_of_unity(6, 3) == Scalar::from_int(-1));
    CHECK(Scalar::root_of_unity(5, 5).is_one());
}

TEST_CASE("field axioms on random elements") {
    Rng rng(20240816);
    const unsigned levels[] = {1, 2, 3, 4, 5, 8, 12};
    for (int iter = 0; iter < 1000; ++iter) {
        unsigned M = levels[static_cast<size_t>(rng.integer(0, 6))];
        Scalar a = rng.scalar(M), b = rng.scalar(M), c = rng.scalar(M);
        CHECK(a + b == b + a);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a - a == Scalar::zero(M));
        if (!a.is_zero()) {
            CHECK(a * a.inverse() == Scalar::one());
            CHECK(a.pow(-2) * a.pow(3) == a);
        }
    }
}

TEST_CASE("mixed-level arithmetic lifts to the common cyclotomic field") {
    Scalar z4 = Scalar::root_of_unity(4, 1);
    Scalar z6 = Scalar::root_of_unity(6, 1);
    Scalar p = z4 * z6;
    Order o = order_of(p);
    CHECK(o.kind == Order::Finite);
    CHECK(o.value == 12);
    CHECK(z4 * z4 == Scalar::from_int(-1));
    CHECK(z4 + Scalar::one() == Scalar::one() + z4);
}

TEST_CASE("rational function normalization cancels common factors") {
    Scalar q = Scalar::q_power(1);
    Scalar lhs = (q * q - Scalar::one()) / (q - Scalar::one());
    CHECK(lhs == q + Scalar::one());
    Scalar back = lhs * (q - Scalar::one());
    CHECK(back == q * q - Scalar::one());
    // denominators with cyclotomic coefficients cancel too
    Scalar z = Scalar::root_of_unity(3, 1);
    Scalar f = (q - z) * (q + z) / (q - z);
    CHECK(f == q + z);
}

TEST_CASE("order_of") {
    CHECK_THROWS_AS((void)order_of(Scalar::zero()), ToolError);
    CHECK(order_of(Scalar::one()).value == 1);
    CHECK(order_of(Scalar::from_int(-1)).value == 2);

    Order oq = order_of(Scalar::q_power(3));
    CHECK(oq.kind == Order::Infinite);
    Order orat = order_of(Scalar::from_int(2));
    CHECK(orat.kind == Order::NotRootOfUnity);
    Order ohalf = order_of(Scalar::from_rational(Rat(1, 2)));
    CHECK(ohalf.kind == Order::NotRootOfUnity);

    // zeta_12^4 is a primitive cube root
    Order o3 = order_of(Scalar::root_of_unity(12, 4));
    CHECK(o3.kind == Order::Finite);
    CHECK(o3.value == 3);
    // -zeta_5 has order 10 inside Q(zeta_5)
    Order o10 = order_of(-Scalar::root_of_unity(5, 1));
    CHECK(o10.kind == Order::Finite);
    CHECK(o10.value == 10);
    // 1 + zeta_3 = -zeta_3^2 has order 6
    Order o6 = order_of(Scalar::one() + Scalar::root_of_unity(3, 1));
    CHECK(o6.kind == Order::Finite);
    CHECK(o6.value == 6);
    // a non-root-of-unity algebraic number
    Order onru = order_of(Scalar::one() + Scalar::root_of_unity(5, 1));
    CHECK(onru.kind == Order::NotRootOfUnity);
}

TEST_CASE("q-integers vanish exactly at matching root orders") {
    for (unsigned N = 2; N <= 30; ++N) {
        Scalar z = Scalar::root_of_unity(N, 1);
        CHECK(q_int(N, z).is_zero());
        for (unsigned n = 1; n < N; ++n) CHECK_FALSE(q_int(n, z).is_zero());
    }
}

TEST_CASE("q-integer addition rule") {
    Rng rng(77);
    for (int iter = 0; iter < 50; ++iter) {
        unsigned M = static_cast<unsigned>(rng.integer(1, 10));
        Scalar a = rng.nonzero_scalar(M);
        unsigned m = static_cast<unsigned>(rng.integer(0, 6));
        unsigned n = static_cast<unsigned>(rng.integer(0, 6));
        CHECK(q_int(m + n, a) == q_int(m, a) + a.pow(static_cast<long>(m)) * q_int(n, a));
    }
}

TEST_CASE("q-factorial and bounded products") {
    Scalar q = Scalar::q_power(1);
    CHECK(q_factorial(0, q).is_one());
    CHECK(q_factorial(3, q) == q_int(1, q) * q_int(2, q) * q_int(3, q));
    CHECK(q_int_product(2, 4, q) == q_int(2, q) * q_int(3, q) * q_int(4, q));
    CHECK(q_int_product(5, 4, q).is_one()); // empty range
    // products stay well defined at roots of unity (no division performed)
    Scalar z = Scalar::root_of_unity(3, 1);
    CHECK(q_int_product(4, 5, z) == q_int(4, z) * q_int(5, z));
}

TEST_CASE("gaussian binomials") {
    Scalar q = Scalar::q_power(1);
    SUBCASE("factorial identity for transcendental parameter") {
        for (unsigned k = 0; k <= 8; ++k)
            for (unsigned i = 0; i <= k; ++i)
                CHECK(q_binomial(k, i, q) * q_factorial(i, q) * q_factorial(k - i, q) ==
                      q_factorial(k, q));
    }
    SUBCASE("pascal rule") {
        Rng rng(5);
        for (int iter = 0; iter < 40; ++iter) {
            unsigned M = static_cast<unsigned>(rng.integer(1, 8));
            Scalar a = rng.nonzero_scalar(M);
            unsigned k = static_cast<unsigned>(rng.integer(2, 7));
            unsigned i = static_cast<unsigned>(rng.integer(1, static_cast<long>(k) - 1));
            Scalar lhs = q_binomial(k, i, a);
            Scalar rhs = q_binomial(k - 1, i - 1, a) +
                         a.pow(static_cast<long>(i)) * q_binomial(k - 1, i, a);
            CHECK(lhs == rhs);
        }
    }
    SUBCASE("vanishing at primitive roots") {
        for (unsigned N = 2; N <= 12; ++N) {
            Scalar z = Scalar::root_of_unity(N, 1);
            for (unsigned i = 1; i < N; ++i) CHECK(q_binomial(N, i, z).is_zero());
            CHECK(q_binomial(N, 0, z).is_one());
            CHECK(q_binomial(N, N, z).is_one());
        }
    }
    CHECK_THROWS_AS((void)q_binomial(2, 3, q), ToolError);
}

TEST_CASE("mu products") {
    // mu_2 at q11 = qt12 = zeta_3: (1 - z)(1 - z^2) = 3
    Scalar z = Scalar::root_of_unity(3, 1);
    CHECK(mu(2, z, z) == Scalar::from_int(3));
    CHECK(mu(0, z, z).is_one());
    // first factor alone
    Scalar q = Scalar::q_power(1);
    CHECK(mu(1, z, q) == Scalar::one() - q);
    // vanishes as soon as q11^i * qt12 = 1 for some i < k
    Scalar q11 = Scalar::root_of_unity(5, 1);
    Scalar qt12 = Scalar::root_of_unity(5, 3);
    CHECK_FALSE(mu(2, q11, qt12).is_zero());
    CHECK(mu(3, q11, qt12).is_zero());
    CHECK(mu(7, q11, qt12).is_zero());
}

TEST_CASE("monomial detection") {
    Scalar m = Scalar::monomial(Rat(-3, 2), 8, 5, -2);
    auto mono = m.as_monomial();
    REQUIRE(mono.has_value());
    CHECK(mono->qexp == -2);
    CHECK(Scalar::from_cyc(mono->coeff) == Scalar::monomial(Rat(-3, 2), 8, 5, 0));
    CHECK_FALSE((Scalar::q_power(1) + Scalar::one()).as_monomial().has_value());
    CHECK_FALSE(Scalar::zero().as_monomial().has_value());
    auto c = Scalar::from_int(4).as_monomial();
    REQUIRE(c.has_value());
    CHECK(c->qexp == 0);
}

TEST_CASE("literal parsing") {
    CHECK(Scalar::parse("1", 1).is_one());
    CHECK(Scalar::parse("-1", 3) == Scalar::from_int(-1));
    CHECK(Scalar::parse("q", 1) == Scalar::q_power(1));
    CHECK(Scalar::parse("q^-1", 1) == Scalar::q_power(-1));
    CHECK(Scalar::parse("z", 5) == Scalar::root_of_unity(5, 1));
    CHECK(Scalar::parse("z^3", 5) == Scalar::root_of_unity(5, 3));
    CHECK(Scalar::parse("-3/2*z^5*q^2", 8) == Scalar::monomial(Rat(-3, 2), 8, 5, 2));
    CHECK(Scalar::parse("2*q^3", 1) == Scalar::from_int(2) * Scalar::q_power(3));
    CHECK(Scalar::parse(" z ^ 2 * q ", 7) == Scalar::monomial(Rat(1), 7, 2, 1));
    // exponent reduction happens on parse: z^4 at M=4 is 1
    CHECK(Scalar::parse("z^4", 4).is_one());

    CHECK_THROWS_AS((void)Scalar::parse("", 1), ToolError);
    CHECK_THROWS_AS((void)Scalar::parse("x", 1), ToolError);
    CHECK_THROWS_AS((void)Scalar::parse("q^", 1), ToolError);
    CHECK_THROWS_AS((void)Scalar::parse("1/0", 1), ToolError);
    CHECK_THROWS_AS((void)Scalar::parse("2*2", 1), ToolError);
    CHECK_THROWS_AS((void)Scalar::parse("q*z", 4), ToolError); // wrong order
}

TEST_CASE("string rendering round-trips monomials") {
    Rng rng(99);
    for (int iter = 0; iter < 200; ++iter) {
        unsigned M = static_cast<unsigned>(rng.integer(1, 12));
        Scalar m = rng.monomial(M);
        if (m.is_zero()) continue;
        CHECK(Scalar::parse(m.str(), M) == m);
    }
    CHECK(Scalar::zero().str() == "0");
    CHECK(Scalar::one().str() == "1");
    CHECK(Scalar::from_int(-1).str() == "-1");
    CHECK(Scalar::q_power(1).str() == "q");
    CHECK(Scalar::q_power(-2).str() == "q^-2");
    CHECK(Scalar::root_of_unity(5, 1).str() == "z");
    CHECK(Scalar::monomial(Rat(1), 5, 2, 1).str() == "z^2*q");
    CHECK(Scalar::monomial(Rat(-1), 5, 1, 0).str() == "-z");
    // sums fall back to a readable polynomial form
    CHECK((Scalar::q_power(1) + Scalar::one()).str() == "1 + q");
}

TEST_CASE("canonical keys agree for equal values at one level") {
    Scalar a = Scalar::parse("z^2*q", 8);
    Scalar b = Scalar::monomial(Rat(1), 8, 2, 1);
    CHECK(a.key() == b.key());
    Scalar c = (Scalar::q_power(2).lifted(8) - Scalar::one().lifted(8)) /
               (Scalar::q_power(1).lifted(8) - Scalar::one().lifted(8));
    Scalar d = (Scalar::q_power(1) + Scalar::one()).lifted(8);
    CHECK(c.key() == d.key());
    CHECK(a.key() != d.key());
}

TEST_CASE("division by zero and zero inverses are rejected") {
    CHECK_THROWS_AS((void)Scalar::zero().inverse(), ToolError);
    CHECK_THROWS_AS((void)(Scalar::one() / Scalar::zero()), ToolError);
    Scalar q = Scalar::q_power(1);
    CHECK_THROWS_AS((void)((q + Scalar::one()) / (q - q)), ToolError);
}
