#include <doctest.h>

#include "nichols/braiding.hpp"
#include "nichols/error.hpp"
#include "testutil.hpp"

using namespace nichols;
using testutil::Rng;

namespace {

BraidingMatrix mat2(const Scalar& q11, const Scalar& q12, const Scalar& q21, const Scalar& q22) {
    return BraidingMatrix(2, {q11, q12, q21, q22});
}

} // namespace

TEST_CASE("construction and validation") {
    Scalar q = Scalar::q_power(1);
    Scalar z = Scalar::root_of_unity(3, 1);
    BraidingMatrix m = mat2(z, q, q.inverse(), z);
    CHECK(m.theta() == 2);
    CHECK(m.level() == 3);
    CHECK(m.at(0, 1) == q);
    CHECK(m.diagonal_valid());

    CHECK_THROWS_AS(mat2(Scalar::one(), q, q, z), ToolError);
    try {
        mat2(z, q, q, Scalar::one());
    } catch (const ToolError& e) {
        CHECK(e.code() == Err::InvalidDiagonal);
    }
    try {
        mat2(z, Scalar::zero(), q, z);
    } catch (const ToolError& e) {
        CHECK(e.code() == Err::InvalidEntry);
    }
    CHECK_THROWS_AS(BraidingMatrix(2, {z, q, z}), ToolError);
    CHECK_THROWS_AS(BraidingMatrix(0, {}), ToolError);

    // raw() admits a diagonal 1 but still rejects zero entries
    BraidingMatrix r = BraidingMatrix::raw(2, {Scalar::one(), q, q, z});
    CHECK_FALSE(r.diagonal_valid());
    CHECK_THROWS_AS(BraidingMatrix::raw(1, {Scalar::zero()}), ToolError);

    CHECK_THROWS_AS((void)m.at(2, 0), ToolError);
    CHECK_THROWS_AS((void)m.qtilde(0, 0), ToolError);
}

TEST_CASE("qtilde") {
    Scalar q = Scalar::q_power(1);
    Scalar z3 = Scalar::root_of_unity(3, 1);
    Scalar z8 = Scalar::root_of_unity(8, 1);
    CHECK(mat2(z3, q, q.inverse(), z3).qtilde(0, 1).is_one());
    CHECK(mat2(z3, z3, Scalar::one(), z3).qtilde(0, 1) == z3);
    CHECK(mat2(z3, z8, z8, z3).qtilde(0, 1) == Scalar::root_of_unity(4, 1));
    CHECK(mat2(z3, z8, z8, z3).qtilde(1, 0) == Scalar::root_of_unity(4, 1));
}

TEST_CASE("diagrams and connectivity") {
    Scalar q = Scalar::q_power(1);
    Scalar z = Scalar::root_of_unity(3, 1);
    Scalar minus1 = Scalar::from_int(-1);

    SUBCASE("no edge when qtilde is 1") {
        DynkinDiagram d = diagram(mat2(z, q, q.inverse(), z));
        CHECK(d.edges.empty());
        CHECK_FALSE(d.connected());
        auto comps = d.components();
        REQUIRE(comps.size() == 2);
        CHECK(comps[0] == std::vector<unsigned>{0});
        CHECK(comps[1] == std::vector<unsigned>{1});
        CHECK_THROWS_AS((void)d.edge_label(0, 1), ToolError);
    }

    SUBCASE("path with edge q^-1") {
        DynkinDiagram d = diagram(mat2(minus1, q.inverse(), Scalar::one(), q));
        CHECK(d.vertex_labels[0] == minus1);
        CHECK(d.vertex_labels[1] == q);
        REQUIRE(d.has_edge(0, 1));
        CHECK(d.edge_label(1, 0) == q.inverse());
        CHECK(d.connected());
    }

    SUBCASE("rank 3 chain") {
        std::vector<Scalar> e = {z, q,             Scalar::one(), //
                                 q, z,             q,             //
                                 Scalar::one(), q, z};
        DynkinDiagram d = diagram(BraidingMatrix(3, e));
        CHECK(d.has_edge(0, 1));
        CHECK(d.has_edge(1, 2));
        CHECK_FALSE(d.has_edge(0, 2));
        CHECK(d.connected());
    }

    SUBCASE("diagram depends only on diagonal and qtilde") {
        Rng rng(31);
        for (int iter = 0; iter < 30; ++iter) {
            Scalar q11 = Scalar::root_of_unity(5, rng.integer(1, 4));
            Scalar q22 = Scalar::root_of_unity(5, rng.integer(1, 4));
            Scalar q12 = rng.nonzero_scalar(5);
            Scalar q21 = rng.nonzero_scalar(5);
            BraidingMatrix a = BraidingMatrix::raw(2, {q11, q12, q21, q22});
            BraidingMatrix b = BraidingMatrix::raw(2, {q11, q12 * q21, Scalar::one(), q22});
            CHECK(diagram(a).key() == diagram(b).key());
        }
    }
}

TEST_CASE("torsion / generic / semigeneric trichotomy") {
    Scalar q = Scalar::q_power(1);
    Scalar z = Scalar::root_of_unity(3, 1);
    Scalar minus1 = Scalar::from_int(-1);

    CHECK(classify_class(mat2(z, z, z, minus1)) == BraidClass::Torsion);
    CHECK(classify_class(mat2(q, q.inverse(), Scalar::one(), q)) == BraidClass::Generic);
    CHECK(classify_class(mat2(minus1, q.inverse(), Scalar::one(), q)) == BraidClass::Semigeneric);
    // torsion diagonal with a free edge is semigeneric as well
    CHECK(classify_class(mat2(z, q, Scalar::one(), z)) == BraidClass::Semigeneric);
    // edge decoration of finite order > 1 between free vertices
    CHECK(classify_class(mat2(q, z, Scalar::one(), q)) == BraidClass::Semigeneric);
    // disconnected generic pair: qtilde = 1 stays generic
    CHECK(classify_class(mat2(q, q, q.inverse(), q)) == BraidClass::Generic);
    // non-root-of-unity constants count as infinite order
    CHECK(classify_class(mat2(Scalar::from_int(2), Scalar::one(), Scalar::one(),
                              Scalar::from_int(2))) == BraidClass::Generic);

    SUBCASE("agrees with direct order checks") {
        Rng rng(8);
        for (int iter = 0; iter < 60; ++iter) {
            std::vector<Scalar> e;
            for (int k = 0; k < 4; ++k) {
                if (rng.integer(0, 1))
                    e.push_back(Scalar::root_of_unity(6, rng.integer(1, 5)));
                else
                    e.push_back(Scalar::q_power(rng.integer(-2, 2)) *
                                Scalar::root_of_unity(6, rng.integer(0, 5)));
            }
            BraidingMatrix m = BraidingMatrix::raw(2, e);
            bool d0 = order_of(m.at(0, 0)).kind == Order::Finite;
            bool d1 = order_of(m.at(1, 1)).kind == Order::Finite;
            Order ot = order_of(m.qtilde(0, 1));
            BraidClass expect;
            if (d0 && d1 && ot.kind == Order::Finite)
                expect = BraidClass::Torsion;
            else if (!d0 && !d1 && (ot.kind != Order::Finite || ot.value == 1))
                expect = BraidClass::Generic;
            else
                expect = BraidClass::Semigeneric;
            CHECK(classify_class(m) == expect);
        }
    }
}

TEST_CASE("JSON round trip") {
    auto j = nlohmann::json::parse(R"({
        "cyclotomic_order": 8,
        "theta": 2,
        "entries": [["z", "-3/2*q^2"], ["q^-1", "z^5"]]
    })");
    BraidingMatrix m = BraidingMatrix::from_json(j);
    CHECK(m.theta() == 2);
    CHECK(m.at(0, 0) == Scalar::root_of_unity(8, 1));
    CHECK(m.at(0, 1) == Scalar::monomial(Rat(-3, 2), 1, 0, 2));
    BraidingMatrix back = BraidingMatrix::from_json(m.to_json());
    CHECK(back == m);
    CHECK(back.key() == m.key());

    CHECK_THROWS_AS((void)BraidingMatrix::from_json(nlohmann::json::array()), ToolError);
    auto bad = j;
    bad["entries"][0][0] = "1*";
    CHECK_THROWS_AS((void)BraidingMatrix::from_json(bad), ToolError);
    bad = j;
    bad["theta"] = 3;
    CHECK_THROWS_AS((void)BraidingMatrix::from_json(bad), ToolError);
    bad = j;
    bad["cyclotomic_order"] = 0;
    CHECK_THROWS_AS((void)BraidingMatrix::from_json(bad), ToolError);
}
