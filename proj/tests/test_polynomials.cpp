#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "ivb/groebner.hpp"
#include "ivb/io.hpp"
#include "ivb/primefield.hpp"
#include "testutil.hpp"

using namespace ivb;
using ivbtest::qp;
using ivbtest::qps;
using ivbtest::ring_q;

TEST_CASE("arithmetic basics") {
    auto ring = ring_q({"x", "y", "z", "t"});
    CHECK(add(qp(ring, "x^2*y - z"), qp(ring, "z")) == qp(ring, "x^2*y"));
    CHECK(make_monic(qp(ring, "3*x*y - 3*z")) == qp(ring, "x*y - z"));
    CHECK(mul(qp(ring, "z*t + x"), qp(ring, "z")) == qp(ring, "z^2*t + x*z"));
    CHECK(sub(qp(ring, "x"), qp(ring, "x")).is_zero());
    CHECK(to_string(qp(ring, "1/2*x - y + 3")) == "1/2*x - y + 3");
}

TEST_CASE("mixed rings are rejected") {
    auto a = ring_q({"x", "y"});
    auto b = ring_q({"x", "y"}, OrderKind::lex);
    CHECK_THROWS_AS(add(qp(a, "x"), qp(b, "y")), context_error);
}

TEST_CASE("conventional normal form") {
    auto ring = ring_q({"x", "y", "z"});
    auto f = qp(ring, "x^2*y - z");
    CHECK(conventional_nf(f, {f}).is_zero());
    CHECK(conventional_nf(qp(ring, "z^3"), {qp(ring, "x*y - z")}) == qp(ring, "z^3"));
    CHECK(conventional_nf(qp(ring, "x^2*y"), {qp(ring, "x^2*y - z")}) == qp(ring, "z"));
}

TEST_CASE("normal form difference lies in the ideal") {
    auto ring = ring_q({"x", "y", "z"});
    std::mt19937_64 rng(42);
    auto f1 = qp(ring, "x^2*y - z");
    auto f2 = qp(ring, "x*y^2 - y");
    std::vector<Polynomial<Rationals>> gens{f1, f2};
    auto gb = buchberger(gens);
    for (int i = 0; i < 20; ++i) {
        auto h = ivbtest::random_poly(rng, ring, 4, 5);
        auto r = conventional_nf(h, gens);
        CHECK(conventional_nf(sub(h, r), gb).is_zero());
    }
}

TEST_CASE("autoreduce") {
    auto ring = ring_q({"x", "y", "z"});
    auto f = qp(ring, "2*x^2*y - 2*z");
    SUBCASE("duplicates collapse") {
        auto h = autoreduce<Rationals>({f, f});
        REQUIRE(h.size() == 1);
        CHECK(h[0] == make_monic(f));
    }
    SUBCASE("multiples are removed") {
        auto h = autoreduce<Rationals>({qp(ring, "x^2*y - z"), qp(ring, "x^3*y - x*z")});
        REQUIRE(h.size() == 1);
        CHECK(h[0] == qp(ring, "x^2*y - z"));
    }
    SUBCASE("empty input") { CHECK(autoreduce<Rationals>({}).empty()); }
    SUBCASE("idempotent") {
        std::mt19937_64 rng(9);
        for (int i = 0; i < 25; ++i) {
            std::vector<Polynomial<Rationals>> gens;
            for (int k = 0; k < 3; ++k) gens.push_back(ivbtest::random_poly(rng, ring, 3, 4));
            auto once = autoreduce(gens);
            auto twice = autoreduce(once);
            CHECK(once == twice);
        }
    }
}

TEST_CASE("buchberger on the running example") {
    auto ring = ring_q({"x", "y", "z"});
    auto gb = buchberger(qps(ring, {"x^2*y - z", "x*y^2 - y"}));
    auto expected = qps(ring, {"x*y - y*z", "x*z - z^2", "y^2*z - y", "y*z^2 - z"});
    sort_basis(expected);
    CHECK(gb == expected);
    CHECK(is_groebner_basis(gb));
}

TEST_CASE("buchberger trivialities") {
    auto ring = ring_q({"x", "y"});
    auto gb = buchberger(qps(ring, {"x - 1"}));
    REQUIRE(gb.size() == 1);
    CHECK(gb[0] == qp(ring, "x - 1"));
}

TEST_CASE("buchberger output is reduced and monic") {
    auto ring = ring_q({"x", "y", "z"});
    std::mt19937_64 rng(1234);
    for (int i = 0; i < 10; ++i) {
        std::vector<Polynomial<Rationals>> gens;
        for (int k = 0; k < 2; ++k) gens.push_back(ivbtest::random_poly(rng, ring, 3, 3));
        auto gb = buchberger(gens);
        CHECK(is_groebner_basis(gb));
        for (std::size_t a = 0; a < gb.size(); ++a) {
            CHECK(gb[a].ring()->field.is_one(gb[a].lc()));
            std::vector<Polynomial<Rationals>> others;
            for (std::size_t b = 0; b < gb.size(); ++b)
                if (b != a) others.push_back(gb[b]);
            CHECK(conventional_nf(gb[a], others) == gb[a]);
        }
    }
}

TEST_CASE("ideal equality") {
    auto ring = ring_q({"x", "y", "z", "t"});
    auto f = qps(ring, {"x*y*z*t - x*z", "x*y*z + z^2", "x*z*t + x^2", "x*y + z", "z*t + x"});
    CHECK(ideal_equal(f, buchberger(f)));
    CHECK_FALSE(ideal_equal(qps(ring, {"x"}), qps(ring, {"y"})));
    auto g1 = qps(ring, {"x*z*t + x^2", "x*y + z", "z*t + x"});
    CHECK(ideal_equal(f, g1));
}

TEST_CASE("prime field arithmetic") {
    auto ctx = make_context({"x", "y"});
    auto ring = make_ring(ctx, OrderKind::degrevlex, PrimeField(7));
    auto f = parse_polynomial("3*x^2 + 5*y", ring);
    auto g = parse_polynomial("4*x^2 + 2*y", ring);
    CHECK(add(f, g) == parse_polynomial("0", ring));
    CHECK(parse_polynomial("x - 8*y", ring) == parse_polynomial("x + 6*y", ring));
    CHECK(make_monic(parse_polynomial("3*x + 1", ring)) ==
          parse_polynomial("x + 5", ring));
    CHECK_THROWS_AS(PrimeField(6), error);
    std::vector<Polynomial<PrimeField>> gens{parse_polynomial("x^2 + y", ring),
                                             parse_polynomial("x*y + 3", ring)};
    auto gb = buchberger(gens);
    CHECK(is_groebner_basis(gb));
}
