#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "ivb/io.hpp"
#include "ivb/monomial.hpp"
#include "ivb/ordering.hpp"
#include "testutil.hpp"

using namespace ivb;
using ivbtest::qm;
using ivbtest::ring_q;

TEST_CASE("comparison against hand cases") {
    auto ring = ring_q({"x1", "x2", "x3"});
    auto x1x2 = qm(ring, "x1*x2");
    auto x3sq = qm(ring, "x3^2");
    CHECK(compare(OrderKind::degrevlex, x1x2, x3sq) > 0);
    CHECK(compare(OrderKind::degrevlex, x1x2, x1x2) == std::strong_ordering::equal);
    CHECK(compare(OrderKind::lex, qm(ring, "x2^10"), qm(ring, "x1")) < 0);
    CHECK(compare(OrderKind::deglex, qm(ring, "x2^10"), qm(ring, "x1")) > 0);
}

TEST_CASE("degrevlex tie-breaking convention") {
    auto ring = ring_q({"x", "y", "z"});
    // equal degree: smaller exponent in the last differing variable wins
    CHECK(compare(OrderKind::degrevlex, qm(ring, "x*y"), qm(ring, "y*z")) > 0);
    CHECK(compare(OrderKind::degrevlex, qm(ring, "x^2*y"), qm(ring, "x^2*z")) > 0);
    CHECK(compare(OrderKind::degrevlex, qm(ring, "x*z"), qm(ring, "z^2")) > 0);
}

TEST_CASE("divisibility, quotient, lcm") {
    auto ring = ring_q({"x1", "x2", "x3"});
    CHECK(divides(qm(ring, "x2*x3"), qm(ring, "x1*x2*x3^2")));
    CHECK_FALSE(divides(qm(ring, "x1*x2*x3^2"), qm(ring, "x2*x3")));
    CHECK(lcm(qm(ring, "x1*x2"), qm(ring, "x2*x3")) == qm(ring, "x1*x2*x3"));
    CHECK(quotient(qm(ring, "x1*x3^2"), qm(ring, "x3^2")) == qm(ring, "x1"));
    CHECK_THROWS_AS(quotient(qm(ring, "x3^2"), qm(ring, "x1*x3^2")), precondition_error);
}

TEST_CASE("exponent overflow is detected") {
    Monomial big(std::vector<Exponent>{0xffffffffu});
    CHECK_THROWS_AS(mul(big, big), error);
}

TEST_CASE("order and divisibility properties on random monomials") {
    std::mt19937_64 rng(20240811);
    auto one = Monomial::one(4);
    for (int iter = 0; iter < 400; ++iter) {
        auto u = ivbtest::random_monomial(rng, 4, 6);
        auto v = ivbtest::random_monomial(rng, 4, 6);
        auto w = ivbtest::random_monomial(rng, 4, 6);
        for (OrderKind kind : {OrderKind::lex, OrderKind::deglex, OrderKind::degrevlex}) {
            auto c = compare(kind, u, v);
            CHECK((c == 0) == (u == v));
            // antisymmetry
            CHECK(compare(kind, v, u) == (0 <=> c));
            // multiplicative
            if (c > 0) CHECK(compare(kind, mul(u, w), mul(v, w)) > 0);
            // admissible: 1 is minimal
            if (!u.is_one()) CHECK(compare(kind, u, one) > 0);
            // transitivity spot check
            auto cv = compare(kind, v, w);
            if (c > 0 && cv > 0) CHECK(compare(kind, u, w) > 0);
        }
        CHECK(divides(u, v) == (lcm(u, v) == v));
        if (divides(u, v)) CHECK(mul(quotient(v, u), u) == v);
        CHECK(mul(u, v).degree() == u.degree() + v.degree());
    }
}

TEST_CASE("monomial text round trip") {
    auto ring = ring_q({"x", "y", "z"});
    const VarContext& ctx = *ring->vars;
    CHECK(to_string(qm(ring, "x^2*y*z^3"), ctx) == "x^2*y*z^3");
    CHECK(to_string(Monomial::one(3), ctx) == "1");
    CHECK(qm(ring, "y") == Monomial::variable(3, 1));
    std::mt19937_64 rng(7);
    for (int iter = 0; iter < 100; ++iter) {
        auto m = ivbtest::random_monomial(rng, 3, 7);
        CHECK(parse_monomial(to_string(m, ctx), ctx) == m);
    }
}

TEST_CASE("contexts must match") {
    auto a = ring_q({"x", "y"});
    auto b = ring_q({"x", "y", "z"});
    CHECK_THROWS_AS(ivb::mul(qm(a, "x"), qm(b, "x")), context_error);
    CHECK_THROWS_AS(make_context({"x", "x"}), error);
}
