#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "ivb/division.hpp"
#include "ivb/io.hpp"
#include "testutil.hpp"

using namespace ivb;
using ivbtest::qm;
using ivbtest::ring_q;

namespace {

VarSet vs(std::initializer_list<std::size_t> vars) {
    VarSet s = 0;
    for (auto v : vars) s |= VarSet{1} << v;
    return s;
}

}  // namespace

TEST_CASE("pommaret separation of single monomials") {
    auto ring = ring_q({"x1", "x2", "x3"});
    CHECK(pommaret_mult(qm(ring, "x1*x2")) == vs({1, 2}));
    CHECK(pommaret_mult(qm(ring, "x3^2")) == vs({2}));
    CHECK(pommaret_mult(Monomial::one(3)) == vs({0, 1, 2}));
    CHECK(pommaret_mult(qm(ring, "x1^2")) == vs({0, 1, 2}));
}

TEST_CASE("janet separation of the three-element example set") {
    auto ring = ring_q({"x1", "x2", "x3"});
    std::vector<Monomial> u{qm(ring, "x1*x2"), qm(ring, "x2*x3"), qm(ring, "x3^2")};
    auto t = janet_separation(u);
    CHECK(t.mult[0] == vs({0, 1, 2}));
    CHECK(t.mult[1] == vs({1, 2}));
    CHECK(t.mult[2] == vs({2}));
    // and the Pommaret side of the same table
    auto p = separation(u, Division::pommaret);
    CHECK(p.mult[0] == vs({1, 2}));
    CHECK(p.mult[1] == vs({2}));
    CHECK(p.mult[2] == vs({2}));
}

TEST_CASE("janet separation corner cases") {
    auto ring = ring_q({"x1", "x2"});
    SUBCASE("singleton has all variables multiplicative") {
        std::vector<Monomial> u{qm(ring, "x1*x2^3")};
        CHECK(janet_separation(u).mult[0] == vs({0, 1}));
    }
    SUBCASE("two-element set") {
        std::vector<Monomial> u{qm(ring, "x1^2"), qm(ring, "x1*x2")};
        auto t = janet_separation(u);
        CHECK(t.mult[0] == vs({0, 1}));
        CHECK(t.mult[1] == vs({1}));
    }
    SUBCASE("duplicates rejected") {
        std::vector<Monomial> u{qm(ring, "x1"), qm(ring, "x1")};
        CHECK_THROWS_AS(janet_separation(u), precondition_error);
    }
}

TEST_CASE("involutive divisor search") {
    auto ring = ring_q({"x1", "x2", "x3"});
    std::vector<Monomial> u{qm(ring, "x1*x2"), qm(ring, "x2*x3"), qm(ring, "x3^2")};
    auto t = janet_separation(u);
    auto d = involutive_divisor(qm(ring, "x1*x2*x3^2"), u, t);
    REQUIRE(d.has_value());
    CHECK(u[*d] == qm(ring, "x1*x2"));
    CHECK_FALSE(involutive_divisor(qm(ring, "x1*x3^2"), u, t).has_value());
    auto self = involutive_divisor(qm(ring, "x2*x3"), u, t);
    REQUIRE(self.has_value());
    CHECK(u[*self] == qm(ring, "x2*x3"));
}

TEST_CASE("cone membership") {
    auto ring = ring_q({"x1", "x2", "x3"});
    std::vector<Monomial> u{qm(ring, "x1*x2"), qm(ring, "x2*x3"), qm(ring, "x3^2")};
    CHECK(cone_member(qm(ring, "x1^2*x2"), u, ConeKind::full));
    CHECK_FALSE(cone_member(qm(ring, "x1^2*x2"), u, ConeKind::pommaret));
    CHECK_FALSE(cone_member(Monomial::one(3), u, ConeKind::full));
    CHECK_FALSE(cone_member(Monomial::one(3), u, ConeKind::janet));
    CHECK_FALSE(cone_member(Monomial::one(3), u, ConeKind::pommaret));
    CHECK(cone_member(qm(ring, "x2^2*x3"), u, ConeKind::janet));
}

TEST_CASE("division axioms hold on the example set") {
    auto ring = ring_q({"x1", "x2", "x3"});
    std::vector<Monomial> u{qm(ring, "x1*x2"), qm(ring, "x2*x3"), qm(ring, "x3^2")};
    CHECK(check_division_axioms(u, Division::janet));
    CHECK(check_division_axioms(u, Division::pommaret));
}

TEST_CASE("janet cones of distinct generators are disjoint") {
    std::mt19937_64 rng(555);
    for (int iter = 0; iter < 30; ++iter) {
        auto u = ivbtest::random_monomial_set(rng, 3, 4, 4);
        auto t = janet_separation(u);
        Degree bound = 0;
        for (const auto& m : u) bound = std::max(bound, m.degree());
        for (const auto& w : monomials_up_to_degree(3, bound + 2)) {
            int divisors = 0;
            for (std::size_t i = 0; i < u.size(); ++i)
                if (involutively_divides(u[i], t.mult[i], w)) ++divisors;
            CHECK(divisors <= 1);
        }
    }
}

TEST_CASE("janet completion of the example set") {
    auto ring = ring_q({"x1", "x2", "x3"});
    std::vector<Monomial> u{qm(ring, "x1*x2"), qm(ring, "x2*x3"), qm(ring, "x3^2")};
    auto completed = janet_complete(u, OrderKind::degrevlex);
    REQUIRE(completed.size() == 4);
    CHECK(monomial_janet_complete(completed));
    bool found = false;
    for (const auto& m : completed) found = found || m == qm(ring, "x1*x3^2");
    CHECK(found);
    CHECK_FALSE(monomial_janet_complete(u));
}

TEST_CASE("truncated pommaret completion reproduces the infinite families") {
    auto ring = ring_q({"x1", "x2", "x3"});
    std::vector<Monomial> uj{qm(ring, "x1*x2"), qm(ring, "x2*x3"), qm(ring, "x3^2"),
                             qm(ring, "x1*x3^2")};
    auto got = pommaret_complete_truncated(uj, OrderKind::degrevlex, 4);
    std::vector<Monomial> expected = uj;
    for (const char* s : {"x1^2*x2", "x1^3*x2", "x1^2*x3^2", "x2^2*x3", "x2^3*x3"})
        expected.push_back(qm(ring, s));
    std::sort(expected.begin(), expected.end(), [](const Monomial& a, const Monomial& b) {
        return compare(OrderKind::degrevlex, a, b) < 0;
    });
    CHECK(got == expected);
    CHECK_THROWS_AS(pommaret_complete_truncated(uj, OrderKind::degrevlex, 2),
                    precondition_error);
}

TEST_CASE("hilbert data on the completed example set") {
    auto ring = ring_q({"x1", "x2", "x3"});
    std::vector<Monomial> uj{qm(ring, "x1*x2"), qm(ring, "x2*x3"), qm(ring, "x3^2"),
                             qm(ring, "x1*x3^2")};
    auto h = hilbert_data(uj, janet_separation(uj));
    CHECK(h.ideal_count(2) == 3);
    CHECK(h.ideal_count(3) == 7);
    CHECK(h.ideal_count(0) == 0);
    for (Degree d = 0; d <= 7; ++d) {
        CHECK(h.ideal_count(d) == hilbert_bruteforce(uj, d));
        mpz_class all;
        mpz_bin_uiui(all.get_mpz_t(), static_cast<unsigned long>(2 + d),
                     static_cast<unsigned long>(d));
        CHECK(h.quotient_count(d) == all - hilbert_bruteforce(uj, d));
    }
}

TEST_CASE("monomial pommaret autoreduction and the separation inclusion") {
    std::mt19937_64 rng(77);
    for (int iter = 0; iter < 40; ++iter) {
        auto u = ivbtest::random_monomial_set(rng, 4, 4, 5);
        auto reduced = monomial_p_autoreduce(u, OrderKind::degrevlex);
        auto jt = janet_separation(reduced);
        for (std::size_t i = 0; i < reduced.size(); ++i) {
            VarSet mp = pommaret_mult(reduced[i]);
            CHECK((mp & jt.mult[i]) == mp);  // M_P subset of M_J
        }
    }
}
