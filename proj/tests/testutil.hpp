#ifndef IVB_TESTUTIL_HPP
#define IVB_TESTUTIL_HPP

#include <random>
#include <string>
#include <vector>

#include "ivb/io.hpp"
#include "ivb/polynomial.hpp"
#include "ivb/rationals.hpp"

namespace ivbtest {

using QPoly = ivb::Polynomial<ivb::Rationals>;
using QRing = ivb::RingPtr<ivb::Rationals>;

inline QRing ring_q(std::vector<std::string> vars,
                    ivb::OrderKind ord = ivb::OrderKind::degrevlex) {
    return ivb::make_ring(ivb::make_context(std::move(vars)), ord, ivb::Rationals{});
}

inline QPoly qp(const QRing& ring, const std::string& text) {
    return ivb::parse_polynomial(text, ring);
}

inline std::vector<QPoly> qps(const QRing& ring, const std::vector<std::string>& texts) {
    std::vector<QPoly> out;
    out.reserve(texts.size());
    for (const auto& t : texts) out.push_back(qp(ring, t));
    return out;
}

inline ivb::Monomial qm(const QRing& ring, const std::string& text) {
    return ivb::parse_monomial(text, *ring->vars);
}

inline ivb::Monomial random_monomial(std::mt19937_64& rng, std::size_t nvars,
                                     ivb::Degree maxdeg) {
    std::uniform_int_distribution<ivb::Degree> degd(0, maxdeg);
    std::uniform_int_distribution<std::size_t> vard(0, nvars - 1);
    ivb::Monomial m(nvars);
    ivb::Degree d = degd(rng);
    for (ivb::Degree k = 0; k < d; ++k) m = ivb::mul_var(m, vard(rng));
    return m;
}

inline std::vector<ivb::Monomial> random_monomial_set(std::mt19937_64& rng, std::size_t nvars,
                                                      ivb::Degree maxdeg, std::size_t count) {
    std::vector<ivb::Monomial> u;
    while (u.size() < count) {
        auto m = random_monomial(rng, nvars, maxdeg);
        bool dup = false;
        for (const auto& v : u) dup = dup || v == m;
        if (!dup) u.push_back(m);
    }
    return u;
}

inline QPoly random_poly(std::mt19937_64& rng, const QRing& ring, ivb::Degree maxdeg,
                         std::size_t maxterms) {
    std::uniform_int_distribution<std::size_t> termd(1, maxterms);
    std::uniform_int_distribution<long> coefd(-5, 5);
    std::vector<ivb::Term<ivb::Rationals>> terms;
    std::size_t k = termd(rng);
    for (std::size_t i = 0; i < k; ++i) {
        long c = coefd(rng);
        if (c == 0) c = 1;
        terms.push_back({random_monomial(rng, ring->nvars(), maxdeg), mpq_class(c)});
    }
    return ivb::make_poly(ring, std::move(terms));
}

}  // namespace ivbtest

#endif
