#ifndef IVB_GROEBNER_HPP
#define IVB_GROEBNER_HPP

#include <set>
#include <utility>
#include <vector>

#include "ivb/polynomial.hpp"

namespace ivb {

template <typename F>
Polynomial<F> s_polynomial(const Polynomial<F>& f, const Polynomial<F>& g) {
    const auto& fld = f.ring()->field;
    Monomial l = lcm(f.lm(), g.lm());
    auto lhs = mul_term(f, quotient(l, f.lm()), fld.inv(f.lc()));
    auto rhs = mul_term(g, quotient(l, g.lm()), fld.inv(g.lc()));
    return sub(lhs, rhs);
}

namespace detail {

struct PairKey {
    std::size_t i, j;
};

inline PairKey norm_pair(std::size_t a, std::size_t b) {
    return a < b ? PairKey{a, b} : PairKey{b, a};
}

inline bool operator<(const PairKey& a, const PairKey& b) {
    return a.i != b.i ? a.i < b.i : a.j < b.j;
}

}  // namespace detail

// Buchberger completion with the product criterion and the chain criterion
// applied when a pair is selected. Normal strategy: smallest lcm first.
template <typename F>
std::vector<Polynomial<F>> buchberger(std::vector<Polynomial<F>> gens) {
    std::vector<Polynomial<F>> g = autoreduce(std::move(gens));
    if (g.empty()) return g;
    const RingPtr<F> ring = g.front().ring();
    const OrderKind ord = ring->order;

    struct Entry {
        Monomial l;
        std::size_t i, j;
    };
    auto entry_less = [ord](const Entry& a, const Entry& b) {
        auto c = compare(ord, a.l, b.l);
        if (c != 0) return c < 0;
        if (a.i != b.i) return a.i < b.i;
        return a.j < b.j;
    };
    std::set<Entry, decltype(entry_less)> queue(entry_less);
    std::set<detail::PairKey> pending;

    auto push_pair = [&](std::size_t i, std::size_t j) {
        auto key = detail::norm_pair(i, j);
        queue.insert({lcm(g[key.i].lm(), g[key.j].lm()), key.i, key.j});
        pending.insert(key);
    };

    for (std::size_t i = 0; i < g.size(); ++i)
        for (std::size_t j = i + 1; j < g.size(); ++j) push_pair(i, j);

    while (!queue.empty()) {
        Entry e = *queue.begin();
        queue.erase(queue.begin());
        pending.erase(detail::norm_pair(e.i, e.j));

        // Product criterion: coprime leading monomials.
        if (e.l == mul(g[e.i].lm(), g[e.j].lm())) continue;

        // Chain criterion: some lm(g_k) divides the lcm and both adjacent
        // pairs were already treated.
        bool skip = false;
        for (std::size_t k = 0; k < g.size() && !skip; ++k) {
            if (k == e.i || k == e.j) continue;
            if (!divides(g[k].lm(), e.l)) continue;
            if (!pending.count(detail::norm_pair(e.i, k)) &&
                !pending.count(detail::norm_pair(e.j, k)))
                skip = true;
        }
        if (skip) continue;

        Polynomial<F> r = conventional_nf(s_polynomial(g[e.i], g[e.j]), g);
        if (r.is_zero()) continue;
        g.push_back(make_monic(r));
        std::size_t idx = g.size() - 1;
        for (std::size_t k = 0; k < idx; ++k) push_pair(k, idx);
    }

    // Minimalize: drop generators whose lm is divisible by another kept lm.
    std::vector<Polynomial<F>> minimal;
    sort_basis(g);
    for (auto it = g.rbegin(); it != g.rend(); ++it) {  // ascending lm
        bool redundant = false;
        for (const auto& kept : minimal)
            if (divides(kept.lm(), it->lm())) {
                redundant = true;
                break;
            }
        if (!redundant) minimal.push_back(*it);
    }

    // Interreduce tails to get the unique reduced basis.
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < minimal.size(); ++i) {
            std::vector<Polynomial<F>> others;
            for (std::size_t j = 0; j < minimal.size(); ++j)
                if (j != i) others.push_back(minimal[j]);
            Polynomial<F> r = make_monic(conventional_nf(minimal[i], others));
            if (r != minimal[i]) {
                minimal[i] = r;
                changed = true;
            }
        }
    }
    sort_basis(minimal);
    return minimal;
}

// True iff every S-polynomial of the set reduces to zero.
template <typename F>
bool is_groebner_basis(const std::vector<Polynomial<F>>& g) {
    for (std::size_t i = 0; i < g.size(); ++i)
        for (std::size_t j = i + 1; j < g.size(); ++j)
            if (!conventional_nf(s_polynomial(g[i], g[j]), g).is_zero()) return false;
    return true;
}

// Ideal equality through the uniqueness of reduced Groebner bases.
template <typename F>
bool ideal_equal(const std::vector<Polynomial<F>>& f, const std::vector<Polynomial<F>>& g) {
    auto rf = buchberger(f);
    auto rg = buchberger(g);
    if (rf.size() != rg.size()) return false;
    for (std::size_t i = 0; i < rf.size(); ++i)
        if (rf[i] != rg[i]) return false;
    return true;
}

}  // namespace ivb

#endif
