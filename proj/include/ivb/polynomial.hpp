#ifndef IVB_POLYNOMIAL_HPP
#define IVB_POLYNOMIAL_HPP

#include <algorithm>
#include <memory>
#include <span>
#include <utility>
#include <vector>

#include "ivb/monomial.hpp"
#include "ivb/ordering.hpp"

namespace ivb {

// Everything a polynomial needs to interpret itself: variables, the active
// admissible ordering, and the coefficient field.
template <typename F>
struct Ring {
    ContextPtr vars;
    OrderKind order;
    F field;

    std::size_t nvars() const { return vars->size(); }
    friend bool operator==(const Ring& a, const Ring& b) {
        return *a.vars == *b.vars && a.order == b.order && a.field == b.field;
    }
};

template <typename F>
using RingPtr = std::shared_ptr<const Ring<F>>;

template <typename F>
RingPtr<F> make_ring(ContextPtr vars, OrderKind order, F field) {
    return std::make_shared<const Ring<F>>(Ring<F>{std::move(vars), order, std::move(field)});
}

template <typename F>
void require_same_ring(const Ring<F>& a, const Ring<F>& b) {
    if (!(a == b)) throw context_error("mismatched rings");
}

template <typename F>
struct Term {
    Monomial mon;
    typename F::Elem coeff;
};

// Sparse polynomial: term list strictly descending under the ring's ordering,
// no zero coefficients. The empty list is 0.
template <typename F>
class Polynomial {
public:
    using Elem = typename F::Elem;

    Polynomial() = default;
    explicit Polynomial(RingPtr<F> ring) : ring_(std::move(ring)) {}

    // Normalizes an arbitrary term list: sorts, merges equal monomials,
    // drops zero coefficients.
    static Polynomial from_terms(RingPtr<F> ring, std::vector<Term<F>> terms) {
        const auto& fld = ring->field;
        std::sort(terms.begin(), terms.end(), [&](const Term<F>& a, const Term<F>& b) {
            return compare(ring->order, a.mon, b.mon) > 0;
        });
        std::vector<Term<F>> out;
        out.reserve(terms.size());
        for (auto& t : terms) {
            if (!out.empty() && out.back().mon == t.mon)
                out.back().coeff = fld.add(out.back().coeff, t.coeff);
            else
                out.push_back(std::move(t));
            if (!out.empty() && fld.is_zero(out.back().coeff)) out.pop_back();
        }
        Polynomial p(std::move(ring));
        p.terms_ = std::move(out);
        return p;
    }

    const RingPtr<F>& ring() const { return ring_; }
    const std::vector<Term<F>>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    const Monomial& lm() const {
        if (is_zero()) throw precondition_error("leading monomial of zero polynomial");
        return terms_.front().mon;
    }
    const Elem& lc() const {
        if (is_zero()) throw precondition_error("leading coefficient of zero polynomial");
        return terms_.front().coeff;
    }

    std::vector<Monomial> support() const {
        std::vector<Monomial> s;
        s.reserve(terms_.size());
        for (const auto& t : terms_) s.push_back(t.mon);
        return s;
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        if (a.terms_.size() != b.terms_.size()) return false;
        const auto& fld = (a.ring_ ? a.ring_ : b.ring_)->field;
        for (std::size_t i = 0; i < a.terms_.size(); ++i)
            if (a.terms_[i].mon != b.terms_[i].mon ||
                !fld.equal(a.terms_[i].coeff, b.terms_[i].coeff))
                return false;
        return true;
    }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

private:
    RingPtr<F> ring_;
    std::vector<Term<F>> terms_;

    template <typename G>
    friend Polynomial<G> add(const Polynomial<G>&, const Polynomial<G>&);
    template <typename G>
    friend Polynomial<G> sub(const Polynomial<G>&, const Polynomial<G>&);
    template <typename G>
    friend Polynomial<G> scale(const Polynomial<G>&, const typename G::Elem&);
    template <typename G>
    friend Polynomial<G> mul_term(const Polynomial<G>&, const Monomial&,
                                  const typename G::Elem&);
};

template <typename F>
Polynomial<F> make_poly(RingPtr<F> ring, std::vector<Term<F>> terms) {
    return Polynomial<F>::from_terms(std::move(ring), std::move(terms));
}

template <typename F>
Polynomial<F> add(const Polynomial<F>& f, const Polynomial<F>& g) {
    const RingPtr<F>& ring = f.ring() ? f.ring() : g.ring();
    if (f.ring() && g.ring()) require_same_ring(*f.ring(), *g.ring());
    const auto& fld = ring->field;
    Polynomial<F> r(ring);
    r.terms_.reserve(f.size() + g.size());
    std::size_t i = 0, j = 0;
    while (i < f.size() && j < g.size()) {
        auto c = compare(ring->order, f.terms()[i].mon, g.terms()[j].mon);
        if (c > 0) {
            r.terms_.push_back(f.terms()[i++]);
        } else if (c < 0) {
            r.terms_.push_back(g.terms()[j++]);
        } else {
            auto s = fld.add(f.terms()[i].coeff, g.terms()[j].coeff);
            if (!fld.is_zero(s)) r.terms_.push_back({f.terms()[i].mon, std::move(s)});
            ++i, ++j;
        }
    }
    for (; i < f.size(); ++i) r.terms_.push_back(f.terms()[i]);
    for (; j < g.size(); ++j) r.terms_.push_back(g.terms()[j]);
    return r;
}

template <typename F>
Polynomial<F> scale(const Polynomial<F>& f, const typename F::Elem& c) {
    const auto& fld = f.ring()->field;
    Polynomial<F> r(f.ring());
    if (fld.is_zero(c)) return r;
    r.terms_.reserve(f.size());
    for (const auto& t : f.terms()) r.terms_.push_back({t.mon, fld.mul(t.coeff, c)});
    return r;
}

template <typename F>
Polynomial<F> neg(const Polynomial<F>& f) {
    return scale(f, f.ring()->field.neg(f.ring()->field.one()));
}

template <typename F>
Polynomial<F> sub(const Polynomial<F>& f, const Polynomial<F>& g) {
    return add(f, neg(g));
}

// f * (c * m) for a single term.
template <typename F>
Polynomial<F> mul_term(const Polynomial<F>& f, const Monomial& m,
                       const typename F::Elem& c) {
    const auto& fld = f.ring()->field;
    Polynomial<F> r(f.ring());
    if (fld.is_zero(c)) return r;
    r.terms_.reserve(f.size());
    for (const auto& t : f.terms()) r.terms_.push_back({mul(t.mon, m), fld.mul(t.coeff, c)});
    return r;
}

template <typename F>
Polynomial<F> mul_var(const Polynomial<F>& f, std::size_t i) {
    return mul_term(f, Monomial::variable(f.ring()->nvars(), i), f.ring()->field.one());
}

template <typename F>
Polynomial<F> mul(const Polynomial<F>& f, const Polynomial<F>& g) {
    if (f.ring() && g.ring()) require_same_ring(*f.ring(), *g.ring());
    Polynomial<F> acc(f.ring());
    for (const auto& t : g.terms()) acc = add(acc, mul_term(f, t.mon, t.coeff));
    return acc;
}

template <typename F>
Polynomial<F> make_monic(const Polynomial<F>& f) {
    if (f.is_zero()) return f;
    const auto& fld = f.ring()->field;
    if (fld.is_one(f.lc())) return f;
    return scale(f, fld.inv(f.lc()));
}

namespace detail {

// Reducer choice: among elements of F whose lm divides m by ordinary
// division, the one with the largest leading monomial.
template <typename F>
const Polynomial<F>* pick_conventional_reducer(const Monomial& m,
                                               std::span<const Polynomial<F>> set,
                                               OrderKind ord) {
    const Polynomial<F>* best = nullptr;
    for (const auto& g : set) {
        if (g.is_zero()) continue;
        if (!divides(g.lm(), m)) continue;
        if (!best || compare(ord, g.lm(), best->lm()) > 0) best = &g;
    }
    return best;
}

}  // namespace detail

// Full conventional normal form: no term of the result is divisible by any
// lm(g), g in set.
template <typename F>
Polynomial<F> conventional_nf(const Polynomial<F>& f, std::span<const Polynomial<F>> set) {
    const auto& ring = f.ring();
    const auto& fld = ring->field;
    std::vector<Term<F>> done;
    Polynomial<F> r = f;
    while (!r.is_zero()) {
        const Term<F>& t = r.terms().front();
        const Polynomial<F>* g = detail::pick_conventional_reducer<F>(t.mon, set, ring->order);
        if (g) {
            auto q = quotient(t.mon, g->lm());
            auto c = fld.div(t.coeff, g->lc());
            r = sub(r, mul_term(*g, q, c));
        } else {
            done.push_back(t);
            r = sub(r, Polynomial<F>::from_terms(ring, {t}));
        }
    }
    return Polynomial<F>::from_terms(ring, std::move(done));
}

template <typename F>
Polynomial<F> conventional_nf(const Polynomial<F>& f, const std::vector<Polynomial<F>>& set) {
    return conventional_nf(f, std::span<const Polynomial<F>>(set));
}

// Descending-lm order for basis sets; ties resolved by full term comparison
// so that sorting is deterministic.
template <typename F>
bool poly_before(const Polynomial<F>& a, const Polynomial<F>& b) {
    OrderKind ord = (a.ring() ? a.ring() : b.ring())->order;
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        auto c = compare(ord, a.terms()[i].mon, b.terms()[j].mon);
        if (c != 0) return c > 0;
        ++i, ++j;
    }
    return a.size() > b.size();
}

template <typename F>
void sort_basis(std::vector<Polynomial<F>>& v) {
    std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return poly_before(a, b); });
}

// Conventional autoreduction: result is monic, pairwise fully reduced, and
// generates the same ideal.
template <typename F>
std::vector<Polynomial<F>> autoreduce(std::vector<Polynomial<F>> set) {
    std::vector<Polynomial<F>> h;
    for (auto& f : set)
        if (!f.is_zero()) h.push_back(make_monic(f));
    sort_basis(h);
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < h.size(); ++i) {
            std::vector<Polynomial<F>> others;
            others.reserve(h.size() - 1);
            for (std::size_t j = 0; j < h.size(); ++j)
                if (j != i) others.push_back(h[j]);
            Polynomial<F> r = conventional_nf(h[i], others);
            if (r == h[i]) continue;
            h.erase(h.begin() + static_cast<std::ptrdiff_t>(i));
            if (!r.is_zero()) h.push_back(make_monic(r));
            sort_basis(h);
            changed = true;
            break;
        }
    }
    return h;
}

template <typename F>
std::vector<Monomial> leading_monomials(const std::vector<Polynomial<F>>& set) {
    std::vector<Monomial> u;
    u.reserve(set.size());
    for (const auto& f : set) u.push_back(f.lm());
    return u;
}

}  // namespace ivb

#endif
