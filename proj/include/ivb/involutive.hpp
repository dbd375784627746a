#ifndef IVB_INVOLUTIVE_HPP
#define IVB_INVOLUTIVE_HPP

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "ivb/division.hpp"
#include "ivb/groebner.hpp"
#include "ivb/polynomial.hpp"

namespace ivb {

// ---------------------------------------------------------------------------
// Involutive normal forms and autoreduction
// ---------------------------------------------------------------------------

namespace detail {

// Involutive reducer for a monomial among the leading monomials of a set,
// skipping one index (the element being reduced against the others). The
// Janet divisor is unique; Pommaret ties go to the largest leading monomial.
template <typename F>
std::optional<std::size_t> involutive_reducer(const Monomial& m,
                                              const std::vector<Monomial>& lms,
                                              const SeparationTable& table, OrderKind ord,
                                              std::size_t skip) {
    std::optional<std::size_t> best;
    for (std::size_t j = 0; j < lms.size(); ++j) {
        if (j == skip) continue;
        if (!involutively_divides(lms[j], table.mult[j], m)) continue;
        if (table.division == Division::janet) return j;
        if (!best || compare(ord, lms[j], lms[*best]) > 0) best = j;
    }
    return best;
}

constexpr std::size_t no_skip = static_cast<std::size_t>(-1);

}  // namespace detail

// Full involutive normal form of h modulo the set: no term of the result has
// an involutive divisor among the leading monomials.
template <typename F>
Polynomial<F> involutive_nf(const Polynomial<F>& h, const std::vector<Polynomial<F>>& set,
                            Division d, std::size_t skip = detail::no_skip) {
    if (set.empty()) return h;
    const auto& ring = h.ring();
    const auto& fld = ring->field;
    auto lms = leading_monomials(set);
    auto table = separation(lms, d);
    std::vector<Term<F>> done;
    Polynomial<F> r = h;
    while (!r.is_zero()) {
        const Term<F>& t = r.terms().front();
        auto j = detail::involutive_reducer<F>(t.mon, lms, table, ring->order, skip);
        if (j) {
            const Polynomial<F>& g = set[*j];
            r = sub(r, mul_term(g, quotient(t.mon, g.lm()), fld.div(t.coeff, g.lc())));
        } else {
            done.push_back(t);
            r = sub(r, Polynomial<F>::from_terms(ring, {t}));
        }
    }
    return Polynomial<F>::from_terms(ring, std::move(done));
}

// Definition-4 check: no term of any element has an involutive divisor among
// the other leading monomials.
template <typename F>
bool is_involutively_autoreduced(const std::vector<Polynomial<F>>& set, Division d) {
    if (set.size() < 2) return true;
    auto lms = leading_monomials(set);
    auto table = separation(lms, d);
    for (std::size_t i = 0; i < set.size(); ++i)
        for (const auto& t : set[i].terms())
            for (std::size_t j = 0; j < set.size(); ++j) {
                if (j == i) continue;
                if (involutively_divides(lms[j], table.mult[j], t.mon)) return false;
            }
    return true;
}

// Involutive autoreduction for one division: reduce every element modulo the
// others until a fixpoint. Janet autoreduction of a set with distinct leading
// monomials never changes them.
template <typename F>
std::vector<Polynomial<F>> autoreduce_involutive(std::vector<Polynomial<F>> set, Division d) {
    std::vector<Polynomial<F>> h;
    for (auto& f : set)
        if (!f.is_zero()) h.push_back(make_monic(f));
    sort_basis(h);
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < h.size(); ++i) {
            Polynomial<F> r = involutive_nf(h[i], h, d, i);
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
std::vector<Polynomial<F>> autoreduce_j(std::vector<Polynomial<F>> set) {
    return autoreduce_involutive(std::move(set), Division::janet);
}

template <typename F>
std::vector<Polynomial<F>> autoreduce_p(std::vector<Polynomial<F>> set) {
    return autoreduce_involutive(std::move(set), Division::pommaret);
}

// Normal-form flavour used inside the combined autoreduction loop.
enum class PJVariant { janet_nf, pommaret_nf };

// Combined Pommaret-Janet autoreduction. Heads lying in the Pommaret cone of
// the other heads are removed and their polynomials reduced back in; the
// result is both P- and J-autoreduced. Given a Janet basis it returns a Janet
// basis of the same ideal.
template <typename F>
std::vector<Polynomial<F>> autoreduce_pj(std::vector<Polynomial<F>> set,
                                         PJVariant variant = PJVariant::janet_nf) {
    std::vector<Polynomial<F>> h;
    for (auto& f : set)
        if (!f.is_zero()) h.push_back(make_monic(f));
    sort_basis(h);
    h.erase(std::unique(h.begin(), h.end()), h.end());

    const Division nf_div =
        variant == PJVariant::janet_nf ? Division::janet : Division::pommaret;
    for (;;) {
        std::vector<Polynomial<F>> snapshot = h;
        std::vector<Polynomial<F>> moved;
        // Heads inside the Pommaret cone of the remaining heads migrate out.
        bool again = true;
        while (again) {
            again = false;
            for (std::size_t i = 0; i < h.size(); ++i) {
                bool covered = false;
                for (std::size_t j = 0; j < h.size() && !covered; ++j) {
                    if (j == i) continue;
                    if (involutively_divides(h[j].lm(), pommaret_mult(h[j].lm()), h[i].lm()))
                        covered = true;
                }
                if (covered) {
                    moved.push_back(h[i]);
                    h.erase(h.begin() + static_cast<std::ptrdiff_t>(i));
                    again = true;
                    break;
                }
            }
        }
        for (const auto& g : moved) {
            Polynomial<F> f = involutive_nf(g, h, nf_div);
            if (!f.is_zero()) {
                h.push_back(make_monic(f));
                sort_basis(h);
            }
        }
        if (h == snapshot) break;
    }
    h = autoreduce_involutive(std::move(h), Division::janet);
    // The loop above can stall on sets that are far from any basis; fall back
    // to plain Definition-4 passes so the postcondition holds unconditionally.
    if (!is_involutively_autoreduced(h, Division::pommaret))
        h = autoreduce_involutive(autoreduce_involutive(std::move(h), Division::pommaret),
                                  Division::janet);
    return h;
}

// ---------------------------------------------------------------------------
// Basis predicates
// ---------------------------------------------------------------------------

// Definition 6: every nonmultiplicative prolongation of every element has a
// vanishing involutive normal form. Requires the respective autoreducedness.
template <typename F>
bool is_involutive_basis(const std::vector<Polynomial<F>>& set, Division d) {
    if (set.empty()) return true;
    if (!is_involutively_autoreduced(set, d))
        throw precondition_error("set is not autoreduced for the division");
    auto lms = leading_monomials(set);
    auto table = separation(lms, d);
    for (std::size_t i = 0; i < set.size(); ++i) {
        VarSet nm = table.nonmultiplicative(i);
        for (std::size_t x = 0; x < table.nvars; ++x) {
            if (!varset_contains(nm, x)) continue;
            if (!involutive_nf(mul_var(set[i], x), set, d).is_zero()) return false;
        }
    }
    return true;
}

template <typename F>
bool is_janet_basis(const std::vector<Polynomial<F>>& set) {
    return is_involutive_basis(set, Division::janet);
}

template <typename F>
bool is_pommaret_basis(const std::vector<Polynomial<F>>& set) {
    return is_involutive_basis(set, Division::pommaret);
}

// ---------------------------------------------------------------------------
// JanetBasis completion
// ---------------------------------------------------------------------------

struct BasisStats {
    std::uint64_t prolongations = 0;
    std::uint64_t criterion_hits = 0;
    std::uint64_t normal_forms = 0;
    std::uint64_t autoreductions = 0;
};

template <typename F>
struct BasisReport {
    std::vector<Polynomial<F>> basis;
    Division division = Division::janet;
    bool is_minimal = false;
    bool finite_pommaret = false;
    BasisStats stats;
};

namespace detail {

struct ProlongationEntry {
    Monomial ancestor;
    VarSet processed = 0;
};

// Chain-criterion analogue: the prolongation may be skipped if some tracked
// entry (f, v, D) has lcm(u, v) strictly below it and its leading monomial
// lies in the Janet cone of lm(f).
inline bool criterion_holds(const Monomial& prolong_lm, const Monomial& ancestor,
                            const std::vector<ProlongationEntry>& entries,
                            const std::vector<Monomial>& lms, const SeparationTable& table,
                            OrderKind ord) {
    for (std::size_t k = 0; k < entries.size(); ++k) {
        if (compare(ord, lcm(ancestor, entries[k].ancestor), prolong_lm) >= 0) continue;
        if (involutively_divides(lms[k], table.mult[k], prolong_lm)) return true;
    }
    return false;
}

}  // namespace detail

// True when the basis has a finite Pommaret basis, i.e. no Pommaret-
// nonmultiplicative prolongation of a head escapes the Pommaret cone.
// The input must be a PJ-autoreduced Janet basis; then a positive answer
// means the basis itself is the finite Pommaret basis.
template <typename F>
bool has_finite_pommaret_basis(const std::vector<Polynomial<F>>& basis) {
    if (basis.empty()) return true;
    if (!is_involutively_autoreduced(basis, Division::pommaret) ||
        !is_involutive_basis(basis, Division::janet))
        throw precondition_error("expected a PJ-autoreduced Janet basis");
    auto lms = leading_monomials(basis);
    auto ptable = separation(lms, Division::pommaret);
    for (std::size_t i = 0; i < lms.size(); ++i) {
        VarSet nm = ptable.nonmultiplicative(i);
        for (std::size_t x = 0; x < ptable.nvars; ++x) {
            if (!varset_contains(nm, x)) continue;
            Monomial w = mul_var(lms[i], x);
            if (!involutive_divisor(w, lms, ptable, basis.front().ring()->order))
                return false;
        }
    }
    return true;
}

namespace detail {

// lm(G) generates the initial ideal; the basis is minimal iff lm(G) equals
// the Janet completion of its own minimal generating subset.
template <typename F>
bool is_minimal_janet_lm_set(const std::vector<Polynomial<F>>& basis) {
    auto lms = leading_monomials(basis);
    std::vector<Monomial> gens;
    for (std::size_t i = 0; i < lms.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < lms.size() && !redundant; ++j)
            if (j != i && divides(lms[j], lms[i])) redundant = true;
        if (!redundant) gens.push_back(lms[i]);
    }
    OrderKind ord = basis.front().ring()->order;
    auto completed = janet_complete(std::move(gens), ord);
    if (completed.size() != lms.size()) return false;
    std::sort(lms.begin(), lms.end(),
              [ord](const Monomial& a, const Monomial& b) { return compare(ord, a, b) < 0; });
    return completed == lms;
}

}  // namespace detail

// Algorithm: Janet basis completion by treatment of the lowest
// nonmultiplicative prolongation, with Pommaret-Janet autoreduction of the
// intermediate basis and the involutive chain criterion.
template <typename F>
BasisReport<F> janet_basis(const std::vector<Polynomial<F>>& gens,
                           PJVariant variant = PJVariant::janet_nf,
                           bool use_criterion = true) {
    BasisReport<F> report;
    report.division = Division::janet;

    std::vector<Polynomial<F>> g = autoreduce(gens);
    if (g.empty()) throw precondition_error("janet_basis: input generates the zero ideal");
    const RingPtr<F> ring = g.front().ring();
    const OrderKind ord = ring->order;

    std::vector<detail::ProlongationEntry> entries(g.size());
    auto lms = leading_monomials(g);
    for (std::size_t i = 0; i < g.size(); ++i) entries[i] = {lms[i], 0};

    auto jtable = janet_separation(lms);

    for (;;) {
        // Select the pending prolongation with the lowest lm(g)*x; on ties
        // the lowest variable (largest index) wins.
        std::optional<std::size_t> sel_i;
        std::size_t sel_x = 0;
        Monomial sel_lm;
        for (std::size_t i = 0; i < g.size(); ++i) {
            VarSet open = jtable.nonmultiplicative(i) & ~entries[i].processed;
            for (std::size_t x = 0; x < jtable.nvars; ++x) {
                if (!varset_contains(open, x)) continue;
                Monomial w = mul_var(lms[i], x);
                if (!sel_i) {
                    sel_i = i, sel_x = x, sel_lm = w;
                    continue;
                }
                auto c = compare(ord, w, sel_lm);
                if (c < 0 || (c == 0 && x > sel_x)) sel_i = i, sel_x = x, sel_lm = w;
            }
        }
        if (!sel_i) break;

        std::size_t i = *sel_i;
        entries[i].processed |= VarSet{1} << sel_x;
        report.stats.prolongations++;

        bool skipped = false;
        if (use_criterion &&
            detail::criterion_holds(sel_lm, entries[i].ancestor, entries, lms, jtable, ord)) {
            report.stats.criterion_hits++;
            skipped = true;
        }

        // Snapshot of T keyed by leading monomial, taken after the D-update
        // and before the basis changes.
        std::vector<std::pair<Monomial, detail::ProlongationEntry>> old_entries;
        old_entries.reserve(g.size() + 1);
        for (std::size_t k = 0; k < g.size(); ++k) old_entries.emplace_back(lms[k], entries[k]);

        bool basis_changed = false;
        if (!skipped) {
            Polynomial<F> h = involutive_nf(mul_var(g[i], sel_x), g, Division::janet);
            report.stats.normal_forms++;
            if (!h.is_zero()) {
                h = make_monic(h);
                if (h.lm() == sel_lm) {
                    // Head survived: insert without autoreduction, the
                    // ancestor is inherited.
                    old_entries.emplace_back(h.lm(),
                                             detail::ProlongationEntry{entries[i].ancestor, 0});
                    g.push_back(std::move(h));
                } else {
                    old_entries.emplace_back(h.lm(), detail::ProlongationEntry{h.lm(), 0});
                    g.push_back(std::move(h));
                    g = autoreduce_pj(std::move(g), variant);
                    report.stats.autoreductions++;
                }
                basis_changed = true;
            }
        }

        if (basis_changed) {
            lms = leading_monomials(g);
            jtable = janet_separation(lms);
        }

        // Rebuild T: keep state for leading monomials that survived,
        // re-anchoring ancestors to the generator whose Janet cone contains
        // them; everything else starts fresh.
        entries.assign(g.size(), {});
        for (std::size_t k = 0; k < g.size(); ++k) {
            const detail::ProlongationEntry* old = nullptr;
            for (const auto& [m, e] : old_entries)
                if (m == lms[k]) {
                    old = &e;
                    break;
                }
            if (old) {
                auto anchor = involutive_divisor(old->ancestor, lms, jtable, ord);
                entries[k].ancestor = anchor ? lms[*anchor] : lms[k];
                entries[k].processed = old->processed & jtable.nonmultiplicative(k);
            } else {
                entries[k] = {lms[k], 0};
            }
        }
    }

    // Head insertions without autoreduction can in principle leave stale
    // reducible tails behind; a final combined pass restores Definition 4.
    if (!is_involutively_autoreduced(g, Division::janet) ||
        !is_involutively_autoreduced(g, Division::pommaret)) {
        g = autoreduce_pj(std::move(g), variant);
        report.stats.autoreductions++;
    }
    sort_basis(g);
    if (!is_janet_basis(g)) throw error("internal error: completion is not a Janet basis");
    report.finite_pommaret = has_finite_pommaret_basis(g);
    report.is_minimal = detail::is_minimal_janet_lm_set(g);
    report.basis = std::move(g);
    return report;
}

// Minimal Janet basis through the reduced Groebner basis: complete its
// leading monomials under Janet division, realize each added monomial as a
// shifted generator and Janet-autoreduce the tails.
template <typename F>
BasisReport<F> minimal_janet_basis(const std::vector<Polynomial<F>>& gens) {
    BasisReport<F> report;
    report.division = Division::janet;

    std::vector<Polynomial<F>> gb = buchberger(gens);
    if (gb.empty())
        throw precondition_error("minimal_janet_basis: input generates the zero ideal");
    const OrderKind ord = gb.front().ring()->order;

    auto gb_lms = leading_monomials(gb);
    auto completed = janet_complete(gb_lms, ord);
    report.stats.prolongations = completed.size() - gb_lms.size();

    std::vector<Polynomial<F>> basis = gb;
    for (const auto& w : completed) {
        bool already = false;
        for (const auto& m : gb_lms)
            if (m == w) {
                already = true;
                break;
            }
        if (already) continue;
        const Polynomial<F>* src = nullptr;
        for (const auto& r : gb)
            if (divides(r.lm(), w) && (!src || compare(ord, r.lm(), src->lm()) > 0)) src = &r;
        if (!src) throw error("internal error: completion monomial outside the initial ideal");
        basis.push_back(mul_term(*src, quotient(w, src->lm()), src->ring()->field.one()));
    }
    basis = autoreduce_involutive(std::move(basis), Division::janet);
    report.stats.autoreductions = 1;
    sort_basis(basis);

    if (!is_janet_basis(basis)) throw error("internal error: minimal completion failed");
    report.finite_pommaret = has_finite_pommaret_basis(basis);
    report.is_minimal = true;
    report.basis = std::move(basis);
    return report;
}

// Truncated Pommaret completion of the basis' leading monomials.
template <typename F>
std::vector<Monomial> truncated_pommaret_basis(const std::vector<Polynomial<F>>& basis,
                                               Degree maxdeg) {
    if (basis.empty()) return {};
    return pommaret_complete_truncated(leading_monomials(basis),
                                       basis.front().ring()->order, maxdeg);
}

// Hilbert-function data of the ideal from an involutive basis; the basis
// property is a precondition and is checked.
template <typename F>
HilbertData hilbert_series(const std::vector<Polynomial<F>>& basis, Division d) {
    if (!is_involutive_basis(basis, d))
        throw precondition_error("hilbert_series: input is not an involutive basis");
    if (basis.empty()) return {};
    auto lms = leading_monomials(basis);
    return hilbert_data(lms, separation(lms, d));
}

}  // namespace ivb

#endif
