#include "ivb/division.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace ivb {

VarSet pommaret_mult(const Monomial& u) {
    std::size_t n = u.nvars();
    VarSet all = varset_all(n);
    if (u.is_one()) return all;
    std::size_t k = n;
    while (k > 0 && u.exponent(k - 1) == 0) --k;
    // variables x_k,...,x_n (0-based: k-1..n-1)
    VarSet s = 0;
    for (std::size_t i = k - 1; i < n; ++i) s |= VarSet{1} << i;
    return s;
}

namespace {

void janet_groups(std::span<const Monomial> u, std::vector<std::size_t> group,
                  std::size_t level, std::vector<VarSet>& mult) {
    if (group.empty() || level >= u.front().nvars()) return;
    Exponent maxd = 0;
    for (std::size_t idx : group) maxd = std::max(maxd, u[idx].exponent(level));
    std::map<Exponent, std::vector<std::size_t>> parts;
    for (std::size_t idx : group) {
        if (u[idx].exponent(level) == maxd) mult[idx] |= VarSet{1} << level;
        parts[u[idx].exponent(level)].push_back(idx);
    }
    for (auto& [d, part] : parts) janet_groups(u, std::move(part), level + 1, mult);
}

}  // namespace

SeparationTable janet_separation(std::span<const Monomial> u_set) {
    SeparationTable t;
    t.division = Division::janet;
    t.nvars = u_set.empty() ? 0 : u_set.front().nvars();
    t.mult.assign(u_set.size(), 0);
    if (u_set.empty()) return t;
    std::set<Monomial> seen;
    for (const auto& m : u_set)
        if (!seen.insert(m).second) throw precondition_error("duplicate monomials in Janet separation");
    std::vector<std::size_t> all(u_set.size());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    janet_groups(u_set, std::move(all), 0, t.mult);
    return t;
}

SeparationTable separation(std::span<const Monomial> u_set, Division d) {
    if (d == Division::janet) return janet_separation(u_set);
    SeparationTable t;
    t.division = Division::pommaret;
    t.nvars = u_set.empty() ? 0 : u_set.front().nvars();
    t.mult.reserve(u_set.size());
    for (const auto& u : u_set) t.mult.push_back(pommaret_mult(u));
    return t;
}

bool involutively_divides(const Monomial& u, VarSet mult_u, const Monomial& w) {
    for (std::size_t i = 0; i < u.nvars(); ++i) {
        Exponent a = u.exponent(i), b = w.exponent(i);
        if (a > b) return false;
        if (a < b && !varset_contains(mult_u, i)) return false;
    }
    return true;
}

std::optional<std::size_t> involutive_divisor(const Monomial& w,
                                              std::span<const Monomial> u_set,
                                              const SeparationTable& table,
                                              OrderKind ord) {
    std::optional<std::size_t> best;
    for (std::size_t i = 0; i < u_set.size(); ++i) {
        if (!involutively_divides(u_set[i], table.mult[i], w)) continue;
        if (table.division == Division::janet) return i;  // unique by disjointness
        if (!best || compare(ord, u_set[i], u_set[*best]) > 0) best = i;
    }
    return best;
}

bool cone_member(const Monomial& w, std::span<const Monomial> u_set, ConeKind kind,
                 OrderKind ord) {
    if (kind == ConeKind::full) {
        for (const auto& u : u_set)
            if (divides(u, w)) return true;
        return false;
    }
    auto table = separation(u_set, kind == ConeKind::janet ? Division::janet
                                                           : Division::pommaret);
    return involutive_divisor(w, u_set, table, ord).has_value();
}

std::vector<Monomial> monomials_of_degree(std::size_t nvars, Degree d) {
    std::vector<Monomial> out;
    std::vector<Exponent> cur(nvars, 0);
    // Lexicographic enumeration of compositions of d into nvars parts.
    auto rec = [&](auto&& self, std::size_t i, Degree rest) -> void {
        if (i + 1 == nvars) {
            cur[i] = static_cast<Exponent>(rest);
            out.emplace_back(cur);
            return;
        }
        for (Degree e = 0; e <= rest; ++e) {
            cur[i] = static_cast<Exponent>(e);
            self(self, i + 1, rest - e);
        }
    };
    if (nvars == 0) return out;
    rec(rec, 0, d);
    return out;
}

std::vector<Monomial> monomials_up_to_degree(std::size_t nvars, Degree d) {
    std::vector<Monomial> out;
    for (Degree k = 0; k <= d; ++k) {
        auto layer = monomials_of_degree(nvars, k);
        out.insert(out.end(), layer.begin(), layer.end());
    }
    return out;
}

namespace {

// Orthant compatibility: nonempty intersection of u*L(u) and v*L(v).
bool cones_intersect(const Monomial& u, VarSet mu, const Monomial& v, VarSet mv) {
    for (std::size_t i = 0; i < u.nvars(); ++i) {
        bool fu = varset_contains(mu, i), fv = varset_contains(mv, i);
        Exponent a = u.exponent(i), b = v.exponent(i);
        if (!fu && !fv && a != b) return false;
        if (!fu && fv && a < b) return false;
        if (fu && !fv && b < a) return false;
    }
    return true;
}

bool check_axioms_for(std::span<const Monomial> u_set, const SeparationTable& table,
                      Division d) {
    const std::size_t n = u_set.empty() ? 0 : u_set.front().nvars();
    Degree maxdeg = 0;
    for (const auto& u : u_set) maxdeg = std::max(maxdeg, u.degree());

    // (b) intersecting cones imply one generator involutively divides the other.
    for (std::size_t i = 0; i < u_set.size(); ++i)
        for (std::size_t j = 0; j < u_set.size(); ++j) {
            if (i == j) continue;
            if (!cones_intersect(u_set[i], table.mult[i], u_set[j], table.mult[j])) continue;
            if (!involutively_divides(u_set[i], table.mult[i], u_set[j]) &&
                !involutively_divides(u_set[j], table.mult[j], u_set[i]))
                return false;
        }

    // (c) if v lies in u's cone then L(v) is contained in L(u).
    for (std::size_t i = 0; i < u_set.size(); ++i)
        for (std::size_t j = 0; j < u_set.size(); ++j) {
            if (i == j) continue;
            if (!involutively_divides(u_set[i], table.mult[i], u_set[j])) continue;
            if ((table.mult[j] & table.mult[i]) != table.mult[j]) return false;
        }

    // (a) divisor closure of L(u,U), enumerated to twice the max degree.
    auto support_in = [n](const Monomial& w, VarSet s) {
        for (std::size_t k = 0; k < n; ++k)
            if (w.exponent(k) > 0 && !varset_contains(s, k)) return false;
        return true;
    };
    auto divisors_ok = [&](const Monomial& w, VarSet s) {
        std::vector<Exponent> cur(n, 0);
        auto rec = [&](auto&& self, std::size_t k) -> bool {
            if (k == n) return support_in(Monomial(cur), s);
            for (Exponent e = 0; e <= w.exponent(k); ++e) {
                cur[k] = e;
                if (!self(self, k + 1)) return false;
            }
            return true;
        };
        return rec(rec, 0);
    };
    const auto all_monomials = monomials_up_to_degree(n, 2 * maxdeg);
    for (std::size_t i = 0; i < u_set.size(); ++i) {
        for (const auto& w : all_monomials) {
            if (!support_in(w, table.mult[i])) continue;
            if (!divisors_ok(w, table.mult[i])) return false;
        }
    }

    // (d) separations only shrink when the set grows.
    if (d == Division::pommaret) return true;  // globally defined
    std::size_t m = u_set.size();
    if (m > 12) m = 12;  // cap subset enumeration
    std::vector<Monomial> base(u_set.begin(), u_set.end());
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << m); ++mask) {
        std::vector<Monomial> sub;
        std::vector<std::size_t> idx;
        for (std::size_t i = 0; i < m; ++i)
            if ((mask >> i) & 1u) {
                sub.push_back(base[i]);
                idx.push_back(i);
            }
        auto sub_table = janet_separation(sub);
        for (std::size_t k = 0; k < sub.size(); ++k)
            if ((table.mult[idx[k]] & sub_table.mult[k]) != table.mult[idx[k]]) return false;
    }
    return true;
}

}  // namespace

bool check_division_axioms(std::span<const Monomial> u_set, Division d) {
    if (u_set.empty()) return true;
    auto table = separation(u_set, d);
    return check_axioms_for(u_set, table, d);
}

std::vector<Monomial> monomial_p_autoreduce(std::vector<Monomial> u_set, OrderKind ord) {
    std::sort(u_set.begin(), u_set.end(),
              [ord](const Monomial& a, const Monomial& b) { return compare(ord, a, b) < 0; });
    u_set.erase(std::unique(u_set.begin(), u_set.end()), u_set.end());
    std::vector<Monomial> kept;
    for (const auto& u : u_set) {
        bool reducible = false;
        for (const auto& v : kept)
            if (involutively_divides(v, pommaret_mult(v), u)) {
                reducible = true;
                break;
            }
        if (!reducible) kept.push_back(u);
    }
    return kept;
}

bool monomial_janet_complete(std::span<const Monomial> u_set) {
    if (u_set.empty()) return true;
    auto table = janet_separation(u_set);
    for (std::size_t i = 0; i < u_set.size(); ++i) {
        VarSet nm = table.nonmultiplicative(i);
        for (std::size_t x = 0; x < table.nvars; ++x) {
            if (!varset_contains(nm, x)) continue;
            Monomial w = mul_var(u_set[i], x);
            if (!involutive_divisor(w, u_set, table)) return false;
        }
    }
    return true;
}

namespace {

template <typename Step>
std::vector<Monomial> complete_by_prolongation(std::vector<Monomial> u, OrderKind ord,
                                               Division d, Step accept) {
    std::sort(u.begin(), u.end(),
              [ord](const Monomial& a, const Monomial& b) { return compare(ord, a, b) < 0; });
    u.erase(std::unique(u.begin(), u.end()), u.end());
    for (;;) {
        auto table = separation(u, d);
        std::optional<Monomial> least;
        for (std::size_t i = 0; i < u.size(); ++i) {
            VarSet nm = table.nonmultiplicative(i);
            for (std::size_t x = 0; x < table.nvars; ++x) {
                if (!varset_contains(nm, x)) continue;
                Monomial w = mul_var(u[i], x);
                if (!accept(w)) continue;
                if (involutive_divisor(w, u, table, ord)) continue;
                if (!least || compare(ord, w, *least) < 0) least = w;
            }
        }
        if (!least) break;
        u.push_back(*least);
        std::sort(u.begin(), u.end(),
                  [ord](const Monomial& a, const Monomial& b) { return compare(ord, a, b) < 0; });
    }
    return u;
}

}  // namespace

std::vector<Monomial> janet_complete(std::vector<Monomial> u_set, OrderKind ord) {
    return complete_by_prolongation(std::move(u_set), ord, Division::janet,
                                    [](const Monomial&) { return true; });
}

std::vector<Monomial> pommaret_complete_truncated(std::vector<Monomial> u_set, OrderKind ord,
                                                  Degree maxdeg) {
    Degree have = 0;
    for (const auto& u : u_set) have = std::max(have, u.degree());
    if (maxdeg < have)
        throw precondition_error("truncation degree below the degree of the input set");
    return complete_by_prolongation(std::move(u_set), ord, Division::pommaret,
                                    [maxdeg](const Monomial& w) { return w.degree() <= maxdeg; });
}

namespace {

// Monomials of degree e in k free variables.
mpz_class free_count(int k, Degree e) {
    if (e == 0) return 1;
    if (k == 0) return 0;
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(k - 1 + e),
                 static_cast<unsigned long>(e));
    return r;
}

}  // namespace

mpz_class HilbertData::ideal_count(Degree d) const {
    mpz_class total = 0;
    for (const auto& [deg, k] : cones) {
        if (d < deg) continue;
        total += free_count(k, d - deg);
    }
    return total;
}

mpz_class HilbertData::quotient_count(Degree d) const {
    return free_count(static_cast<int>(nvars), d) - ideal_count(d);
}

HilbertData hilbert_data(std::span<const Monomial> u_set, const SeparationTable& table) {
    HilbertData h;
    h.nvars = table.nvars;
    h.cones.reserve(u_set.size());
    for (std::size_t i = 0; i < u_set.size(); ++i)
        h.cones.emplace_back(u_set[i].degree(), varset_count(table.mult[i]));
    return h;
}

mpz_class hilbert_bruteforce(std::span<const Monomial> u_set, Degree d) {
    if (u_set.empty()) return 0;
    mpz_class count = 0;
    for (const auto& w : monomials_of_degree(u_set.front().nvars(), d)) {
        for (const auto& u : u_set)
            if (divides(u, w)) {
                ++count;
                break;
            }
    }
    return count;
}

}  // namespace ivb
