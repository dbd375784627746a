#ifndef IVB_ORDERING_HPP
#define IVB_ORDERING_HPP

#include <compare>
#include <string>

#include "ivb/monomial.hpp"

namespace ivb {

// Admissible monomial orderings compatible with x1 > x2 > ... > xn.
enum class OrderKind { lex, deglex, degrevlex };

inline const char* to_string(OrderKind k) {
    switch (k) {
        case OrderKind::lex: return "lex";
        case OrderKind::deglex: return "deglex";
        case OrderKind::degrevlex: return "degrevlex";
    }
    return "?";
}

inline bool order_kind_from_string(const std::string& s, OrderKind& out) {
    if (s == "lex") out = OrderKind::lex;
    else if (s == "deglex") out = OrderKind::deglex;
    else if (s == "degrevlex") out = OrderKind::degrevlex;
    else return false;
    return true;
}

namespace detail {

inline std::strong_ordering cmp_lex(const Monomial& u, const Monomial& v) {
    for (std::size_t i = 0; i < u.nvars(); ++i) {
        if (u.exponent(i) != v.exponent(i))
            return u.exponent(i) <=> v.exponent(i);
    }
    return std::strong_ordering::equal;
}

// Degree-tie rule: scanning from the last variable upward, the monomial with
// the smaller exponent in the first differing position is the greater one.
inline std::strong_ordering cmp_revlex_tail(const Monomial& u, const Monomial& v) {
    for (std::size_t i = u.nvars(); i-- > 0;) {
        if (u.exponent(i) != v.exponent(i))
            return v.exponent(i) <=> u.exponent(i);
    }
    return std::strong_ordering::equal;
}

}  // namespace detail

// Three-way comparison of monomials over the same context.
inline std::strong_ordering compare(OrderKind kind, const Monomial& u, const Monomial& v) {
    if (u.nvars() != v.nvars()) throw context_error("compare: mismatched contexts");
    switch (kind) {
        case OrderKind::lex:
            return detail::cmp_lex(u, v);
        case OrderKind::deglex:
            if (u.degree() != v.degree()) return u.degree() <=> v.degree();
            return detail::cmp_lex(u, v);
        case OrderKind::degrevlex:
            if (u.degree() != v.degree()) return u.degree() <=> v.degree();
            return detail::cmp_revlex_tail(u, v);
    }
    return std::strong_ordering::equal;
}

struct MonomialOrdering {
    OrderKind kind = OrderKind::degrevlex;
    ContextPtr context;

    std::strong_ordering operator()(const Monomial& u, const Monomial& v) const {
        return compare(kind, u, v);
    }
    bool less(const Monomial& u, const Monomial& v) const {
        return compare(kind, u, v) < 0;
    }
    bool greater(const Monomial& u, const Monomial& v) const {
        return compare(kind, u, v) > 0;
    }
};

}  // namespace ivb

#endif
