#ifndef IVB_MONOMIAL_HPP
#define IVB_MONOMIAL_HPP

#include <algorithm>
#include <cstdint>
#include <functional>
#include <limits>
#include <numeric>
#include <vector>

#include "ivb/context.hpp"

namespace ivb {

using Exponent = std::uint32_t;
using Degree = std::uint64_t;

// Exponent-vector monomial over a fixed number of variables.
// The constant monomial 1 has all exponents zero.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
    explicit Monomial(std::vector<Exponent> exps)
        : exps_(std::move(exps)),
          degree_(std::accumulate(exps_.begin(), exps_.end(), Degree{0})) {}

    static Monomial one(std::size_t nvars) { return Monomial(nvars); }
    static Monomial variable(std::size_t nvars, std::size_t i, Exponent e = 1) {
        Monomial m(nvars);
        m.exps_[i] = e;
        m.degree_ = e;
        return m;
    }

    std::size_t nvars() const { return exps_.size(); }
    Degree degree() const { return degree_; }
    Exponent exponent(std::size_t i) const { return exps_[i]; }
    const std::vector<Exponent>& exponents() const { return exps_; }
    bool is_one() const { return degree_ == 0; }

    friend bool operator==(const Monomial& a, const Monomial& b) {
        return a.exps_ == b.exps_;
    }
    friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }

    // Arbitrary strict total order for use as a container key; unrelated to
    // the admissible monomial orderings.
    friend bool operator<(const Monomial& a, const Monomial& b) {
        return a.exps_ < b.exps_;
    }

private:
    std::vector<Exponent> exps_;
    Degree degree_ = 0;
};

inline Degree deg_i(const Monomial& u, std::size_t i) { return u.exponent(i); }

inline bool divides(const Monomial& u, const Monomial& v) {
    if (u.nvars() != v.nvars()) throw context_error("monomials over different contexts");
    for (std::size_t i = 0; i < u.nvars(); ++i)
        if (u.exponent(i) > v.exponent(i)) return false;
    return true;
}

// v / u; requires divides(u, v).
inline Monomial quotient(const Monomial& v, const Monomial& u) {
    if (!divides(u, v)) throw precondition_error("quotient of non-divisible monomials");
    std::vector<Exponent> e(v.nvars());
    for (std::size_t i = 0; i < v.nvars(); ++i) e[i] = v.exponent(i) - u.exponent(i);
    return Monomial(std::move(e));
}

inline Monomial lcm(const Monomial& u, const Monomial& v) {
    if (u.nvars() != v.nvars()) throw context_error("monomials over different contexts");
    std::vector<Exponent> e(u.nvars());
    for (std::size_t i = 0; i < u.nvars(); ++i)
        e[i] = std::max(u.exponent(i), v.exponent(i));
    return Monomial(std::move(e));
}

inline Monomial mul(const Monomial& u, const Monomial& v) {
    if (u.nvars() != v.nvars()) throw context_error("monomials over different contexts");
    std::vector<Exponent> e(u.nvars());
    for (std::size_t i = 0; i < u.nvars(); ++i) {
        Exponent a = u.exponent(i), b = v.exponent(i);
        if (a > std::numeric_limits<Exponent>::max() - b)
            throw error("monomial exponent overflow");
        e[i] = a + b;
    }
    return Monomial(std::move(e));
}

inline Monomial mul_var(const Monomial& u, std::size_t i) {
    return mul(u, Monomial::variable(u.nvars(), i));
}

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const {
        std::size_t h = m.nvars();
        for (Exponent e : m.exponents()) h = h * 1000003u + e;
        return h;
    }
};

}  // namespace ivb

#endif
