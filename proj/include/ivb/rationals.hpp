#ifndef IVB_RATIONALS_HPP
#define IVB_RATIONALS_HPP

#include <gmpxx.h>

#include <string>

#include "ivb/context.hpp"

namespace ivb {

// The field Q with arbitrary-precision arithmetic. mpq_class keeps values
// canonical: lowest terms, positive denominator.
class Rationals {
public:
    using Elem = mpq_class;

    static constexpr bool is_modular = false;
    unsigned long characteristic() const { return 0; }

    Elem zero() const { return Elem(0); }
    Elem one() const { return Elem(1); }
    Elem from_long(long n) const { return Elem(n); }
    Elem from_fraction(const std::string& num, const std::string& den) const {
        mpq_class q{mpz_class(num), mpz_class(den)};
        if (q.get_den() == 0) throw error("zero denominator");
        q.canonicalize();
        return q;
    }

    bool is_zero(const Elem& a) const { return a == 0; }
    bool is_one(const Elem& a) const { return a == 1; }
    bool is_negative(const Elem& a) const { return a < 0; }
    bool equal(const Elem& a, const Elem& b) const { return a == b; }

    Elem add(const Elem& a, const Elem& b) const { return a + b; }
    Elem sub(const Elem& a, const Elem& b) const { return a - b; }
    Elem mul(const Elem& a, const Elem& b) const { return a * b; }
    Elem neg(const Elem& a) const { return -a; }
    Elem inv(const Elem& a) const {
        if (a == 0) throw error("division by zero");
        return 1 / a;
    }
    Elem div(const Elem& a, const Elem& b) const { return mul(a, inv(b)); }

    std::string to_string(const Elem& a) const { return a.get_str(); }

    friend bool operator==(const Rationals&, const Rationals&) { return true; }
};

}  // namespace ivb

#endif
