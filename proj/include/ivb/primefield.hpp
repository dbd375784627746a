#ifndef IVB_PRIMEFIELD_HPP
#define IVB_PRIMEFIELD_HPP

#include <cstdint>
#include <string>

#include "ivb/context.hpp"

namespace ivb {

// Z/pZ for a prime p < 2^31. Elements are canonical representatives in [0, p).
class PrimeField {
public:
    using Elem = std::uint64_t;

    static constexpr bool is_modular = true;

    explicit PrimeField(std::uint64_t p) : p_(p) {
        if (p < 2 || p >= (std::uint64_t{1} << 31))
            throw error("characteristic must be a prime in [2, 2^31)");
        if (!is_prime(p)) throw error("characteristic " + std::to_string(p) + " is not prime");
    }

    unsigned long characteristic() const { return static_cast<unsigned long>(p_); }

    Elem zero() const { return 0; }
    Elem one() const { return 1 % p_; }
    Elem from_long(long n) const {
        long long r = n % static_cast<long long>(p_);
        if (r < 0) r += static_cast<long long>(p_);
        return static_cast<Elem>(r);
    }
    Elem from_fraction(const std::string& num, const std::string& den) const {
        return div(parse_int(num), parse_int(den));
    }

    bool is_zero(const Elem& a) const { return a == 0; }
    bool is_one(const Elem& a) const { return a == one(); }
    bool is_negative(const Elem&) const { return false; }  // canonical representatives
    bool equal(const Elem& a, const Elem& b) const { return a == b; }

    Elem add(Elem a, Elem b) const {
        Elem s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    Elem sub(Elem a, Elem b) const { return a >= b ? a - b : a + p_ - b; }
    Elem mul(Elem a, Elem b) const {
        return static_cast<Elem>((static_cast<unsigned __int128>(a) * b) % p_);
    }
    Elem neg(Elem a) const { return a == 0 ? 0 : p_ - a; }
    Elem inv(Elem a) const {
        if (a == 0) throw error("division by zero");
        // Extended Euclid on (a, p).
        std::int64_t t = 0, newt = 1;
        std::int64_t r = static_cast<std::int64_t>(p_), newr = static_cast<std::int64_t>(a);
        while (newr != 0) {
            std::int64_t q = r / newr;
            t -= q * newt;
            std::swap(t, newt);
            r -= q * newr;
            std::swap(r, newr);
        }
        if (t < 0) t += static_cast<std::int64_t>(p_);
        return static_cast<Elem>(t);
    }
    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }

    std::string to_string(const Elem& a) const { return std::to_string(a); }

    friend bool operator==(const PrimeField& a, const PrimeField& b) { return a.p_ == b.p_; }

private:
    Elem parse_int(const std::string& s) const {
        bool negative = false;
        std::size_t i = 0;
        if (i < s.size() && (s[i] == '-' || s[i] == '+')) negative = s[i++] == '-';
        Elem v = 0;
        for (; i < s.size(); ++i) v = add(mul(v, 10 % p_), from_long(s[i] - '0'));
        return negative ? neg(v) : v;
    }

    static bool is_prime(std::uint64_t n) {
        if (n < 4) return n >= 2;
        if (n % 2 == 0) return false;
        for (std::uint64_t d = 3; d * d <= n; d += 2)
            if (n % d == 0) return false;
        return true;
    }

    std::uint64_t p_;
};

}  // namespace ivb

#endif
