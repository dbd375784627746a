#ifndef IVB_DIVISION_HPP
#define IVB_DIVISION_HPP

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ivb/monomial.hpp"
#include "ivb/ordering.hpp"

namespace ivb {

enum class Division { janet, pommaret };

inline const char* to_string(Division d) {
    return d == Division::janet ? "janet" : "pommaret";
}

// Variable subsets as bitmasks; limits contexts to 64 variables.
using VarSet = std::uint64_t;

inline bool varset_contains(VarSet s, std::size_t i) { return (s >> i) & 1u; }
inline VarSet varset_all(std::size_t n) {
    if (n > 64) throw error("at most 64 variables supported");
    return n == 64 ? ~VarSet{0} : ((VarSet{1} << n) - 1);
}
inline int varset_count(VarSet s) { return __builtin_popcountll(s); }

// Per-generator separation of variables into multiplicative and
// nonmultiplicative sets, for a fixed generating monomial set.
struct SeparationTable {
    Division division = Division::janet;
    std::size_t nvars = 0;
    std::vector<VarSet> mult;  // parallel to the generating set

    VarSet multiplicative(std::size_t idx) const { return mult[idx]; }
    VarSet nonmultiplicative(std::size_t idx) const { return varset_all(nvars) & ~mult[idx]; }
};

// Pommaret separation of a single monomial: for u = x1^d1...xk^dk with
// dk > 0 the variables xk,...,xn are multiplicative; for u = 1 all are.
VarSet pommaret_mult(const Monomial& u);

// Janet separation of a finite set of distinct monomials.
SeparationTable janet_separation(std::span<const Monomial> u_set);

SeparationTable separation(std::span<const Monomial> u_set, Division d);

// True iff the quotient w/u exists and is supported on multiplicative
// variables only.
bool involutively_divides(const Monomial& u, VarSet mult_u, const Monomial& w);

// Index of an involutive divisor of w in the set, if any. The Janet divisor
// is unique when it exists; Pommaret ties are broken toward the largest
// generator under the given ordering.
std::optional<std::size_t> involutive_divisor(const Monomial& w,
                                              std::span<const Monomial> u_set,
                                              const SeparationTable& table,
                                              OrderKind ord = OrderKind::degrevlex);

enum class ConeKind { full, pommaret, janet };

bool cone_member(const Monomial& w, std::span<const Monomial> u_set, ConeKind kind,
                 OrderKind ord = OrderKind::degrevlex);

// Exhaustive check of the involutive-division axioms (a)-(d) on a set;
// (a) is enumerated up to twice the maximal degree in the set.
bool check_division_axioms(std::span<const Monomial> u_set, Division d);

// All monomials of the given total degree / up to the given total degree.
std::vector<Monomial> monomials_of_degree(std::size_t nvars, Degree d);
std::vector<Monomial> monomials_up_to_degree(std::size_t nvars, Degree d);

// Removes elements that are Pommaret multiples of other elements.
std::vector<Monomial> monomial_p_autoreduce(std::vector<Monomial> u_set, OrderKind ord);

// True iff every Janet-nonmultiplicative prolongation of the set lies in its
// Janet cone (the set is a Janet basis of the monomial ideal it generates).
bool monomial_janet_complete(std::span<const Monomial> u_set);

// Minimal Janet completion: repeatedly adjoins the least nonmultiplicative
// prolongation without a Janet divisor. Terminates by noetherity.
std::vector<Monomial> janet_complete(std::vector<Monomial> u_set, OrderKind ord);

// Pommaret completion truncated at the given total degree; prolongations
// above the bound are discarded.
std::vector<Monomial> pommaret_complete_truncated(std::vector<Monomial> u_set, OrderKind ord,
                                                  Degree maxdeg);

// Hilbert-function data of a monomial ideal given by an involutive basis
// with its separation table: per generator the degree and the number of
// multiplicative variables. Cones are disjoint, so counts add up.
struct HilbertData {
    std::size_t nvars = 0;
    std::vector<std::pair<Degree, int>> cones;  // (deg(u), #multiplicative)

    // Number of degree-d monomials in the ideal.
    mpz_class ideal_count(Degree d) const;
    // Number of degree-d monomials outside the ideal.
    mpz_class quotient_count(Degree d) const;
};

HilbertData hilbert_data(std::span<const Monomial> u_set, const SeparationTable& table);

// Brute-force oracle: count degree-d monomials divisible by some element.
mpz_class hilbert_bruteforce(std::span<const Monomial> u_set, Degree d);

}  // namespace ivb

#endif
