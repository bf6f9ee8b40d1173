#ifndef RR5_RESULTANT_HPP
#define RR5_RESULTANT_HPP

#include <rr5/fp.hpp>

namespace rr5 {

enum class Axis { x, y };

// Sylvester resultant over Z, computed modulo a set of word primes and
// recombined by CRT up to a Hadamard-style bound, then confirmed with two
// extra primes.
Int resultant_int(const UniPoly<Int>& a, const UniPoly<Int>& b);

// Fraction-free subresultant PRS route; the independent second algebraic
// path for the same quantity.
Int resultant_prs(const UniPoly<Int>& a, const UniPoly<Int>& b);

// Resultant of bivariate polynomials with respect to `var`; the result is
// a polynomial in the surviving variable, returned as a BiPoly (it is
// univariate in that variable).
BiPoly<Int> resultant(const BiPoly<Int>& a, const BiPoly<Int>& b, Axis var);

// Convenience: Res_y(A(x,y), B(y)) as a univariate polynomial in x.
UniPoly<Int> resultant_y(const BiPoly<Int>& a, const UniPoly<Int>& b);

Int discriminant(const UniPoly<Int>& p);

struct FactoredDisc {
    Int value;
    std::vector<std::pair<Int, unsigned>> factors;  // (prime, exponent)
    Int composite_remainder;                        // 1 when fully factored
};

// disc(P) together with its prime factorization (trial division then
// Pollard rho under a time budget; leftover composite is reported).
FactoredDisc discriminant_factored(const UniPoly<Int>& p,
                                   long rho_budget_ms = 10000);

bool squarefree_check(const UniPoly<Int>& p);

// gcd over Z (primitive), exact fallback path.
UniPoly<Int> gcd_int(const UniPoly<Int>& a, const UniPoly<Int>& b);

}  // namespace rr5

#endif
