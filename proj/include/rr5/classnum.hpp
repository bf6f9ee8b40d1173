#ifndef RR5_CLASSNUM_HPP
#define RR5_CLASSNUM_HPP

#include <rr5/poly.hpp>

namespace rr5 {

// Primitive reduced binary quadratic form a x^2 + b x y + c y^2 of
// discriminant b^2 - 4ac = -d < 0.
struct QForm {
    Int a, b, c;
};

struct ClassData {
    Int d;                     // discriminant is -d
    Int d_K;                   // fundamental discriminant, -d = d_K f^2
    Int f;                     // conductor
    long h = 0;                // class number of the order of disc -d
    std::vector<QForm> forms;  // all primitive reduced forms
    int kronecker5 = 0;        // (-d/5)
    bool is_4f2 = false;       // d = 4 f^2 (field-label branch; recorded only)
};

// Reduced-form enumeration over |b| <= a <= sqrt(d/3).
ClassData class_number(const Int& d);

// Kronecker symbol (-d/5): +1 iff -d is congruent to 1 or 4 mod 5.
int kronecker_5(const Int& d);

// Element p + q*omega of the maximal order R_K of Q(sqrt(d_K)), with
// omega = (1+sqrt(d_K))/2 for d_K odd and omega = sqrt(d_K/4) for d_K even.
struct ImagQuadElem {
    Int p, q;
    Int d_K;

    Int trace_omega() const { return mpz_odd_p(d_K.get_mpz_t()) ? Int(1) : Int(0); }
    Int norm_omega() const {
        return mpz_odd_p(d_K.get_mpz_t()) ? Int((1 - d_K) / 4) : Int(-d_K / 4);
    }
    Int norm() const {
        return p * p + p * q * trace_omega() + q * q * norm_omega();
    }
    ImagQuadElem conj() const {
        return {p + q * trace_omega(), -q, d_K};
    }
    std::string str() const;
};

// (v + sqrt(-d))/2 as an element of the maximal order; throws if it is not
// integral (v of the wrong parity).
ImagQuadElem wd_from_v(const Int& d, const Int& v);

// Validity per the defining arithmetic conditions: w lies in R_K, w is
// divisible by the square of a prime above 5, and gcd(N(w), f) = 1.
bool is_valid_wd(const Int& d, const ImagQuadElem& w);

// Smallest-|v| element of the form (v + sqrt(-d))/2 passing is_valid_wd,
// positive v preferred on ties.
ImagQuadElem find_wd(const Int& d, long search_bound = 1000000);

// Coefficients of the j-function q-expansion: entry k is the coefficient
// of q^(k-1), so {1, 744, 196884, ...}.  Computed exactly as E4^3 / Delta
// and memoized; N is capped at 2000 terms.
std::vector<Int> j_qexp(long N);

// E6 companion series (coefficient of q^k at entry k), for cross-checks.
std::vector<Int> e6_qexp(long N);
std::vector<Int> e4_qexp(long N);
std::vector<Int> delta_qexp(long N);

// Hilbert class polynomial H_{-d}, by high-precision evaluation of j at CM
// points with doubling retry until every coefficient rounds cleanly.
UniPoly<Int> hilbert_class_poly(const Int& d, long d_cap = 5000);

}  // namespace rr5

#endif
