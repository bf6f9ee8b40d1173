#ifndef RR5_QSERIES_HPP
#define RR5_QSERIES_HPP

#include <rr5/poly.hpp>
#include <rr5/real.hpp>

#include <optional>

namespace rr5 {

// Truncated formal series in q^(1/5) with exact rational coefficients.
// c[e] is the coefficient of q^(e/5); coefficients are valid for all
// exponents e < order.  Arithmetic tracks how far the result stays exact.
struct PuiseuxSeries {
    long order = 0;
    std::vector<Rat> c;

    PuiseuxSeries() = default;
    explicit PuiseuxSeries(long ord) : order(ord), c(ord, Rat(0)) {}

    static PuiseuxSeries one(long ord) {
        PuiseuxSeries s(ord);
        if (ord > 0) s.c[0] = 1;
        return s;
    }
    // q^(e/5)
    static PuiseuxSeries monomial(long e, long ord) {
        PuiseuxSeries s(ord);
        if (e < ord) s.c[e] = 1;
        return s;
    }

    long valuation() const {  // first nonzero exponent, or order if none
        for (long e = 0; e < order; ++e)
            if (!is_zero(c[e])) return e;
        return order;
    }
    bool is_zero_through(long e_max) const {
        for (long e = 0; e < std::min(order, e_max + 1); ++e)
            if (!is_zero(c[e])) return false;
        return true;
    }
    std::optional<long> first_nonzero() const {
        for (long e = 0; e < order; ++e)
            if (!is_zero(c[e])) return e;
        return std::nullopt;
    }
    Rat coeff(long e) const { return (e >= 0 && e < order) ? c[e] : Rat(0); }

    PuiseuxSeries truncated(long ord) const {
        PuiseuxSeries s(std::min(ord, order));
        for (long e = 0; e < s.order; ++e) s.c[e] = c[e];
        return s;
    }

    friend PuiseuxSeries operator+(const PuiseuxSeries& a, const PuiseuxSeries& b) {
        PuiseuxSeries s(std::min(a.order, b.order));
        for (long e = 0; e < s.order; ++e) s.c[e] = a.c[e] + b.c[e];
        return s;
    }
    friend PuiseuxSeries operator-(const PuiseuxSeries& a, const PuiseuxSeries& b) {
        PuiseuxSeries s(std::min(a.order, b.order));
        for (long e = 0; e < s.order; ++e) s.c[e] = a.c[e] - b.c[e];
        return s;
    }
    PuiseuxSeries operator-() const {
        PuiseuxSeries s = *this;
        for (auto& v : s.c) v = -v;
        return s;
    }
    // product is exact through min(ord_a + val_b, ord_b + val_a)
    friend PuiseuxSeries operator*(const PuiseuxSeries& a, const PuiseuxSeries& b);

    PuiseuxSeries scaled(const Rat& s) const {
        PuiseuxSeries r = *this;
        for (auto& v : r.c) v *= s;
        return r;
    }

    // multiplicative inverse; requires a unit (nonzero constant term)
    PuiseuxSeries inverse() const;

    // q -> q^k substitution (exponents multiplied by k)
    PuiseuxSeries substitute_scale(long k) const;
};

// The two independent constructions of the Rogers-Ramanujan continued
// fraction r(tau) as a series in q^(1/5), truncated at `order` fifths.
PuiseuxSeries rr_product(long order);
// depth = 0 selects automatic deepening until two successive truncations
// agree through `order`.
PuiseuxSeries rr_cfrac(long order, long depth = 0);

enum class Relation { g5, p2, p3, p7, frakr };

struct RelationResult {
    bool ok;
    std::optional<long> first_nonzero_fifths;
};

// Expands the named modular relation in exact series through q^N and
// reports whether every coefficient vanishes.
RelationResult verify_relation(Relation rel, long N);

// r(tau) evaluated numerically from the product formula, with the
// double-precision-redundancy acceptance policy.
Complex r_numeric(const Complex& tau, long bits);

// |P(z)| for an integer polynomial at a complex argument.
Real poly_abs_at(const UniPoly<Int>& p, const Complex& z);

}  // namespace rr5

#endif
