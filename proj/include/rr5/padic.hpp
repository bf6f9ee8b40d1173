#ifndef RR5_PADIC_HPP
#define RR5_PADIC_HPP

#include <rr5/fp.hpp>
#include <rr5/quadrat.hpp>

#include <memory>
#include <optional>

namespace rr5 {

// Unramified extension Z_{5^n} at precision 5^m, realized as
// Z[x] / (u_n(x), 5^m) with u_n the lexicographically smallest monic
// irreducible of degree n mod 5.  Immutable after construction.
struct UnramCtx {
    int n;
    int m;
    std::vector<int> u;        // u_n coefficients (degree n, monic, 0..4)
    Int pm;                    // 5^m
    FpVec u_mod5;              // residue-field modulus
    std::vector<int32_t> sqrt_table;  // residue index -> index of a root, -1 if none

    UnramCtx(int n_, int m_);

    long q() const { return static_cast<long>(pow_ui(5, n).get_ui()); }
};

// Element of Z_{5^n} mod 5^m: coefficient vector in the power basis.
struct PadicU {
    const UnramCtx* ctx = nullptr;
    std::vector<Int> c;

    PadicU() = default;
    explicit PadicU(const UnramCtx& cx) : ctx(&cx), c(cx.n, Int(0)) {}

    static PadicU of_int(const UnramCtx& cx, const Int& v);
    static PadicU of_rat(const UnramCtx& cx, const Rat& v);  // needs v5(v) >= 0

    bool is_zero() const {
        for (const Int& v : c)
            if (!rr5::is_zero(v)) return false;
        return true;
    }
    FpVec residue() const {
        FpVec r(c.size());
        for (size_t i = 0; i < c.size(); ++i) r[i] = mod_u64(c[i], 5);
        fp_trim(r);
        return r;
    }
    long residue_index() const {
        long idx = 0, p = 1;
        for (size_t i = 0; i < c.size(); ++i, p *= 5)
            idx += static_cast<long>(mod_u64(c[i], 5)) * p;
        return idx;
    }
    bool is_unit() const { return residue_index() != 0; }
    // 5-adic valuation of the element (min over coefficients), m if zero.
    long val() const;

    PadicU operator-() const;
    friend PadicU operator+(const PadicU& a, const PadicU& b);
    friend PadicU operator-(const PadicU& a, const PadicU& b);
    friend PadicU operator*(const PadicU& a, const PadicU& b);
    friend bool operator==(const PadicU& a, const PadicU& b) { return a.c == b.c; }
    friend bool operator!=(const PadicU& a, const PadicU& b) { return !(a.c == b.c); }

    PadicU inverse() const;               // unit required
    PadicU pow(unsigned long e) const;
    PadicU frobenius_power() const { return pow(5); }
    // exact division by 5^k (all coefficients divisible)
    PadicU div_pow5(long k) const;

    // truncate to a context of smaller precision (same n)
    PadicU truncated(const UnramCtx& smaller) const;

    std::string str() const;
};

PadicU teichmuller(const UnramCtx& cx, const FpVec& residue);
PadicU decode_residue(const UnramCtx& cx, long index);  // Teichmuller-free lift

// Element A + B*sqrt(5) of the ramified quadratic extension, known mod
// pi^(2m) with pi = sqrt(5).
struct PadicR {
    PadicU a, b;

    PadicR() = default;
    explicit PadicR(const UnramCtx& cx) : a(cx), b(cx) {}
    PadicR(PadicU a_, PadicU b_) : a(std::move(a_)), b(std::move(b_)) {}
    static PadicR of_u(PadicU v) {
        PadicR r;
        r.b = PadicU(*v.ctx);
        r.a = std::move(v);
        return r;
    }
    static PadicR of_quadrat(const UnramCtx& cx, const QuadRat& v);
    static PadicR sqrt5(const UnramCtx& cx) {
        PadicR r(cx);
        r.b = PadicU::of_int(cx, 1);
        return r;
    }

    const UnramCtx& ctx() const { return *a.ctx; }
    bool is_zero() const { return a.is_zero() && b.is_zero(); }
    bool is_unramified() const { return b.is_zero(); }
    FpVec residue() const { return a.residue(); }
    long residue_index() const { return a.residue_index(); }
    // pi-adic valuation, 2m if zero
    long val_pi() const;

    PadicR operator-() const { return {-a, -b}; }
    friend PadicR operator+(const PadicR& x, const PadicR& y) {
        return {x.a + y.a, x.b + y.b};
    }
    friend PadicR operator-(const PadicR& x, const PadicR& y) {
        return {x.a - y.a, x.b - y.b};
    }
    friend PadicR operator*(const PadicR& x, const PadicR& y);
    friend bool operator==(const PadicR& x, const PadicR& y) {
        return x.a == y.a && x.b == y.b;
    }
    friend bool operator!=(const PadicR& x, const PadicR& y) { return !(x == y); }

    PadicR inverse() const;  // unit required
    PadicR pow(unsigned long e) const;
    // division with pi-valuation stripping; throws when the numerator
    // valuation is smaller than the denominator's
    PadicR div(const PadicR& den) const;

    std::string str() const;
};

// sqrt of an unramified element inside the ramified quadratic extension;
// nullopt when the residue of the unit part is a nonsquare.
std::optional<PadicR> sqrt_in_ramified(const PadicU& c);

// In the domain {|x| <= 1, residue != 2} the quintic g(x, .) has a unique
// root in the ramified extension; t5 evaluates it by the convergent series,
// solve_g by Hensel lifting from the residue root.  They are mutual oracles.
PadicR t5(const PadicR& x);
PadicR solve_g(const PadicR& x);

// The order-2 fractional-linear involution T.
PadicR t_mobius(const PadicR& x);

// Conjugated dynamics on z = x - 1/x: ts5(z) = T5(eta+) + T5(eta-).
PadicU ts5(const PadicU& z);

struct Orbit {
    int period = 0;
    std::vector<PadicR> points;
    std::vector<FpVec> residues;
    bool ramified = false;  // points are T-images with residue 2 mod sqrt5
};

// The unique T5-periodic point whose residue is the given one (residue != 2);
// its minimal period equals the Frobenius cycle length of the residue.
PadicR periodic_point_at(const UnramCtx& cx, long residue_index);

// All unramified periodic orbits of minimal period dividing n, one per
// Frobenius cycle of residues (residue 2 excluded).
std::vector<Orbit> periodic_points(const UnramCtx& cx);

Orbit ramified_companion(const Orbit& o);

// j-invariant formula j(b) = (b^4+12b^3+14b^2-12b+1)^3 / (b^5(1-11b-b^2))
// at b = x^5, with pi-valuation-aware division.
PadicR j_eta(const PadicR& x);

// Evaluate an integer bivariate polynomial at p-adic arguments.
PadicR eval_bipoly(const BiPoly<Int>& p, const PadicR& x, const PadicR& y);

// Residue-field utilities on index-encoded elements of F_{5^n}.
long fq_frobenius_index(const UnramCtx& cx, long idx);  // idx^5
long fq_frobenius_cycle_len(const UnramCtx& cx, long idx);
long fq_pow_index(const UnramCtx& cx, long idx, const Int& e);
long fq_eval_int_poly_at(const UnramCtx& cx, const UniPoly<Int>& p, long idx);
long fq_eval_mod5_at(const UnramCtx& cx, const std::vector<std::uint64_t>& coeffs_mod5,
                     long idx);

// Trace of the q-power Frobenius of an elliptic curve over F_{5^n} with the
// given j-invariant; throws domain_error for the degenerate residues
// j = 0 and j = 1728.
long frobenius_trace_of_j(const UnramCtx& cx, long j_index);

// Newton-lift the simple residue root of an integer polynomial; the root
// must satisfy p(a) = 0, p'(a) != 0 in the residue field.
PadicU lift_simple_root(const UnramCtx& cx, const UniPoly<Int>& p, long residue_index);

}  // namespace rr5

#endif
