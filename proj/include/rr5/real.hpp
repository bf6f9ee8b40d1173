#ifndef RR5_REAL_HPP
#define RR5_REAL_HPP

#include <rr5/basics.hpp>

#include <mpfr.h>

#include <cmath>

namespace rr5 {

// RAII wrapper over an mpfr real.  Binary operations compute at the larger
// of the two operand precisions.
class Real {
  public:
    explicit Real(mpfr_prec_t prec = 128) {
        mpfr_init2(v_, prec);
        mpfr_set_zero(v_, 1);
    }
    Real(const Real& o) {
        mpfr_init2(v_, mpfr_get_prec(o.v_));
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    Real(Real&& o) noexcept {
        mpfr_init2(v_, mpfr_get_prec(o.v_));
        mpfr_swap(v_, o.v_);
    }
    Real& operator=(const Real& o) {
        if (this != &o) {
            mpfr_set_prec(v_, mpfr_get_prec(o.v_));
            mpfr_set(v_, o.v_, MPFR_RNDN);
        }
        return *this;
    }
    Real& operator=(Real&& o) noexcept {
        mpfr_swap(v_, o.v_);
        return *this;
    }
    ~Real() { mpfr_clear(v_); }

    mpfr_ptr get() { return v_; }
    mpfr_srcptr get() const { return v_; }
    mpfr_prec_t prec() const { return mpfr_get_prec(v_); }

    static Real of_long(long x, mpfr_prec_t prec) {
        Real r(prec);
        mpfr_set_si(r.v_, x, MPFR_RNDN);
        return r;
    }
    static Real of_int(const Int& x, mpfr_prec_t prec) {
        Real r(prec);
        mpfr_set_z(r.v_, x.get_mpz_t(), MPFR_RNDN);
        return r;
    }
    static Real of_rat(const Rat& x, mpfr_prec_t prec) {
        Real r(prec);
        mpfr_set_q(r.v_, x.get_mpq_t(), MPFR_RNDN);
        return r;
    }
    static Real pi(mpfr_prec_t prec) {
        Real r(prec);
        mpfr_const_pi(r.v_, MPFR_RNDN);
        return r;
    }

    friend Real operator+(const Real& a, const Real& b) {
        Real r(std::max(a.prec(), b.prec()));
        mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    friend Real operator-(const Real& a, const Real& b) {
        Real r(std::max(a.prec(), b.prec()));
        mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    friend Real operator*(const Real& a, const Real& b) {
        Real r(std::max(a.prec(), b.prec()));
        mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    friend Real operator/(const Real& a, const Real& b) {
        Real r(std::max(a.prec(), b.prec()));
        mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    Real operator-() const {
        Real r(prec());
        mpfr_neg(r.v_, v_, MPFR_RNDN);
        return r;
    }

    Real sqrt() const {
        Real r(prec());
        mpfr_sqrt(r.v_, v_, MPFR_RNDN);
        return r;
    }
    Real exp() const {
        Real r(prec());
        mpfr_exp(r.v_, v_, MPFR_RNDN);
        return r;
    }
    Real abs() const {
        Real r(prec());
        mpfr_abs(r.v_, v_, MPFR_RNDN);
        return r;
    }
    void sin_cos(Real& s, Real& c) const {
        mpfr_sin_cos(s.v_, c.v_, v_, MPFR_RNDN);
    }

    int sgn() const { return mpfr_sgn(v_); }
    bool operator<(const Real& o) const { return mpfr_less_p(v_, o.v_) != 0; }
    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    // log2 of |x|, -inf-ish for 0
    double log2_abs() const {
        if (mpfr_zero_p(v_)) return -1e9;
        long exp2;
        double m = mpfr_get_d_2exp(&exp2, v_, MPFR_RNDN);
        return std::log2(std::abs(m)) + static_cast<double>(exp2);
    }

    // nearest integer; residual = |x - round(x)|
    Int round_to_int(double* residual = nullptr) const {
        mpfr_t r;
        mpfr_init2(r, prec());
        mpfr_round(r, v_);
        Int out;
        mpfr_get_z(out.get_mpz_t(), r, MPFR_RNDN);
        if (residual) {
            mpfr_sub(r, v_, r, MPFR_RNDN);
            mpfr_abs(r, r, MPFR_RNDN);
            *residual = mpfr_get_d(r, MPFR_RNDN);
        }
        mpfr_clear(r);
        return out;
    }

  private:
    mpfr_t v_;
};

// High-precision complex value as an (re, im) pair.
struct Complex {
    Real re, im;

    explicit Complex(mpfr_prec_t prec = 128) : re(prec), im(prec) {}
    Complex(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}

    mpfr_prec_t prec() const { return std::max(re.prec(), im.prec()); }

    friend Complex operator+(const Complex& a, const Complex& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend Complex operator-(const Complex& a, const Complex& b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend Complex operator*(const Complex& a, const Complex& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend Complex operator/(const Complex& a, const Complex& b) {
        Real n = b.re * b.re + b.im * b.im;
        return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
    }
    Complex operator-() const { return {-re, -im}; }

    Real abs() const { return (re * re + im * im).sqrt(); }

    static Complex of_long(long x, mpfr_prec_t prec) {
        return {Real::of_long(x, prec), Real::of_long(0, prec)};
    }

    // exp(2*pi*i*tau) for tau = x + i y, y > 0.
    static Complex q_of_tau(const Complex& tau, mpfr_prec_t prec) {
        Real twopi = Real::of_long(2, prec) * Real::pi(prec);
        Real mag = (-(twopi * tau.im)).exp();
        Real ang = twopi * tau.re;
        Real s(prec), c(prec);
        ang.sin_cos(s, c);
        return {mag * c, mag * s};
    }
};

inline Complex pow_c(Complex base, unsigned long e, mpfr_prec_t prec) {
    Complex r = Complex::of_long(1, prec);
    while (e) {
        if (e & 1) r = r * base;
        base = base * base;
        e >>= 1;
    }
    return r;
}

}  // namespace rr5

#endif
