#ifndef RR5_QUADRAT_HPP
#define RR5_QUADRAT_HPP

#include <rr5/basics.hpp>

namespace rr5 {

// Element a + b*sqrt(5) of the real quadratic field Q(sqrt 5).
struct QuadRat {
    Rat a, b;

    QuadRat() : a(0), b(0) {}
    QuadRat(int v) : a(v), b(0) {}
    QuadRat(const Rat& ra) : a(ra), b(0) {}
    QuadRat(const Rat& ra, const Rat& rb) : a(ra), b(rb) {}

    static QuadRat sqrt5() { return QuadRat(Rat(0), Rat(1)); }
    // (-1+sqrt5)/2, the fundamental unit's negative inverse pair used all over.
    static QuadRat eps() { return QuadRat(Rat(-1, 2), Rat(1, 2)); }
    // -(1+sqrt5)/2
    static QuadRat eps_bar() { return QuadRat(Rat(-1, 2), Rat(-1, 2)); }
    // eps^5 = (-11+5*sqrt5)/2
    static QuadRat eps5() { return QuadRat(Rat(-11, 2), Rat(5, 2)); }

    bool is_zero() const { return sgn(a) == 0 && sgn(b) == 0; }
    bool is_rational() const { return sgn(b) == 0; }

    QuadRat conj() const { return QuadRat(a, -b); }
    Rat norm() const { return a * a - 5 * b * b; }

    QuadRat operator-() const { return QuadRat(-a, -b); }
    QuadRat& operator+=(const QuadRat& o) {
        a += o.a;
        b += o.b;
        return *this;
    }
    QuadRat& operator-=(const QuadRat& o) {
        a -= o.a;
        b -= o.b;
        return *this;
    }
    QuadRat& operator*=(const QuadRat& o) {
        Rat na = a * o.a + 5 * b * o.b;
        Rat nb = a * o.b + b * o.a;
        a = na;
        b = nb;
        return *this;
    }
    QuadRat inverse() const {
        Rat n = norm();
        if (sgn(n) == 0) throw std::domain_error("inverse of zero in Q(sqrt5)");
        return QuadRat(a / n, -b / n);
    }

    friend QuadRat operator+(QuadRat x, const QuadRat& y) { return x += y; }
    friend QuadRat operator-(QuadRat x, const QuadRat& y) { return x -= y; }
    friend QuadRat operator*(QuadRat x, const QuadRat& y) { return x *= y; }
    friend QuadRat operator/(const QuadRat& x, const QuadRat& y) {
        return x * y.inverse();
    }
    friend bool operator==(const QuadRat& x, const QuadRat& y) {
        return x.a == y.a && x.b == y.b;
    }
    friend bool operator!=(const QuadRat& x, const QuadRat& y) {
        return !(x == y);
    }

    std::string str() const {
        std::string s = a.get_str();
        if (sgn(b) != 0) s += (sgn(b) > 0 ? "+" : "") + b.get_str() + "*sqrt5";
        return s;
    }
};

inline bool is_zero(const QuadRat& v) { return v.is_zero(); }

inline QuadRat pow_qr(QuadRat base, unsigned long e) {
    QuadRat r(1);
    while (e) {
        if (e & 1) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

}  // namespace rr5

#endif
