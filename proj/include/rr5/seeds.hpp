#ifndef RR5_SEEDS_HPP
#define RR5_SEEDS_HPP

#include <rr5/poly.hpp>

namespace rr5::seeds {

// The handful of fixed polynomials everything is built from: the degree-5
// modular equation g for the Rogers-Ramanujan continued fraction, its
// companions g1 and h, the degree-2/3/7 modular equations, and the
// class-invariant seeds of small discriminant.  Everything else in the
// project is computed, never transcribed.

// g(X,Y) = (Y^4+2Y^3+4Y^2+3Y+1)X^5 - Y(Y^4-3Y^3+4Y^2-2Y+1)
inline BiPoly<Int> g() {
    BiPoly<Int> p;
    const int top[5] = {1, 3, 4, 2, 1};     // 1+3Y+4Y^2+2Y^3+Y^4
    const int bot[6] = {0, -1, 2, -4, 3, -1};  // -(Y^5-3Y^4+4Y^3-2Y^2+Y)
    for (int j = 0; j < 5; ++j) p.set(5, j, Int(top[j]));
    for (int j = 0; j < 6; ++j)
        if (bot[j]) p.set(0, j, Int(bot[j]));
    return p;
}

// g1(X,Y) = Y^5 g(X,-1/Y) = (Y^5-3Y^4+4Y^3-2Y^2+Y)X^5 + (Y^4+2Y^3+4Y^2+3Y+1)
inline BiPoly<Int> g1() {
    BiPoly<Int> p;
    const int top[6] = {0, 1, -2, 4, -3, 1};
    const int bot[5] = {1, 3, 4, 2, 1};
    for (int j = 0; j < 6; ++j)
        if (top[j]) p.set(5, j, Int(top[j]));
    for (int j = 0; j < 5; ++j) p.set(0, j, Int(bot[j]));
    return p;
}

// h(t,u), the degree-5 equation linking t = X-1/X and u = Y-1/Y on g = 0.
inline BiPoly<Int> h() {
    BiPoly<Int> p;
    auto row = [&](int upow, int c0, int c1, int c3, int c5) {
        if (c0) p.set(0, upow, Int(c0));
        if (c1) p.set(1, upow, Int(c1));
        if (c3) p.set(3, upow, Int(c3));
        if (c5) p.set(5, upow, Int(c5));
    };
    row(5, 1, 0, 0, 0);
    row(4, -6, -5, -5, -1);
    row(3, 21, 5, 5, 1);
    row(2, -56, -30, -30, -6);
    row(1, 71, 30, 30, 6);
    row(0, -120, -55, -55, -11);
    return p;
}

// P2(u,v) = (v+u^2) u v^2 - (v-u^2) = u v^3 + u^3 v^2 + u^2 - v
inline BiPoly<Int> P2() {
    BiPoly<Int> p;
    p.set(1, 3, Int(1));
    p.set(3, 2, Int(1));
    p.set(2, 0, Int(1));
    p.set(0, 1, Int(-1));
    return p;
}

// P3(u,v) = (v-u^3)(1+uv^3) - 3u^2 v^2
inline BiPoly<Int> P3() {
    BiPoly<Int> p;
    p.set(0, 1, Int(1));
    p.set(1, 4, Int(1));
    p.set(3, 0, Int(-1));
    p.set(4, 3, Int(-1));
    p.set(2, 2, Int(-3));
    return p;
}

// P7(u,v), the conjectural degree-7 modular equation.
inline BiPoly<Int> P7() {
    BiPoly<Int> p;
    p.set(8, 7, Int(1));
    p.set(7, 5, Int(-7));
    p.set(7, 0, Int(1));
    p.set(6, 3, Int(7));
    p.set(5, 6, Int(-7));
    p.set(5, 1, Int(7));
    p.set(4, 4, Int(35));
    p.set(3, 7, Int(7));
    p.set(3, 2, Int(7));
    p.set(2, 5, Int(-7));
    p.set(1, 8, Int(-1));
    p.set(1, 3, Int(-7));
    p.set(0, 1, Int(-1));
    return p;
}

inline UniPoly<Int> p4() { return UniPoly<Int>::from_coeffs({1, 0, 1}); }
inline UniPoly<Int> p11() { return UniPoly<Int>::from_coeffs({1, 1, 1, -1, 1}); }
inline UniPoly<Int> p16() { return UniPoly<Int>::from_coeffs({1, 2, 0, -2, 1}); }
inline UniPoly<Int> p19() { return UniPoly<Int>::from_coeffs({1, -1, 3, 1, 1}); }
inline UniPoly<Int> p51() {
    return UniPoly<Int>::from_coeffs({1, -1, 1, 7, 12, -7, 1, 1, 1});
}

}  // namespace rr5::seeds

#endif
