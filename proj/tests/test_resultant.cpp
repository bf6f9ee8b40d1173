#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <rr5/resultant.hpp>
#include <rr5/seeds.hpp>

#include "oracles.hpp"

#include <random>

using namespace rr5;
using rr5_test::random_poly;
using rr5_test::sylvester_resultant;

TEST_CASE("resultant with a linear factor is evaluation") {
    auto a = UniPoly<Int>::from_coeffs({-7, 1});  // y - 7
    auto f = UniPoly<Int>::from_coeffs({1, 0, 0, 1});  // y^3 + 1
    CHECK(resultant_int(a, f) == 344);
    CHECK(resultant_prs(a, f) == 344);
}

TEST_CASE("zero input is a domain error") {
    auto f = UniPoly<Int>::from_coeffs({1, 1});
    CHECK_THROWS_AS(resultant_int(UniPoly<Int>(), f), std::domain_error);
    CHECK_THROWS_AS(resultant_prs(f, UniPoly<Int>()), std::domain_error);
}

TEST_CASE("modular CRT path equals fraction-free subresultant PRS") {
    std::mt19937 rng(2024);
    for (int it = 0; it < 20; ++it) {
        auto a = random_poly(rng, 8, 30);
        auto b = random_poly(rng, 8, 30);
        if (a.degree() < 0 || b.degree() < 0) continue;
        CHECK(resultant_int(a, b) == resultant_prs(a, b));
    }
}

TEST_CASE("modular CRT path equals Sylvester determinant oracle") {
    std::mt19937 rng(99);
    for (int it = 0; it < 20; ++it) {
        auto a = random_poly(rng, 7, 20);
        auto b = random_poly(rng, 6, 20);
        if (a.degree() < 1 || b.degree() < 1) continue;
        CHECK(resultant_int(a, b) == sylvester_resultant(a, b));
    }
}

TEST_CASE("skew symmetry and multiplicativity") {
    std::mt19937 rng(5);
    for (int it = 0; it < 20; ++it) {
        auto a = random_poly(rng, 6, 12);
        auto b = random_poly(rng, 5, 12);
        auto c = random_poly(rng, 4, 12);
        if (a.degree() < 1 || b.degree() < 1 || c.degree() < 1) continue;
        Int rab = resultant_int(a, b);
        Int rba = resultant_int(b, a);
        Int sign = ((a.degree() * b.degree()) & 1) ? -1 : 1;
        CHECK(rab == sign * rba);
        CHECK(resultant_int(a * b, c) == resultant_int(a, c) * resultant_int(b, c));
    }
}

TEST_CASE("bivariate resultant of g against dg/dy matches determinant oracle") {
    BiPoly<Int> g = seeds::g();
    // dg/dy
    BiPoly<Int> gy;
    for (size_t i = 0; i < g.c.size(); ++i)
        for (size_t j = 1; j < g.c[i].size(); ++j)
            if (!is_zero(g.c[i][j])) gy.set(i, j - 1, Int(long(j)) * g.c[i][j]);
    BiPoly<Int> res = resultant(g, gy, Axis::y);
    // specialize x at three small values and compare with the Sylvester
    // determinant of the specialized univariate pair
    for (long x0 : {2L, 3L, 5L}) {
        Int vx(x0);
        auto spec = [&](const BiPoly<Int>& p) {
            UniPoly<Int> out;
            long dy = p.deg_y();
            for (long j = 0; j <= dy; ++j) {
                Int acc = 0, xp = 1;
                for (size_t i = 0; i < p.c.size(); ++i) {
                    acc += p.coeff(i, j) * xp;
                    xp *= vx;
                }
                out.c.push_back(acc);
            }
            out.trim();
            return out;
        };
        UniPoly<Int> gs = spec(g), gys = spec(gy), rs = spec(res);
        CHECK(rs.degree() == 0);
        CHECK(rs.coeff(0) == sylvester_resultant(gs, gys));
    }
}

TEST_CASE("discriminants") {
    auto x2p1 = UniPoly<Int>::from_coeffs({1, 0, 1});
    CHECK(discriminant(x2p1) == -4);
    auto fd = discriminant_factored(x2p1);
    CHECK(fd.value == -4);
    REQUIRE(fd.factors.size() == 1);
    CHECK(fd.factors[0].first == 2);
    CHECK(fd.factors[0].second == 2);
    CHECK(fd.composite_remainder == 1);
    CHECK_THROWS_AS(discriminant(UniPoly<Int>::from_coeffs({3, 1})),
                    std::domain_error);
}

TEST_CASE("squarefree check") {
    CHECK(squarefree_check(UniPoly<Int>::from_coeffs({1, 0, 1})));
    CHECK_FALSE(squarefree_check(UniPoly<Int>::from_coeffs({1, 2, 1})));
    CHECK(squarefree_check(seeds::p19()));
}

TEST_CASE("resultant against p4 reproduces the degree-9 modular relation") {
    // Res_y(P3(y,x), y^2+1) = x^8 + x^6 - 6x^5 + 9x^4 + 6x^3 + x^2 + 1
    BiPoly<Int> p3 = seeds::P3().swapped();  // first variable is y: P3(y, x)
    UniPoly<Int> r = resultant_y(p3, seeds::p4());
    auto expect = UniPoly<Int>::from_coeffs({1, 0, 1, 6, 9, -6, 1, 0, 1});
    CHECK(r == expect);
}
