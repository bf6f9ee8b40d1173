#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <rr5/poly.hpp>

#include <random>

using namespace rr5;

TEST_CASE("rationals stay canonical") {
    Rat r(6, -4);
    r.canonicalize();
    CHECK(r == Rat(-3, 2));
    CHECK(sgn(r.get_den()) > 0);
}

TEST_CASE("quadratic ring basics") {
    QuadRat s5 = QuadRat::sqrt5();
    CHECK(s5 * s5 == QuadRat(Rat(5)));
    QuadRat eps = QuadRat::eps();
    CHECK(pow_qr(eps, 5) == QuadRat::eps5());
    CHECK(eps.conj() == QuadRat(Rat(-1, 2), Rat(-1, 2)));
    CHECK(eps.norm() == Rat(-1));
    // norm is multiplicative
    QuadRat a(Rat(3, 2), Rat(-1, 7)), b(Rat(-2), Rat(5, 3));
    CHECK((a * b).norm() == a.norm() * b.norm());
    CHECK(a * a.inverse() == QuadRat(1));
}

TEST_CASE("polynomial degree and zero sentinel") {
    UniPoly<Int> z;
    CHECK(z.degree() == -1);
    CHECK(z.is_zero_poly());
    UniPoly<Int> p = UniPoly<Int>::from_coeffs({0, 0, 3});
    CHECK(p.degree() == 2);
    UniPoly<Int> q = p - p;
    CHECK(q.degree() == -1);
}

TEST_CASE("ring axioms on random polynomials") {
    std::mt19937 rng(42);
    std::uniform_int_distribution<int> cd(-9, 9);
    auto rnd = [&](int d) {
        UniPoly<Int> p;
        for (int i = 0; i <= d; ++i) p.c.emplace_back(cd(rng));
        p.trim();
        return p;
    };
    for (int it = 0; it < 50; ++it) {
        auto a = rnd(6), b = rnd(5), c = rnd(4);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * b == b * a);
    }
}

TEST_CASE("exact division") {
    auto x2m1 = UniPoly<Int>::from_coeffs({-1, 0, 1});
    auto xm1 = UniPoly<Int>::from_coeffs({-1, 1});
    auto xp1 = UniPoly<Int>::from_coeffs({1, 1});
    CHECK(exact_divide(x2m1, xm1) == xp1);
    auto x2p1 = UniPoly<Int>::from_coeffs({1, 0, 1});
    CHECK_THROWS_AS(exact_divide(x2p1, xp1), inexact_division);
    CHECK_THROWS_AS(exact_divide(x2p1, UniPoly<Int>()), std::domain_error);
}

TEST_CASE("moebius conjugation") {
    // identity map fixes x
    auto x = UniPoly<QuadRat>::x();
    auto r = mobius_conjugate(x, QuadRat(1), QuadRat(0), QuadRat(0), QuadRat(1));
    CHECK(r == x);
    CHECK_THROWS_AS(
        mobius_conjugate(x, QuadRat(1), QuadRat(2), QuadRat(2), QuadRat(4)),
        std::domain_error);
}

TEST_CASE("moebius conjugation is a group action up to scalars") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> cd(-4, 4);
    auto rq = [&]() { return QuadRat(Rat(cd(rng)), Rat(cd(rng))); };
    for (int it = 0; it < 20; ++it) {
        QuadRat a1 = rq(), b1 = rq(), c1 = rq(), d1 = rq();
        QuadRat a2 = rq(), b2 = rq(), c2 = rq(), d2 = rq();
        if (is_zero(a1 * d1 - b1 * c1) || is_zero(a2 * d2 - b2 * c2)) continue;
        UniPoly<QuadRat> p;
        for (int i = 0; i <= 4; ++i) p.c.emplace_back(Rat(cd(rng)), Rat(0));
        p.trim();
        if (p.degree() < 4) continue;
        // composite map (a1,b1,c1,d1) o (a2,b2,c2,d2)
        QuadRat ca = a1 * a2 + b1 * c2, cb = a1 * b2 + b1 * d2;
        QuadRat cc = c1 * a2 + d1 * c2, cdd = c1 * b2 + d1 * d2;
        auto once = mobius_conjugate(p, ca, cb, cc, cdd, true);
        auto twice = mobius_conjugate(mobius_conjugate(p, a1, b1, c1, d1), a2,
                                      b2, c2, d2, true);
        CHECK(once == twice);
    }
}

TEST_CASE("bivariate basics") {
    // g-like structure: assemble and read back
    BiPoly<Int> p;
    p.set(5, 0, Int(1));
    p.set(0, 3, Int(-2));
    CHECK(p.deg_x() == 5);
    CHECK(p.deg_y() == 3);
    CHECK(p.coeff(5, 0) == 1);
    CHECK(p.coeff(2, 2) == 0);
    auto d = p.diagonal();
    CHECK(d.coeff(5) == 1);
    CHECK(d.coeff(3) == -2);
    auto s = p.swapped();
    CHECK(s.coeff(0, 5) == 1);
    CHECK(s.coeff(3, 0) == -2);
}
