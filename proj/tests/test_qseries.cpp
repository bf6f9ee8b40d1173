#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <rr5/classnum.hpp>
#include <rr5/qseries.hpp>
#include <rr5/seeds.hpp>

#include <random>

using namespace rr5;

TEST_CASE("both constructions normalize to q^(1/5)(1 + O(q))") {
    auto p = rr_product(30);
    CHECK(p.valuation() == 1);
    CHECK(p.c[1] == 1);
    auto f = rr_cfrac(30, 40);
    CHECK(f.valuation() == 1);
    CHECK(f.c[1] == 1);
}

TEST_CASE("oracle pair: product and continued fraction agree") {
    long W = 5 * 60;
    auto p = rr_product(W);
    auto f = rr_cfrac(W);  // auto depth
    REQUIRE(p.order == W);
    REQUIRE(f.order == W);
    for (long e = 0; e < W; ++e) {
        INFO(e);
        CHECK(p.c[e] == f.c[e]);
    }
}

TEST_CASE("insufficient fixed depth is detectably different") {
    long W = 5 * 40;
    auto p = rr_product(W);
    auto shallow = rr_cfrac(W, 3);
    CHECK(p.c != shallow.c);
}

TEST_CASE("substitute_scale bookkeeping") {
    auto u = rr_product(50);
    auto v = u.substitute_scale(5);
    CHECK(v.order == 250);
    // only integral q powers survive: exponents congruent to 0 mod 5
    for (long e = 0; e < v.order; ++e)
        if (!is_zero(v.c[e])) CHECK(e % 5 == 0);
    auto m = PuiseuxSeries::monomial(1, 10).substitute_scale(2);
    CHECK(m.coeff(2) == 1);
    CHECK(m.valuation() == 2);
}

TEST_CASE("series arithmetic is associative and distributive") {
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> cd(-5, 5);
    auto rnd = [&](long ord) {
        PuiseuxSeries s(ord);
        for (long e = 0; e < ord; ++e) {
            s.c[e] = Rat(cd(rng), 1 + (e % 3));
            s.c[e].canonicalize();
        }
        return s;
    };
    for (int it = 0; it < 10; ++it) {
        auto a = rnd(25), b = rnd(25), c = rnd(25);
        auto l = (a * b) * c;
        auto r = a * (b * c);
        REQUIRE(l.order == r.order);
        for (long e = 0; e < l.order; ++e) CHECK(l.c[e] == r.c[e]);
        auto d1 = a * (b + c), d2 = a * b + a * c;
        long n = std::min(d1.order, d2.order);
        for (long e = 0; e < n; ++e) CHECK(d1.c[e] == d2.c[e]);
    }
}

TEST_CASE("modular relations vanish at modest order") {
    CHECK(verify_relation(Relation::g5, 30).ok);
    CHECK(verify_relation(Relation::p2, 30).ok);
    CHECK(verify_relation(Relation::p3, 30).ok);
    CHECK(verify_relation(Relation::frakr, 30).ok);
    CHECK(verify_relation(Relation::p7, 30).ok);
}

TEST_CASE("a broken relation reports its first nonvanishing order") {
    // g(r(q), r(q^4)) is not a modular relation; expect early failure
    long W = 5 * 20 + 8;
    auto u = rr_product(W);
    auto v = u.substitute_scale(4).truncated(W);
    auto g = seeds::g();
    // direct expansion
    PuiseuxSeries acc(W);
    for (size_t i = g.c.size(); i-- > 0;) {
        PuiseuxSeries row(W);
        for (size_t j = g.c[i].size(); j-- > 0;) {
            row = row * v;
            if (!is_zero(g.c[i][j])) {
                PuiseuxSeries k(W);
                k.c[0] = Rat(g.c[i][j]);
                row = row + k;
            }
        }
        acc = acc * u + row;
    }
    CHECK(acc.first_nonzero().has_value());
}

TEST_CASE("numeric r at the Gaussian CM point") {
    // r((-7+i)/5) = -i: |p4(r)| below 2^-64 at 128 bits
    long bits = 128;
    mpfr_prec_t prec = bits + 64;
    Complex tau{Real::of_rat(Rat(-7, 5), prec), Real::of_rat(Rat(1, 5), prec)};
    Complex v = r_numeric(tau, bits);
    Real res = poly_abs_at(seeds::p4(), v);
    CHECK(res.log2_abs() < -64.0);
    // and it is close to -i specifically
    Real d1 = (v - Complex{Real::of_long(0, prec), Real::of_long(-1, prec)}).abs();
    CHECK(d1.log2_abs() < -60.0);
}

TEST_CASE("numeric r is 5-periodic in tau") {
    long bits = 96;
    mpfr_prec_t prec = bits + 64;
    Complex tau{Real::of_rat(Rat(1, 3), prec), Real::of_rat(Rat(2, 5), prec)};
    Complex tau5{tau.re + Real::of_long(5, prec), tau.im};
    Complex a = r_numeric(tau, bits);
    Complex b = r_numeric(tau5, bits);
    CHECK((a - b).abs().log2_abs() < -80.0);
}

TEST_CASE("numeric r rejects the lower half plane") {
    mpfr_prec_t prec = 128;
    Complex tau{Real::of_long(0, prec), Real::of_long(-1, prec)};
    CHECK_THROWS_AS(r_numeric(tau, 64), std::domain_error);
}
