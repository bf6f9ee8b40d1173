#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <rr5/classnum.hpp>
#include <rr5/padic.hpp>
#include <rr5/seeds.hpp>

#include <random>

using namespace rr5;

namespace {

PadicU random_u(const UnramCtx& cx, std::mt19937& rng) {
    PadicU x(cx);
    for (int i = 0; i < cx.n; ++i) {
        Int v = 0;
        for (int k = 0; k < cx.m; ++k) v = v * 5 + (rng() % 5);
        x.c[i] = v % cx.pm;
    }
    return x;
}

PadicR random_domain_point(const UnramCtx& cx, std::mt19937& rng,
                           bool unramified = false) {
    for (;;) {
        PadicU a = random_u(cx, rng);
        PadicU b = unramified ? PadicU(cx) : random_u(cx, rng);
        PadicR x(std::move(a), std::move(b));
        if (x.residue_index() != 2) return x;
    }
}

PadicR truncate_r(const PadicR& x, const UnramCtx& cx) {
    return {x.a.truncated(cx), x.b.truncated(cx)};
}

}  // namespace

TEST_CASE("context moduli") {
    UnramCtx c1(1, 8);
    CHECK(c1.u == std::vector<int>{0, 1});  // Z_5 itself
    UnramCtx c2(2, 8);
    // brute-force oracle: x^2+c0+c1 x irreducible iff no root in F_5;
    // scan candidates in the same order and compare
    long expect = -1;
    for (long k = 0; k < 25 && expect < 0; ++k) {
        long c1v = k / 5, c0 = k % 5;
        bool has_root = false;
        for (long x = 0; x < 5; ++x)
            if ((x * x + c1v * x + c0) % 5 == 0) has_root = true;
        if (!has_root) expect = k;
    }
    CHECK(c2.u[0] == expect % 5);
    CHECK(c2.u[1] == expect / 5);
    CHECK(c2.u[2] == 1);
    CHECK_THROWS_AS(UnramCtx(2, 1), std::domain_error);
}

TEST_CASE("ring arithmetic and inverses") {
    UnramCtx cx(3, 12);
    std::mt19937 rng(3);
    for (int it = 0; it < 20; ++it) {
        PadicU a = random_u(cx, rng), b = random_u(cx, rng), c = random_u(cx, rng);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        if (a.is_unit()) CHECK(a * a.inverse() == PadicU::of_int(cx, 1));
    }
    // ramified layer
    for (int it = 0; it < 10; ++it) {
        PadicR x(random_u(cx, rng), random_u(cx, rng));
        if (x.residue_index() == 0) continue;
        PadicR one = PadicR::of_u(PadicU::of_int(cx, 1));
        CHECK(x * x.inverse() == one);
    }
    // sqrt5 * sqrt5 = 5
    PadicR s5 = PadicR::sqrt5(cx);
    CHECK(s5 * s5 == PadicR::of_u(PadicU::of_int(cx, 5)));
}

TEST_CASE("teichmuller lifts satisfy x^q = x") {
    UnramCtx cx(2, 10);
    unsigned long q = 25;
    for (long idx : {1L, 3L, 7L, 11L, 24L}) {
        PadicU t = teichmuller(cx, PadicU(decode_residue(cx, idx)).residue());
        CHECK(t.pow(q) == t);
        CHECK(t.residue_index() == idx);
    }
}

TEST_CASE("square roots in the ramified extension") {
    UnramCtx cx(2, 10);
    std::mt19937 rng(17);
    int found = 0, missing = 0;
    for (int it = 0; it < 40; ++it) {
        PadicU c = random_u(cx, rng);
        auto s = sqrt_in_ramified(c);
        if (s) {
            ++found;
            CHECK(*s * *s == PadicR::of_u(c));
        } else {
            ++missing;
        }
    }
    CHECK(found > 0);
    CHECK(missing > 0);  // nonsquares exist
    // valuation-carrying case: 5 * unit square
    PadicU c = PadicU::of_int(cx, 45);  // 5 * 9
    auto s = sqrt_in_ramified(c);
    REQUIRE(s.has_value());
    CHECK(*s * *s == PadicR::of_u(c));
    CHECK(s->a.is_zero());  // genuinely ramified
}

TEST_CASE("t5 fixes 0") {
    UnramCtx cx(1, 12);
    PadicR zero(cx);
    CHECK(t5(zero) == zero);
}

TEST_CASE("t5 fixes the 5-adic i with residue 3, digits 3+3*5+2*25+3*125+625") {
    UnramCtx cx(1, 5);
    PadicR i5 = periodic_point_at(cx, 3);
    CHECK(t5(i5) == i5);
    CHECK(i5.a.c[0] == 1068);  // 3 + 3*5 + 2*25 + 3*125 + 1*625
    // it really is a square root of -1
    CHECK(i5 * i5 == PadicR::of_u(PadicU::of_int(cx, -1)));
}

TEST_CASE("t5 is the Frobenius mod 5 and solve_g agrees everywhere") {
    std::mt19937 rng(7);
    UnramCtx cx(2, 12);
    for (int it = 0; it < 25; ++it) {
        PadicR x = random_domain_point(cx, rng);
        PadicR y = t5(x);
        // y = x^5 mod 5: compare residues
        PadicR x5 = x.pow(5);
        CHECK(y.residue() == x5.residue());
        CHECK(solve_g(x) == y);
        CHECK(eval_bipoly(seeds::g(), x, y).is_zero());
    }
    CHECK_THROWS_AS(t5(PadicR::of_u(PadicU::of_int(cx, 2))), std::domain_error);
}

TEST_CASE("unramified arguments have unramified images") {
    std::mt19937 rng(5);
    UnramCtx cx(2, 10);
    for (int it = 0; it < 10; ++it) {
        PadicR x = random_domain_point(cx, rng, true);
        CHECK(t5(x).is_unramified());
    }
}

TEST_CASE("precision coherence: higher precision truncates to the lower result") {
    UnramCtx lo(2, 12), hi(2, 22);
    std::mt19937 rng(23);
    for (int it = 0; it < 6; ++it) {
        PadicR xh = random_domain_point(hi, rng);
        PadicR xl = truncate_r(xh, lo);
        CHECK(truncate_r(t5(xh), lo) == t5(xl));
        CHECK(truncate_r(solve_g(xh), lo) == solve_g(xl));
    }
    // periodic points coherent as well
    PadicR p_hi = periodic_point_at(hi, 7);
    PadicR p_lo = periodic_point_at(lo, 7);
    CHECK(truncate_r(p_hi, lo) == p_lo);
}

TEST_CASE("ts5 on the conjugated curve") {
    UnramCtx cx(1, 10);
    // 2i is fixed: i - 1/i = 2i with t5(i) = i
    PadicR i5 = periodic_point_at(cx, 3);
    PadicU twoi = i5.a + i5.a;
    CHECK(ts5(twoi) == twoi);
    CHECK_THROWS_AS(ts5(PadicU::of_int(cx, -1)), std::domain_error);

    // h(z, ts5(z)) = 0 and ts5(z) = z^5 mod 5 on random points of the image
    std::mt19937 rng(29);
    UnramCtx c2(2, 12);
    int tested = 0;
    while (tested < 8) {
        PadicR x = random_domain_point(c2, rng, true);
        if (x.residue_index() == 0) continue;
        PadicU z = (PadicR::of_u(x.a) - PadicR::of_u(x.a).inverse()).a;
        if (z.residue_index() == 4) continue;
        PadicU w;
        try {
            w = ts5(z);
        } catch (const std::domain_error&) {
            continue;
        }
        ++tested;
        CHECK(eval_bipoly(seeds::h(), PadicR::of_u(z), PadicR::of_u(w)).is_zero());
        CHECK(w.residue() == z.pow(5).residue());
    }
}

TEST_CASE("periodic point census") {
    // n = 1: four unramified fixed points, residues 0, 1, 3, 4
    UnramCtx c1(1, 10);
    auto orb1 = periodic_points(c1);
    CHECK(orb1.size() == 4);
    std::vector<long> res;
    for (auto& o : orb1) {
        CHECK(o.period == 1);
        res.push_back(o.points[0].residue_index());
    }
    std::sort(res.begin(), res.end());
    CHECK(res == std::vector<long>{0, 1, 3, 4});

    // n = 2: 10 new orbits of minimal period 2; total points 5^2 - 1
    UnramCtx c2(2, 10);
    auto orb2 = periodic_points(c2);
    long fixed = 0, period2 = 0, points = 0;
    for (auto& o : orb2) {
        points += o.period;
        if (o.period == 1) ++fixed;
        if (o.period == 2) ++period2;
    }
    CHECK(fixed == 4);
    CHECK(period2 == 10);
    CHECK(points == 24);

    // n = 3: 40 new orbits of minimal period 3; total 5^3 - 1
    UnramCtx c3(3, 10);
    auto orb3 = periodic_points(c3);
    long period3 = 0;
    points = 0;
    for (auto& o : orb3) {
        points += o.period;
        if (o.period == 3) ++period3;
    }
    CHECK(period3 == 40);
    CHECK(points == 124);
}

TEST_CASE("ramified companions have residue 2 and are disjoint") {
    UnramCtx c2(2, 10);
    auto orbits = periodic_points(c2);
    for (auto& o : orbits) {
        Orbit r = ramified_companion(o);
        CHECK(r.ramified);
        for (size_t k = 0; k < r.points.size(); ++k) {
            CHECK(r.points[k].residue_index() == 2);
            // for minimal period > 1 the companions genuinely leave the
            // unramified field (for fixed points T(i) = -i stays inside)
            if (o.period > 1) CHECK_FALSE(r.points[k].is_unramified());
            for (auto& u : o.points) CHECK_FALSE(r.points[k] == u);
        }
    }
}

TEST_CASE("j of the fixed point i is 1728, p-adically and exactly") {
    UnramCtx cx(1, 16);
    PadicR i5 = periodic_point_at(cx, 3);
    PadicR j = j_eta(i5);
    CHECK(j == PadicR::of_u(PadicU::of_int(cx, 1728)));

    // exact Gaussian-rational route: b = i,
    // (b^4+12b^3+14b^2-12b+1)^3 / (b^5 (1-11b-b^2)) = 1728
    struct GRat {
        Rat re, im;
        GRat operator*(const GRat& o) const {
            return {re * o.re - im * o.im, re * o.im + im * o.re};
        }
        GRat operator+(const GRat& o) const { return {re + o.re, im + o.im}; }
    };
    GRat b{Rat(0), Rat(1)};
    auto ev = [&](std::initializer_list<long> cs) {
        GRat acc{Rat(0), Rat(0)};
        for (long v : cs) acc = acc * b + GRat{Rat(v), Rat(0)};
        return acc;
    };
    GRat n1 = ev({1, 12, 14, -12, 1});
    GRat num = n1 * n1 * n1;
    GRat den = ev({-1, -11, 1});
    for (int k = 0; k < 5; ++k) den = den * b;
    // num / den == 1728  <=>  num == 1728 * den
    CHECK(num.re == 1728 * den.re);
    CHECK(num.im == 1728 * den.im);
}

TEST_CASE("j at a p19 root is a root of the Hilbert polynomial H_-19") {
    UnramCtx cx(1, 20);
    PadicR eta = periodic_point_at(cx, 1);  // p19 root with residue 1
    // eta is a root of p19
    PadicR acc(cx);
    for (size_t i = seeds::p19().c.size(); i-- > 0;)
        acc = acc * eta + PadicR::of_u(PadicU::of_int(cx, seeds::p19().c[i]));
    CHECK(acc.is_zero());
    PadicR j = j_eta(eta);
    // H_-19 = X + 884736
    CHECK(j == PadicR::of_u(PadicU::of_int(cx, -884736)));
}

TEST_CASE("the two j formulas agree at a companion pair") {
    UnramCtx cx(1, 20);
    PadicR eta = periodic_point_at(cx, 1);
    PadicR xi = t_mobius(t5(eta));  // T(eta^sigma)
    PadicR j1 = j_eta(xi);
    // xi-side formula at b = eta^5: (1+228b+494b^2-228b^3+b^4)^3 / (b(1-11b-b^2)^5)
    PadicR b = eta.pow(5);
    auto ev = [&](std::initializer_list<long> cs) {
        PadicR r(cx);
        for (long v : cs) {
            r = r * b;
            if (v) r = r + PadicR::of_u(PadicU::of_int(cx, v));
        }
        return r;
    };
    PadicR num = ev({1, -228, 494, 228, 1});
    num = num * num * num;
    PadicR q5 = ev({-1, -11, 1});
    PadicR den = b * q5.pow(5);
    PadicR j2 = num.div(den);
    // the companion evaluation loses a few pi-digits to valuation stripping
    PadicR diff = j1 - j2;
    CHECK(diff.val_pi() >= 2 * (cx.m - 6));
}
