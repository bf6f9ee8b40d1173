#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <rr5/tower.hpp>

using namespace rr5;

namespace {
UniPoly<Int> up(std::initializer_list<long> v) {
    return UniPoly<Int>::from_coeffs(v);
}
}  // namespace

TEST_CASE("R1 matches the printed factorization") {
    TowerPoly r1 = build_R(1);
    auto expect = up({0, 1}) * up({1, 0, 1}) * up({-1, 1, 1}) * seeds::p19();
    CHECK(r1.poly == expect);
    CHECK(r1.poly == seeds::g().diagonal());
    CHECK(congruence_check(r1));
}

TEST_CASE("S1 matches the printed factorization") {
    TowerPoly s1 = build_S(1);
    auto expect = up({1, 1}) * up({4, 0, 1}) * up({3, -1, 1}) * up({2, -2, 1}) *
                  up({5, 1, 1});
    CHECK(s1.poly == -expect);
    CHECK(congruence_check(s1));
}

TEST_CASE("R2 degree and congruence") {
    TowerPoly r2 = build_R(2);
    CHECK(r2.degree() == 49);
    CHECK(congruence_check(r2));
    CHECK(squarefree_check(r2.poly));
}

TEST_CASE("S2 degree and congruence") {
    TowerPoly s2 = build_S(2);
    CHECK(s2.degree() == 49);
    CHECK(congruence_check(s2));
    CHECK(squarefree_check(s2.poly));
}

TEST_CASE("R3 and S3 congruences") {
    TowerPoly r3 = build_R(3);
    CHECK(r3.degree() == 249);
    CHECK(congruence_check(r3));
    TowerPoly s3 = build_S(3);
    CHECK(s3.degree() == 249);
    CHECK(congruence_check(s3));
}

TEST_CASE("P and Q quotients") {
    TowerPoly p1 = build_P(1);
    CHECK(p1.poly == build_R(1).poly);
    TowerPoly p2 = build_P(2);
    CHECK(p2.degree() == 40);
    TowerPoly q2 = build_Q(2);
    CHECK(q2.degree() == 40);
    // Moebius inversion reassembles: P1 * P2 = R2
    CHECK(p1.poly * p2.poly == build_R(2).poly);
    TowerPoly p3 = build_P(3);
    CHECK(p3.degree() == 240);
    CHECK(p1.poly * p3.poly == build_R(3).poly);
}

TEST_CASE("Q1 is the printed product") {
    TowerPoly q1 = build_Q(1);
    auto expect = up({1, 1}) * up({4, 0, 1}) * up({3, -1, 1}) * up({2, -2, 1}) *
                  up({5, 1, 1});
    CHECK(q1.poly == -expect);
}

TEST_CASE("tildeR degrees; no root at the golden-ratio fixed points") {
    TowerPoly t1 = build_tildeR(1);
    CHECK(t1.poly == seeds::g1().diagonal());
    TowerPoly t2 = build_tildeR(2);
    CHECK(t2.degree() == 50);
    // (x^2+x-1) never divides tildeR_n: evaluate at eps exactly
    auto t2q = to_quadrat(t2.poly);
    QuadRat v = t2q.eval(QuadRat::eps());
    CHECK(!v.is_zero());
    auto t1q = to_quadrat(t1.poly);
    CHECK(t1q.eval(QuadRat::eps()) == QuadRat(Rat(625, 2), Rat(-275, 2)));
}

TEST_CASE("cap violations raise resource errors") {
    CHECK_THROWS_AS(build_R(7), resource_error);
    CHECK_THROWS_AS(build_tildeR(5), resource_error);
}
