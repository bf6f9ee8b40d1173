#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <rr5/identities.hpp>

using namespace rr5;

TEST_CASE("the full identity suite passes exactly") {
    IdentityReport rep = verify_identity_suite();
    for (auto& [name, ok] : rep.checks) {
        INFO(name);
        CHECK(ok);
    }
    CHECK(rep.checks.size() >= 14);
    CHECK(rep.all_pass());
}

TEST_CASE("seed polynomials match their defining transcriptions") {
    // R1(x) = g(x,x) = x (x^2+1)(x^2+x-1)(x^4+x^3+3x^2-x+1)
    auto diag = seeds::g().diagonal();
    auto expect = UniPoly<Int>::from_coeffs({0, 1}) *
                  UniPoly<Int>::from_coeffs({1, 0, 1}) *
                  UniPoly<Int>::from_coeffs({-1, 1, 1}) * seeds::p19();
    CHECK(diag == expect);

    // g1 evaluated on the diagonal at eps: g1(eps,eps) = (625 - 275 sqrt5)/2
    auto g1q = to_quadrat(seeds::g1());
    QuadRat eps = QuadRat::eps();
    QuadRat v = g1q.eval_as(
        eps, eps, [](const QuadRat& c) { return c; }, QuadRat(0));
    CHECK(v == QuadRat(Rat(625, 2), Rat(-275, 2)));
}

TEST_CASE("p19 invariance under U and T") {
    auto p19 = to_quadrat(seeds::p19());
    // x^deg p(-1/x) = p
    auto u = mobius_conjugate(p19, QuadRat(0), QuadRat(-1), QuadRat(1), QuadRat(0));
    CHECK(u == p19);
    // T-conjugate, normalized monic, reproduces p19
    QuadRat s5 = QuadRat::sqrt5(), one(1), two(2);
    auto t = mobius_conjugate(p19, -(one + s5), two, two, one + s5, true);
    CHECK(t == p19);
}
