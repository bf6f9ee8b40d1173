#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <rr5/classnum.hpp>

#include <numeric>

using namespace rr5;

TEST_CASE("class numbers of the small discriminants") {
    CHECK(class_number(11).h == 1);
    CHECK(class_number(16).h == 1);
    CHECK(class_number(19).h == 1);
    CHECK(class_number(196).h == 4);
    CHECK(class_number(36).h == 2);
    CHECK(class_number(4).h == 1);
    CHECK(class_number(4).h + class_number(19).h == 2);
    CHECK_THROWS_AS(class_number(5), std::domain_error);  // -5 is 3 mod 4
}

TEST_CASE("fundamental discriminant decomposition") {
    ClassData cd = class_number(36);
    CHECK(cd.d_K == -4);
    CHECK(cd.f == 3);
    CHECK(cd.is_4f2);
    ClassData cd2 = class_number(11);
    CHECK(cd2.d_K == -11);
    CHECK(cd2.f == 1);
    CHECK_FALSE(cd2.is_4f2);
}

TEST_CASE("h(-d) equals the primitive reduced form count, cross-checked") {
    // brute squarefree-ish check against a direct (a,b,c) scan
    for (long d : {11, 16, 19, 24, 36, 51, 196, 204}) {
        ClassData cd = class_number(d);
        long count = 0;
        for (long a = 1; 3 * a * a <= d; ++a)
            for (long b = -a + 1; b <= a; ++b) {
                long num = b * b + d;
                if (num % (4 * a)) continue;
                long c = num / (4 * a);
                if (c < a) continue;
                if (a == c && b < 0) continue;
                if (std::gcd(std::gcd(a, std::abs(b)), c) != 1) continue;
                ++count;
            }
        CHECK(cd.h == count);
    }
}

TEST_CASE("kronecker symbol (-d/5)") {
    CHECK(kronecker_5(11) == 1);
    CHECK(kronecker_5(5) == 0);
    CHECK(kronecker_5(3) == -1);
    for (long d = 1; d < 60; ++d) {
        long r = ((-d) % 5 + 5) % 5;
        int expect = (r == 0) ? 0 : ((r == 1 || r == 4) ? 1 : -1);
        CHECK(kronecker_5(d) == expect);
    }
}

TEST_CASE("the printed w_d arguments are valid") {
    // w_11 = (33 + sqrt(-11))/2, norm 275 = 5^2 * 11
    ImagQuadElem w11 = wd_from_v(11, 33);
    CHECK(w11.norm() == 275);
    CHECK(is_valid_wd(11, w11));
    // w_16 = 3 + 4i, norm 25
    ImagQuadElem w16{3, 4, -4};
    CHECK(w16.norm() == 25);
    CHECK(is_valid_wd(16, w16));
    // w_19 = (41 + sqrt(-19))/2
    ImagQuadElem w19 = wd_from_v(19, 41);
    CHECK(is_valid_wd(19, w19));
    // w_4 = -7 + i
    ImagQuadElem w4 = wd_from_v(4, -14);
    CHECK(w4.p == -7);
    CHECK(w4.q == 1);
    CHECK(is_valid_wd(4, w4));
}

TEST_CASE("every valid w has norm divisible by 25 and coprime to f") {
    for (long d : {4, 11, 16, 19, 36, 51}) {
        ImagQuadElem w = find_wd(d);
        Int N = w.norm();
        CHECK(mpz_divisible_ui_p(N.get_mpz_t(), 25));
        Int g;
        ClassData cd = class_number(d);
        mpz_gcd(g.get_mpz_t(), N.get_mpz_t(), cd.f.get_mpz_t());
        CHECK(g == 1);
    }
    CHECK_THROWS_AS(find_wd(3), std::domain_error);  // (-3/5) = -1
}

TEST_CASE("j-function expansion") {
    const auto& jc = j_qexp(10);
    CHECK(jc[0] == 1);       // q^-1
    CHECK(jc[1] == 744);     // q^0
    CHECK(jc[2] == 196884);  // q^1
    CHECK(jc[3] == 21493760);
}

TEST_CASE("E4^3 - E6^2 = 1728 Delta (independent j oracle)") {
    long N = 40;
    size_t L = N + 2;
    auto e4 = e4_qexp(N), e6 = e6_qexp(N), dl = delta_qexp(N);
    // e4^3 - e6^2, truncated
    std::vector<Int> t(L, 0);
    for (size_t n = 0; n < L; ++n) {
        Int acc = 0;
        for (size_t i = 0; i < L; ++i)
            for (size_t j = 0; i + j < L; ++j) {
                size_t k = n;
                if (i + j > k) continue;
                size_t l = k - i - j;
                if (l < L) acc += e4[i] * e4[j] * e4[l];
            }
        t[n] = acc;
    }
    for (size_t n = 0; n < L; ++n) {
        Int acc = t[n];
        for (size_t i = 0; i <= n; ++i) acc -= e6[i] * e6[n - i];
        // Delta = q * (phi^24): coefficient of q^n in 1728*Delta is 1728*dl[n-1]
        Int rhs = (n >= 1) ? Int(1728 * dl[n - 1]) : Int(0);
        CHECK(acc == rhs);
    }
}

TEST_CASE("Hilbert class polynomials at the anchor discriminants") {
    auto h4 = hilbert_class_poly(4);
    CHECK(h4 == UniPoly<Int>::from_coeffs({-1728, 1}));
    auto h19 = hilbert_class_poly(19);
    CHECK(h19 == UniPoly<Int>::from_coeffs({884736, 1}));
    auto h36 = hilbert_class_poly(36);
    CHECK(h36.degree() == 2);
    CHECK(h36.is_monic());
    // h(-d) distinct j-values = degree
    CHECK(h36.degree() == class_number(36).h);
}
