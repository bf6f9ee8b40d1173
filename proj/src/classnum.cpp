#include <rr5/classnum.hpp>

#include <rr5/factor.hpp>
#include <rr5/real.hpp>

#include <cmath>
#include <mutex>

namespace rr5 {

int kronecker_5(const Int& d) {
    unsigned long r = mod_u64(-d, 5);
    if (r == 0) return 0;
    return (r == 1 || r == 4) ? 1 : -1;
}

namespace {

void validate_disc(const Int& d) {
    if (sgn(d) <= 0) throw std::domain_error("d must be positive (disc = -d)");
    unsigned long m4 = mod_u64(-d, 4);
    if (m4 != 0 && m4 != 1)
        throw std::domain_error("-d must be 0 or 1 mod 4");
}

// -d = d_K f^2 with d_K fundamental.
std::pair<Int, Int> decompose(const Int& d) {
    validate_disc(d);
    Factorization fa = factor_int(d, 1000000, 20000);
    if (fa.composite_remainder != 1)
        throw resource_error("could not factor discriminant");
    Int s = 1, g = 1;
    for (auto& [p, e] : fa.factors) {
        for (unsigned k = 0; k + 1 < e; k += 2) g *= p;
        if (e & 1) s *= p;
    }
    Int dK, f;
    if (mod_u64(-s, 4) == 1) {
        dK = -s;
        f = g;
    } else {
        dK = -4 * s;
        if (mpz_odd_p(g.get_mpz_t()))
            throw std::domain_error("-d is not a quadratic discriminant");
        f = g / 2;
    }
    return {dK, f};
}

}  // namespace

ClassData class_number(const Int& d) {
    validate_disc(d);
    ClassData cd;
    cd.d = d;
    auto [dK, f] = decompose(d);
    cd.d_K = dK;
    cd.f = f;
    cd.kronecker5 = kronecker_5(d);
    cd.is_4f2 = (dK == -4);
    for (Int a = 1; 3 * a * a <= d; ++a) {
        for (Int b = -a + 1; b <= a; ++b) {
            Int num = b * b + d;
            if (!mpz_divisible_p(num.get_mpz_t(), Int(4 * a).get_mpz_t())) continue;
            Int c = num / (4 * a);
            if (c < a) continue;
            // b runs in (-a, a], so |b| = a forces b = a >= 0 already;
            // a = c additionally requires b >= 0.
            if (a == c && sgn(b) < 0) continue;
            Int g;
            mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
            if (g != 1) continue;
            cd.forms.push_back({a, b, c});
        }
    }
    cd.h = static_cast<long>(cd.forms.size());
    return cd;
}

std::string ImagQuadElem::str() const {
    if (mpz_odd_p(d_K.get_mpz_t())) {
        Int v = 2 * p + q;
        return "(" + v.get_str() + " + " + q.get_str() + "*sqrt(" +
               d_K.get_str() + "))/2";
    }
    Int m = d_K / 4;
    return p.get_str() + " + " + q.get_str() + "*sqrt(" + m.get_str() + ")";
}

ImagQuadElem wd_from_v(const Int& d, const Int& v) {
    auto [dK, f] = decompose(d);
    if (mpz_odd_p(dK.get_mpz_t())) {
        // (v + f sqrt(dK))/2 = (v-f)/2 + f*omega
        Int t = v - f;
        if (mpz_odd_p(t.get_mpz_t()))
            throw std::domain_error("w = (v+sqrt(-d))/2 is not integral");
        return {t / 2, f, dK};
    }
    if (mpz_odd_p(v.get_mpz_t()))
        throw std::domain_error("w = (v+sqrt(-d))/2 is not integral");
    return {v / 2, f, dK};
}

namespace {

// Z-basis data for an ideal of R_K: { (p,q) : gamma | q,
// alpha | p - (q/gamma) beta }, columns in the (1, omega) basis.
struct IdealBasis {
    Int alpha, beta, gamma;
    bool contains(const Int& p, const Int& q) const {
        if (!mpz_divisible_p(q.get_mpz_t(), gamma.get_mpz_t())) return false;
        Int t = p - (q / gamma) * beta;
        return mpz_divisible_p(t.get_mpz_t(), alpha.get_mpz_t());
    }
};

IdealBasis hnf2(std::vector<std::pair<Int, Int>> gens) {
    // vector with second coordinate gcd of all, by Bezout accumulation
    Int bx = 0, by = 0;
    for (auto& [x, y] : gens) {
        if (sgn(y) == 0) continue;
        if (sgn(by) == 0) {
            bx = x;
            by = y;
            continue;
        }
        Int g, s, t;
        mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), by.get_mpz_t(),
                   y.get_mpz_t());
        bx = s * bx + t * x;
        by = g;
    }
    if (sgn(by) < 0) {
        bx = -bx;
        by = -by;
    }
    Int alpha = 0;
    for (auto& [x, y] : gens) {
        Int xr = x;
        if (sgn(by) != 0) xr -= (y / by) * bx;
        mpz_gcd(alpha.get_mpz_t(), alpha.get_mpz_t(), xr.get_mpz_t());
    }
    if (sgn(alpha) == 0) throw std::domain_error("degenerate ideal basis");
    return {alpha, bx % alpha, by};
}

// Square of the prime (5, omega - t) above 5.
IdealBasis prime5_squared(const Int& dK, const Int& t) {
    Int T = mpz_odd_p(dK.get_mpz_t()) ? 1 : 0;
    Int Nm = mpz_odd_p(dK.get_mpz_t()) ? Int((1 - dK) / 4) : Int(-dK / 4);
    // generators of p^2 as a Z-module: 25, 25w, 5e, 5ew, e^2, e^2 w
    // with e = omega - t,  omega^2 = T*omega - Nm
    std::vector<std::pair<Int, Int>> gens;
    gens.emplace_back(25, 0);
    gens.emplace_back(0, 25);
    gens.emplace_back(-5 * t, 5);
    gens.emplace_back(-5 * Nm, 5 * (T - t));
    gens.emplace_back(t * t - Nm, T - 2 * t);
    gens.emplace_back(-Nm * (T - 2 * t), t * t - Nm + T * T - 2 * t * T);
    IdealBasis ib = hnf2(std::move(gens));
    if (abs(ib.alpha * ib.gamma) != 25)
        throw check_failure("prime square ideal has wrong norm");
    return ib;
}

// The two roots mod 5 of the minimal polynomial of omega.
std::pair<Int, Int> omega_roots_mod5(const Int& dK) {
    Int T = mpz_odd_p(dK.get_mpz_t()) ? 1 : 0;
    Int Nm = mpz_odd_p(dK.get_mpz_t()) ? Int((1 - dK) / 4) : Int(-dK / 4);
    std::vector<Int> roots;
    for (long t = 0; t < 5; ++t) {
        Int v = Int(t) * t - T * t + Nm;
        if (mod_u64(v, 5) == 0) roots.push_back(t);
    }
    if (roots.size() != 2)
        throw std::domain_error("5 does not split in this field");
    return {roots[0], roots[1]};
}

}  // namespace

bool is_valid_wd(const Int& d, const ImagQuadElem& w) {
    auto [dK, f] = decompose(d);
    if (w.d_K != dK) throw std::domain_error("element is in the wrong field");
    Int N = w.norm();
    Int g;
    mpz_gcd(g.get_mpz_t(), N.get_mpz_t(), f.get_mpz_t());
    if (g != 1) return false;
    auto [t1, t2] = omega_roots_mod5(dK);
    // divisibility by the square of either prime above 5
    return prime5_squared(dK, t1).contains(w.p, w.q) ||
           prime5_squared(dK, t2).contains(w.p, w.q);
}

ImagQuadElem find_wd(const Int& d, long search_bound) {
    if (kronecker_5(d) != 1)
        throw std::domain_error("find_wd requires (-d/5) = +1");
    // v must have the parity of d for (v^2+d)/4 to be integral
    long start = mpz_odd_p(d.get_mpz_t()) ? 1 : 0;
    for (long av = start; av <= search_bound; av += 2) {
        for (int sign : {+1, -1}) {
            if (av == 0 && sign < 0) continue;
            Int v = sign * Int(av);
            ImagQuadElem w = wd_from_v(d, v);
            if (is_valid_wd(d, w)) return w;
        }
    }
    throw check_failure("find_wd: no valid argument below bound (unexpected)");
}

// ------------------------------------------------------------------
// q-expansions

namespace {

std::vector<Int> mul_trunc(const std::vector<Int>& a, const std::vector<Int>& b,
                           size_t L) {
    std::vector<Int> r(L, 0);
    for (size_t i = 0; i < a.size() && i < L; ++i) {
        if (is_zero(a[i])) continue;
        size_t lim = std::min(L - i, b.size());
        for (size_t j = 0; j < lim; ++j) {
            if (is_zero(b[j])) continue;
            r[i + j] += a[i] * b[j];
        }
    }
    return r;
}

std::vector<Int> pow_trunc(const std::vector<Int>& a, unsigned e, size_t L) {
    std::vector<Int> r(L, 0);
    r[0] = 1;
    std::vector<Int> base = a;
    base.resize(L, 0);
    while (e) {
        if (e & 1) r = mul_trunc(r, base, L);
        base = mul_trunc(base, base, L);
        e >>= 1;
    }
    return r;
}

std::vector<Int> euler_phi_series(size_t L) {
    std::vector<Int> ph(L, 0);
    ph[0] = 1;
    for (long k = 1;; ++k) {
        long i1 = k * (3 * k - 1) / 2, i2 = k * (3 * k + 1) / 2;
        if (i1 >= static_cast<long>(L) && i2 >= static_cast<long>(L)) break;
        Int s = (k & 1) ? -1 : 1;
        if (i1 < static_cast<long>(L)) ph[i1] += s;
        if (i2 < static_cast<long>(L)) ph[i2] += s;
    }
    return ph;
}

std::vector<Int> sigma_series(size_t L, int power, const Int& scale, int sign) {
    // 1 + sign*scale*sum sigma_power(n) q^n
    std::vector<Int> s(L, 0);
    for (size_t a = 1; a < L; ++a) {
        Int ap = pow_int(Int(long(a)), power);
        for (size_t m = a; m < L; m += a) s[m] += ap;
    }
    for (size_t n = 1; n < L; ++n) s[n] *= sign * scale;
    s[0] = 1;
    return s;
}

}  // namespace

std::vector<Int> e4_qexp(long N) {
    return sigma_series(N + 2, 3, Int(240), +1);
}
std::vector<Int> e6_qexp(long N) {
    return sigma_series(N + 2, 5, Int(504), -1);
}
std::vector<Int> delta_qexp(long N) {
    // Delta / q = phi(q)^24
    return pow_trunc(euler_phi_series(N + 2), 24, N + 2);
}

std::vector<Int> j_qexp(long N) {
    if (N > 2000) throw resource_error("j-expansion request beyond the 2000-term cap");
    static std::vector<Int> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lk(mtx);
    if (static_cast<long>(cache.size()) < N + 2) {
        size_t L = N + 2;
        std::vector<Int> e4 = e4_qexp(N);
        std::vector<Int> num = mul_trunc(mul_trunc(e4, e4, L), e4, L);
        std::vector<Int> den = delta_qexp(N);
        // series quotient: t = num / den, den[0] = 1
        std::vector<Int> t(L, 0);
        for (size_t n = 0; n < L; ++n) {
            Int acc = num[n];
            for (size_t k = 0; k < n; ++k)
                if (!is_zero(t[k]) && !is_zero(den[n - k])) acc -= t[k] * den[n - k];
            t[n] = acc;
        }
        cache = std::move(t);
    }
    return std::vector<Int>(cache.begin(), cache.begin() + (N + 2));
}

UniPoly<Int> hilbert_class_poly(const Int& d, long d_cap) {
    if (d > d_cap) throw resource_error("hilbert_class_poly: d above precision budget");
    ClassData cd = class_number(d);
    double sqd = std::sqrt(d.get_d());
    double inv_a_sum = 0;
    double a_max = 1;
    for (const QForm& q : cd.forms) {
        inv_a_sum += 1.0 / q.a.get_d();
        a_max = std::max(a_max, q.a.get_d());
    }
    const double ln2 = std::log(2.0);
    long bits = static_cast<long>(M_PI * sqd * inv_a_sum / ln2) + 96;
    for (;; bits *= 2) {
        if (bits > (1L << 22)) throw precision_error("hilbert_class_poly precision ceiling");
        // q-series length: the slowest-converging form has Im(tau) = sqrt(d)/(2 a_max)
        double bits_per_term = M_PI * sqd / (a_max * ln2);
        long Nser = 16;
        while (Nser * bits_per_term - 18.2 * std::sqrt(double(Nser)) <
               static_cast<double>(bits) + 32)
            Nser = Nser * 6 / 5 + 4;
        const std::vector<Int> jc = j_qexp(Nser);

        mpfr_prec_t prec = static_cast<mpfr_prec_t>(bits + 64);
        std::vector<Complex> coeffs;  // monic product, coeffs[k] of X^k
        coeffs.push_back(Complex::of_long(1, prec));
        for (const QForm& qf : cd.forms) {
            Real sq = Real::of_int(d, prec).sqrt();
            Real two_a = Real::of_int(2 * qf.a, prec);
            Complex tau{Real::of_int(-qf.b, prec) / two_a, sq / two_a};
            Complex q = Complex::q_of_tau(tau, prec);
            Complex s = Complex::of_long(0, prec);
            for (long k = Nser + 1; k >= 0; --k)
                s = s * q + Complex{Real::of_int(jc[k], prec), Real::of_long(0, prec)};
            Complex j = s / q;
            // multiply running product by (X - j)
            coeffs.insert(coeffs.begin(), Complex::of_long(0, prec));
            for (size_t k = 0; k + 1 < coeffs.size(); ++k)
                coeffs[k] = coeffs[k] - j * coeffs[k + 1];
        }
        UniPoly<Int> out;
        bool ok = true;
        for (auto& cc : coeffs) {
            double r1 = 0, r2 = 0;
            Int v = cc.re.round_to_int(&r1);
            Int zi = cc.im.round_to_int(&r2);
            if (r1 >= 0.25 || zi != 0 || cc.im.abs().to_double() >= 0.25) {
                ok = false;
                break;
            }
            out.c.push_back(v);
        }
        if (!ok) continue;
        out.trim();
        if (out.degree() != cd.h) continue;  // precision artifact; retry
        return out;
    }
}

}  // namespace rr5
