#include <rr5/resultant.hpp>

#include <rr5/crt.hpp>
#include <rr5/factor.hpp>

#include <cmath>

namespace rr5 {

namespace {

double log2_abs(const Int& v) {
    if (is_zero(v)) return 0.0;
    return static_cast<double>(mpz_sizeinbase(v.get_mpz_t(), 2));
}

double log2_height(const UniPoly<Int>& p) {
    double m = 0.0;
    for (const Int& v : p.c) m = std::max(m, log2_abs(v));
    return m;
}

size_t primes_for_bits(double bits) {
    return static_cast<size_t>(bits / 61.0) + 1;
}

// lc(B)^(degA-degB+1) * A  mod B over Z (pseudo-remainder).
UniPoly<Int> prem(const UniPoly<Int>& a, const UniPoly<Int>& b) {
    UniPoly<Int> r = a;
    long db = b.degree();
    const Int& lb = b.lc();
    long steps = a.degree() - db + 1;
    while (!r.is_zero_poly() && r.degree() >= db) {
        long k = r.degree() - db;
        Int top = r.lc();
        for (Int& v : r.c) v *= lb;
        for (long j = 0; j <= db; ++j) r.c[k + j] -= top * b.c[j];
        r.trim();
        --steps;
    }
    if (steps > 0) {
        Int f = pow_int(lb, static_cast<unsigned long>(steps));
        for (Int& v : r.c) v *= f;
    }
    return r;
}

}  // namespace

Int resultant_prs(const UniPoly<Int>& a0, const UniPoly<Int>& b0) {
    if (a0.is_zero_poly() || b0.is_zero_poly())
        throw std::domain_error("resultant of zero polynomial");
    UniPoly<Int> a = a0, b = b0;
    Int s = 1;
    if (a.degree() < b.degree()) {
        std::swap(a, b);
        if ((a.degree() & 1) && (b.degree() & 1)) s = -s;
    }
    if (b.degree() == 0) return s * pow_int(b.lc(), a.degree());
    Int ca = content(a), cb = content(b);
    Int t = pow_int(ca, b.degree()) * pow_int(cb, a.degree());
    for (Int& v : a.c) v /= ca;
    for (Int& v : b.c) v /= cb;
    Int g = 1, h = 1;
    while (true) {
        long delta = a.degree() - b.degree();
        if ((a.degree() & 1) && (b.degree() & 1)) s = -s;
        UniPoly<Int> r = prem(a, b);
        a = b;
        Int div = g * pow_int(h, static_cast<unsigned long>(delta));
        for (Int& v : r.c) {
            if (!mpz_divisible_p(v.get_mpz_t(), div.get_mpz_t()))
                throw inexact_division("subresultant PRS divisor failure");
            v /= div;
        }
        r.trim();
        b = r;
        g = a.lc();
        if (delta > 0) {
            // h <- g^delta / h^(delta-1), exact in Z
            Int num = pow_int(g, static_cast<unsigned long>(delta));
            Int den = pow_int(h, static_cast<unsigned long>(delta - 1));
            if (!mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t()))
                throw inexact_division("subresultant PRS h-update failure");
            h = num / den;
        }
        if (b.is_zero_poly()) return Int(0);
        if (b.degree() == 0) break;
    }
    // final: res = s * t * lc(B)^degA / h^(degA - 1)
    Int num = pow_int(b.lc(), static_cast<unsigned long>(a.degree()));
    Int den = pow_int(h, static_cast<unsigned long>(a.degree() - 1));
    if (!mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t()))
        throw inexact_division("subresultant PRS final step failure");
    return s * t * (num / den);
}

Int resultant_int(const UniPoly<Int>& a, const UniPoly<Int>& b) {
    if (a.is_zero_poly() || b.is_zero_poly())
        throw std::domain_error("resultant of zero polynomial");
    if (a.degree() == 0) return pow_int(a.lc(), b.degree());
    if (b.degree() == 0) return pow_int(b.lc(), a.degree());
    double bits = b.degree() * (log2_height(a) + 0.5 * std::log2(a.degree() + 1.0)) +
                  a.degree() * (log2_height(b) + 0.5 * std::log2(b.degree() + 1.0)) + 2;
    size_t need = primes_for_bits(bits);
    CrtAccum acc;
    for (size_t idx = 0;; ++idx) {
        std::uint64_t p = crt_prime(idx);
        if (mod_u64(a.lc(), p) == 0 || mod_u64(b.lc(), p) == 0) continue;
        Fp F(p);
        std::uint64_t r = fp_resultant(F, fp_from_int(F, a), fp_from_int(F, b));
        acc.add({r}, p);
        if (acc.stable >= 2) break;
        if (acc.primes_used > need + 8)
            throw check_failure("modular resultant failed to stabilize");
    }
    return acc.vals[0];
}

UniPoly<Int> resultant_y(const BiPoly<Int>& a, const UniPoly<Int>& b) {
    BiPoly<Int> bb;
    for (size_t j = 0; j < b.c.size(); ++j) bb.set(0, j, b.c[j]);
    BiPoly<Int> r = resultant(a, bb, Axis::y);
    UniPoly<Int> out;
    for (size_t i = 0; i < r.c.size(); ++i) out.c.push_back(r.coeff(i, 0));
    out.trim();
    return out;
}

BiPoly<Int> resultant(const BiPoly<Int>& a, const BiPoly<Int>& b, Axis var) {
    if (a.is_zero_poly() || b.is_zero_poly())
        throw std::domain_error("resultant of zero polynomial");
    if (var == Axis::x) return resultant(a.swapped(), b.swapped(), Axis::y).swapped();

    long dya = a.deg_y(), dyb = b.deg_y();
    long dxa = a.deg_x(), dxb = b.deg_x();
    auto ac = a.y_coeffs(), bc = b.y_coeffs();
    if (dya == 0) {
        // Res_y(A(x), B) = A(x)^deg_y(B)
        UniPoly<Int> r = pow_poly(ac[0], static_cast<unsigned long>(dyb));
        BiPoly<Int> out;
        for (size_t i = 0; i < r.c.size(); ++i) out.set(i, 0, r.c[i]);
        return out;
    }
    if (dyb == 0) {
        UniPoly<Int> r = pow_poly(bc[0], static_cast<unsigned long>(dya));
        BiPoly<Int> out;
        for (size_t i = 0; i < r.c.size(); ++i) out.set(i, 0, r.c[i]);
        return out;
    }

    long D = dxa * dyb + dxb * dya;  // degree bound in x
    double maxa = 0, maxb = 0;
    for (const auto& row : a.c)
        for (const Int& v : row) maxa = std::max(maxa, log2_abs(v));
    for (const auto& row : b.c)
        for (const Int& v : row) maxb = std::max(maxb, log2_abs(v));
    double bits = std::lgamma(dya + dyb + 1.0) / std::log(2.0) +
                  dyb * (maxa + std::log2(dxa + 1.0) + std::log2(D + 1.0)) +
                  dya * (maxb + std::log2(dxb + 1.0) + std::log2(D + 1.0)) + 4;
    size_t need = primes_for_bits(bits);

    const UniPoly<Int>& lca = ac[dya];
    const UniPoly<Int>& lcb = bc[dyb];
    CrtAccum acc;
    for (size_t idx = 0;; ++idx) {
        std::uint64_t p = crt_prime(idx);
        Fp F(p);
        FpVec lcap = fp_from_int(F, lca), lcbp = fp_from_int(F, lcb);
        if (lcap.empty() || lcbp.empty()) continue;  // prime kills a leading coeff
        std::vector<FpVec> ap(dya + 1), bp(dyb + 1);
        for (long j = 0; j <= dya; ++j) ap[j] = fp_from_int(F, ac[j]);
        for (long j = 0; j <= dyb; ++j) bp[j] = fp_from_int(F, bc[j]);

        FpVec xs, ys;
        std::uint64_t x0 = 0;
        while (static_cast<long>(xs.size()) < D + 2) {  // one spare for verification
            if (fp_eval(F, lcap, x0) == 0 || fp_eval(F, lcbp, x0) == 0) {
                ++x0;
                continue;
            }
            FpVec av(dya + 1), bv(dyb + 1);
            for (long j = 0; j <= dya; ++j) av[j] = fp_eval(F, ap[j], x0);
            for (long j = 0; j <= dyb; ++j) bv[j] = fp_eval(F, bp[j], x0);
            fp_trim(av);
            fp_trim(bv);
            xs.push_back(x0);
            ys.push_back(fp_resultant(F, av, bv));
            ++x0;
        }
        std::uint64_t vx = xs.back(), vy = ys.back();
        xs.pop_back();
        ys.pop_back();
        FpVec interp = fp_interpolate(F, xs, ys);
        if (fp_eval(F, interp, vx) != vy)
            throw check_failure("resultant interpolation verification failed");
        std::vector<std::uint64_t> row(D + 1, 0);
        for (size_t i = 0; i < interp.size(); ++i) row[i] = interp[i];
        acc.add(row, p);
        if (acc.stable >= 2) break;
        if (acc.primes_used > need + 8)
            throw check_failure("modular bivariate resultant failed to stabilize");
    }
    BiPoly<Int> out;
    for (long i = 0; i <= D; ++i)
        if (!is_zero(acc.vals[i])) out.set(i, 0, acc.vals[i]);
    out.trim();
    return out;
}

Int discriminant(const UniPoly<Int>& p) {
    if (p.degree() < 2) throw std::domain_error("discriminant needs degree >= 2");
    Int res = resultant_int(p, p.derivative());
    if (!mpz_divisible_p(res.get_mpz_t(), p.lc().get_mpz_t()))
        throw check_failure("discriminant: lc does not divide resultant");
    Int disc = res / p.lc();
    long d = p.degree();
    if (((d * (d - 1)) / 2) & 1) disc = -disc;
    return disc;
}

FactoredDisc discriminant_factored(const UniPoly<Int>& p, long rho_budget_ms) {
    FactoredDisc out;
    out.value = discriminant(p);
    Factorization f = factor_int(out.value, 1000000, rho_budget_ms);
    out.factors = std::move(f.factors);
    out.composite_remainder = f.composite_remainder;
    return out;
}

UniPoly<Int> gcd_int(const UniPoly<Int>& a0, const UniPoly<Int>& b0) {
    UniPoly<Int> a = primitive_part(a0), b = primitive_part(b0);
    if (a.is_zero_poly()) return b;
    if (b.is_zero_poly()) return a;
    if (a.degree() < b.degree()) std::swap(a, b);
    while (!b.is_zero_poly()) {
        UniPoly<Int> r = primitive_part(prem(a, b));
        a = std::move(b);
        b = std::move(r);
        if (!b.is_zero_poly() && a.degree() < b.degree()) std::swap(a, b);
    }
    Int ga = gcd(content(a0), content(b0));
    return a.scaled(ga);
}

bool squarefree_check(const UniPoly<Int>& p) {
    if (p.is_zero_poly()) throw std::domain_error("squarefree check of zero");
    if (p.degree() <= 1) return true;
    UniPoly<Int> dp = p.derivative();
    // A prime with gcd = 1 certifies squarefreeness outright.
    for (size_t idx = 0, tried = 0; tried < 3; ++idx) {
        std::uint64_t q = crt_prime(idx);
        if (mod_u64(p.lc(), q) == 0) continue;
        ++tried;
        Fp F(q);
        FpVec g = fp_gcd(F, fp_from_int(F, p), fp_from_int(F, dp));
        if (fp_deg(g) == 0) return true;
    }
    return gcd_int(p, dp).degree() == 0;
}

}  // namespace rr5
