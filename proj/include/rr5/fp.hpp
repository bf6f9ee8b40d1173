#ifndef RR5_FP_HPP
#define RR5_FP_HPP

#include <rr5/poly.hpp>

#include <cstdint>

namespace rr5 {

// Arithmetic mod a word-sized prime.  Everything the CRT resultant path
// needs: remainder sequences, interpolation, resultants.
struct Fp {
    std::uint64_t p;

    explicit Fp(std::uint64_t prime) : p(prime) {}

    std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
        std::uint64_t s = a + b;
        if (s >= p || s < a) s -= p;
        return s;
    }
    std::uint64_t sub(std::uint64_t a, std::uint64_t b) const {
        return a >= b ? a - b : a + (p - b);
    }
    std::uint64_t neg(std::uint64_t a) const { return a ? p - a : 0; }
    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const {
        return static_cast<std::uint64_t>(
            (static_cast<unsigned __int128>(a) * b) % p);
    }
    std::uint64_t pow(std::uint64_t a, std::uint64_t e) const {
        std::uint64_t r = 1;
        while (e) {
            if (e & 1) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }
    std::uint64_t inv(std::uint64_t a) const {
        if (a == 0) throw std::domain_error("inverse of 0 mod p");
        return pow(a, p - 2);
    }
};

// Polynomial over F_p, c[i] = coefficient of x^i, trimmed.
using FpVec = std::vector<std::uint64_t>;

inline void fp_trim(FpVec& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}
inline long fp_deg(const FpVec& a) { return static_cast<long>(a.size()) - 1; }

inline FpVec fp_add(const Fp& F, FpVec a, const FpVec& b) {
    if (b.size() > a.size()) a.resize(b.size(), 0);
    for (size_t i = 0; i < b.size(); ++i) a[i] = F.add(a[i], b[i]);
    fp_trim(a);
    return a;
}

inline FpVec fp_sub(const Fp& F, FpVec a, const FpVec& b) {
    if (b.size() > a.size()) a.resize(b.size(), 0);
    for (size_t i = 0; i < b.size(); ++i) a[i] = F.sub(a[i], b[i]);
    fp_trim(a);
    return a;
}

inline FpVec fp_mul(const Fp& F, const FpVec& a, const FpVec& b) {
    if (a.empty() || b.empty()) return {};
    FpVec r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (!a[i]) continue;
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] = F.add(r[i + j], F.mul(a[i], b[j]));
    }
    fp_trim(r);
    return r;
}

inline FpVec fp_scale(const Fp& F, FpVec a, std::uint64_t s) {
    for (auto& v : a) v = F.mul(v, s);
    fp_trim(a);
    return a;
}

inline std::uint64_t fp_eval(const Fp& F, const FpVec& a, std::uint64_t x) {
    std::uint64_t r = 0;
    for (size_t i = a.size(); i-- > 0;) r = F.add(F.mul(r, x), a[i]);
    return r;
}

// In-place remainder a mod b; b must be nonzero.
inline void fp_rem_inplace(const Fp& F, FpVec& a, const FpVec& b) {
    long db = fp_deg(b);
    if (db < 0) throw std::domain_error("fp remainder by zero");
    std::uint64_t linv = F.inv(b.back());
    while (fp_deg(a) >= db) {
        long k = fp_deg(a) - db;
        std::uint64_t f = F.mul(a.back(), linv);
        for (long j = 0; j <= db; ++j)
            a[k + j] = F.sub(a[k + j], F.mul(f, b[j]));
        fp_trim(a);
    }
}

inline FpVec fp_gcd(const Fp& F, FpVec a, FpVec b) {
    fp_trim(a);
    fp_trim(b);
    while (!b.empty()) {
        fp_rem_inplace(F, a, b);
        std::swap(a, b);
    }
    if (!a.empty()) a = fp_scale(F, a, F.inv(a.back()));
    return a;
}

// Sylvester resultant of a and b over F_p via the Euclidean remainder
// sequence, keeping track of the sign/leading-coefficient factors so the
// result matches the determinant definition exactly.
inline std::uint64_t fp_resultant(const Fp& F, FpVec a, FpVec b) {
    fp_trim(a);
    fp_trim(b);
    if (a.empty() || b.empty()) return 0;
    std::uint64_t res = 1;
    bool negate = false;
    while (true) {
        long da = fp_deg(a), db = fp_deg(b);
        if (db == 0) {
            res = F.mul(res, F.pow(b[0], da));
            break;
        }
        FpVec r = a;
        fp_rem_inplace(F, r, b);
        long dr = fp_deg(r);
        if (dr < 0) return 0;  // common factor
        // res(a,b) = (-1)^(da db) lc(b)^(da - dr) res(b, r)
        if ((da & 1) && (db & 1)) negate = !negate;
        res = F.mul(res, F.pow(b.back(), static_cast<std::uint64_t>(da - dr)));
        a = std::move(b);
        b = std::move(r);
    }
    return negate ? F.neg(res) : res;
}

// Newton interpolation through (xs[i], ys[i]); xs must be distinct.
inline FpVec fp_interpolate(const Fp& F, const FpVec& xs, const FpVec& ys) {
    size_t n = xs.size();
    if (ys.size() != n) throw std::domain_error("interpolation size mismatch");
    std::vector<std::uint64_t> dd(ys);  // divided differences, built in place
    for (size_t k = 1; k < n; ++k)
        for (size_t i = n - 1; i >= k; --i) {
            std::uint64_t num = F.sub(dd[i], dd[i - 1]);
            std::uint64_t den = F.sub(xs[i], xs[i - k]);
            dd[i] = F.mul(num, F.inv(den));
            if (i == k) break;
        }
    // Horner-style expansion of the Newton form.
    FpVec poly;
    for (size_t i = n; i-- > 0;) {
        // poly = poly * (x - xs[i]) + dd[i]
        FpVec next(poly.size() + 1, 0);
        for (size_t j = 0; j < poly.size(); ++j) {
            next[j + 1] = F.add(next[j + 1], poly[j]);
            next[j] = F.sub(next[j], F.mul(poly[j], xs[i]));
        }
        if (next.empty()) next.resize(1, 0);
        next[0] = F.add(next[0], dd[i]);
        fp_trim(next);
        poly = std::move(next);
    }
    return poly;
}

inline FpVec fp_from_int(const Fp& F, const UniPoly<Int>& p) {
    FpVec r(p.c.size());
    for (size_t i = 0; i < p.c.size(); ++i) r[i] = mod_u64(p.c[i], F.p);
    fp_trim(r);
    return r;
}

inline FpVec fp_powmod(const Fp& F, FpVec base, Int e, const FpVec& mod) {
    FpVec r{1};
    fp_rem_inplace(F, base, mod);
    while (sgn(e) > 0) {
        if (mpz_odd_p(e.get_mpz_t())) {
            r = fp_mul(F, r, base);
            fp_rem_inplace(F, r, mod);
        }
        base = fp_mul(F, base, base);
        fp_rem_inplace(F, base, mod);
        e >>= 1;
    }
    return r;
}

// Deterministic list of ~62-bit primes for CRT work.
std::uint64_t crt_prime(size_t index);

}  // namespace rr5

#endif
