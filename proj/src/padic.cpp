#include <rr5/padic.hpp>

#include <rr5/seeds.hpp>

#include <map>
#include <mutex>

namespace rr5 {

namespace {

const Fp F5(5);

Int mod_pm(const Int& v, const Int& pm) {
    Int r;
    mpz_fdiv_r(r.get_mpz_t(), v.get_mpz_t(), pm.get_mpz_t());
    return r;
}

// quotient-and-remainder over F_p[x]
std::pair<FpVec, FpVec> fp_divrem(const Fp& F, FpVec a, const FpVec& b) {
    long db = fp_deg(b);
    if (db < 0) throw std::domain_error("fp division by zero");
    FpVec q(std::max<long>(fp_deg(a) - db + 1, 0), 0);
    std::uint64_t linv = F.inv(b.back());
    while (fp_deg(a) >= db) {
        long k = fp_deg(a) - db;
        std::uint64_t f = F.mul(a.back(), linv);
        q[k] = f;
        for (long j = 0; j <= db; ++j) a[k + j] = F.sub(a[k + j], F.mul(f, b[j]));
        fp_trim(a);
    }
    fp_trim(q);
    return {q, a};
}

FpVec fq_reduce(FpVec a, const FpVec& mod) {
    fp_rem_inplace(F5, a, mod);
    return a;
}

FpVec fq_mul(const FpVec& a, const FpVec& b, const FpVec& mod) {
    return fq_reduce(fp_mul(F5, a, b), mod);
}

FpVec fq_inv(const FpVec& a, const FpVec& mod) {
    FpVec r0 = mod, r1 = a, t0 = {}, t1 = {1};
    fp_trim(r1);
    if (r1.empty()) throw std::domain_error("residue inverse of zero");
    while (!r1.empty()) {
        auto [q, r] = fp_divrem(F5, r0, r1);
        FpVec t2 = fp_sub(F5, t0, fp_mul(F5, q, t1));
        r0 = std::move(r1);
        r1 = std::move(r);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (fp_deg(r0) != 0) throw std::domain_error("residue not invertible");
    return fp_scale(F5, t0, F5.inv(r0[0]));
}

bool fq_irreducible(const FpVec& u, int n) {
    if (n == 1) return true;
    FpVec x = {0, 1};
    // x^(5^n) == x mod u
    FpVec t = fp_powmod(F5, x, pow_ui(5, n), u);
    if (fp_sub(F5, t, x) != FpVec{}) return false;
    for (int r = 2; r <= n; ++r) {
        if (n % r) continue;
        bool prime = true;
        for (int s = 2; s * s <= r; ++s)
            if (r % s == 0) prime = false;
        if (!prime) continue;
        FpVec tr = fp_powmod(F5, x, pow_ui(5, n / r), u);
        FpVec g = fp_gcd(F5, fp_sub(F5, tr, x), u);
        if (fp_deg(g) != 0) return false;
    }
    return true;
}

long fq_index(const FpVec& a) {
    long idx = 0, p = 1;
    for (size_t i = 0; i < a.size(); ++i, p *= 5) idx += static_cast<long>(a[i]) * p;
    return idx;
}

FpVec fq_decode(long idx, int n) {
    FpVec a(n, 0);
    for (int i = 0; i < n; ++i, idx /= 5) a[i] = idx % 5;
    fp_trim(a);
    return a;
}

}  // namespace

UnramCtx::UnramCtx(int n_, int m_) : n(n_), m(m_) {
    if (n < 1) throw std::domain_error("unramified degree must be >= 1");
    if (m < 2) throw std::domain_error("precision must be >= 2");
    pm = pow_ui(5, m);
    if (n == 1) {
        u = {0, 1};
    } else {
        long total = static_cast<long>(pow_ui(5, n).get_ui());
        long found = -1;
        for (long k = 0; k < total; ++k) {
            FpVec cand(n + 1, 0);
            long t = k;
            for (int i = 0; i < n; ++i, t /= 5) cand[i] = t % 5;
            cand[n] = 1;
            if (fq_irreducible(cand, n)) {
                found = k;
                u.assign(n + 1, 0);
                t = k;
                for (int i = 0; i < n; ++i, t /= 5) u[i] = static_cast<int>(t % 5);
                u[n] = 1;
                break;
            }
        }
        if (found < 0) throw check_failure("no irreducible modulus found");
    }
    u_mod5.assign(u.begin(), u.end());
    fp_trim(u_mod5);
    // residue-field square roots, smallest root recorded
    long qq = static_cast<long>(pow_ui(5, n).get_ui());
    sqrt_table.assign(qq, -1);
    for (long t = 0; t < qq; ++t) {
        FpVec e = fq_decode(t, n);
        long s = fq_index(fq_mul(e, e, u_mod5));
        if (sqrt_table[s] < 0) sqrt_table[s] = static_cast<int32_t>(t);
    }
}

PadicU PadicU::of_int(const UnramCtx& cx, const Int& v) {
    PadicU r(cx);
    r.c[0] = mod_pm(v, cx.pm);
    return r;
}

PadicU PadicU::of_rat(const UnramCtx& cx, const Rat& v) {
    if (sgn(v) == 0) return PadicU(cx);
    Int num = v.get_num(), den = v.get_den();
    long vn = val5(num), vd = val5(den);
    if (vn - vd < 0) throw std::domain_error("rational with negative 5-valuation");
    num /= pow_ui(5, vn);
    den /= pow_ui(5, vd);
    Int deninv;
    if (!mpz_invert(deninv.get_mpz_t(), den.get_mpz_t(), cx.pm.get_mpz_t()))
        throw std::domain_error("denominator not invertible mod 5^m");
    return of_int(cx, num * deninv * pow_ui(5, vn - vd));
}

long PadicU::val() const {
    long best = ctx->m;
    for (const Int& v : c)
        if (!rr5::is_zero(v)) best = std::min(best, val5(v));
    return best;
}

PadicU PadicU::operator-() const {
    PadicU r(*ctx);
    for (size_t i = 0; i < c.size(); ++i)
        r.c[i] = rr5::is_zero(c[i]) ? Int(0) : Int(ctx->pm - c[i]);
    return r;
}

PadicU operator+(const PadicU& a, const PadicU& b) {
    PadicU r(*a.ctx);
    for (size_t i = 0; i < a.c.size(); ++i) {
        r.c[i] = a.c[i] + b.c[i];
        if (r.c[i] >= a.ctx->pm) r.c[i] -= a.ctx->pm;
    }
    return r;
}

PadicU operator-(const PadicU& a, const PadicU& b) {
    PadicU r(*a.ctx);
    for (size_t i = 0; i < a.c.size(); ++i) {
        r.c[i] = a.c[i] - b.c[i];
        if (sgn(r.c[i]) < 0) r.c[i] += a.ctx->pm;
    }
    return r;
}

PadicU operator*(const PadicU& a, const PadicU& b) {
    const UnramCtx& cx = *a.ctx;
    int n = cx.n;
    std::vector<Int> t(2 * n - 1, Int(0));
    for (int i = 0; i < n; ++i) {
        if (rr5::is_zero(a.c[i])) continue;
        for (int j = 0; j < n; ++j) {
            if (rr5::is_zero(b.c[j])) continue;
            t[i + j] += a.c[i] * b.c[j];
        }
    }
    // reduce by the monic modulus with small coefficients
    for (int i = 2 * n - 2; i >= n; --i) {
        if (rr5::is_zero(t[i])) continue;
        for (int j = 0; j < n; ++j)
            if (cx.u[j]) t[i - n + j] -= t[i] * cx.u[j];
        t[i] = 0;
    }
    PadicU r(cx);
    for (int i = 0; i < n; ++i) r.c[i] = mod_pm(t[i], cx.pm);
    return r;
}

PadicU PadicU::inverse() const {
    const UnramCtx& cx = *ctx;
    FpVec res = residue();
    if (res.empty()) throw std::domain_error("inverse of a non-unit");
    FpVec inv0 = fq_inv(res, cx.u_mod5);
    PadicU y(cx);
    for (size_t i = 0; i < inv0.size(); ++i) y.c[i] = inv0[i];
    PadicU two = of_int(cx, 2);
    int steps = 2;
    for (long t = 1; t < cx.m; t *= 2) ++steps;
    for (int k = 0; k < steps; ++k) y = y * (two - *this * y);
    if (!(*this * y == of_int(cx, 1)))
        throw check_failure("unit inverse lift failed");
    return y;
}

PadicU PadicU::pow(unsigned long e) const {
    PadicU r = of_int(*ctx, 1);
    PadicU b = *this;
    while (e) {
        if (e & 1) r = r * b;
        b = b * b;
        e >>= 1;
    }
    return r;
}

PadicU PadicU::div_pow5(long k) const {
    if (k == 0) return *this;
    Int d = pow_ui(5, k);
    PadicU r(*ctx);
    for (size_t i = 0; i < c.size(); ++i) {
        if (!mpz_divisible_p(c[i].get_mpz_t(), d.get_mpz_t()))
            throw std::domain_error("inexact division by 5^k");
        r.c[i] = c[i] / d;
    }
    return r;
}

PadicU PadicU::truncated(const UnramCtx& smaller) const {
    if (smaller.n != ctx->n || smaller.m > ctx->m)
        throw std::domain_error("invalid truncation context");
    PadicU r(smaller);
    for (size_t i = 0; i < c.size(); ++i) r.c[i] = mod_pm(c[i], smaller.pm);
    return r;
}

std::string PadicU::str() const {
    std::string s = "[";
    for (size_t i = 0; i < c.size(); ++i)
        s += (i ? "," : "") + c[i].get_str();
    return s + "]";
}

PadicU decode_residue(const UnramCtx& cx, long index) {
    PadicU r(cx);
    FpVec d = fq_decode(index, cx.n);
    for (size_t i = 0; i < d.size(); ++i) r.c[i] = d[i];
    return r;
}

PadicU teichmuller(const UnramCtx& cx, const FpVec& residue) {
    PadicU a(cx);
    for (size_t i = 0; i < residue.size(); ++i) a.c[i] = residue[i];
    unsigned long q = pow_ui(5, cx.n).get_ui();
    for (int it = 0; it < cx.m + 4; ++it) {
        PadicU b = a.pow(q);
        if (b == a) return a;
        a = std::move(b);
    }
    throw check_failure("teichmuller lift did not stabilize");
}

// ---------------------------------------------------------------- PadicR

PadicR PadicR::of_quadrat(const UnramCtx& cx, const QuadRat& v) {
    return {PadicU::of_rat(cx, v.a), PadicU::of_rat(cx, v.b)};
}

long PadicR::val_pi() const {
    long va = a.is_zero() ? 2 * ctx().m : 2 * a.val();
    long vb = b.is_zero() ? 2 * ctx().m : 2 * b.val() + 1;
    return std::min(va, vb);
}

PadicR operator*(const PadicR& x, const PadicR& y) {
    PadicU five = PadicU::of_int(x.ctx(), 5);
    return {x.a * y.a + five * (x.b * y.b), x.a * y.b + x.b * y.a};
}

PadicR PadicR::inverse() const {
    PadicU nrm = a * a - PadicU::of_int(ctx(), 5) * (b * b);
    PadicU ninv = nrm.inverse();
    return {a * ninv, (-b) * ninv};
}

PadicR PadicR::pow(unsigned long e) const {
    PadicR r = of_u(PadicU::of_int(ctx(), 1));
    PadicR base = *this;
    while (e) {
        if (e & 1) r = r * base;
        base = base * base;
        e >>= 1;
    }
    return r;
}

PadicR PadicR::div(const PadicR& den) const {
    long v = den.val_pi();
    if (v == 0) return *this * den.inverse();
    if (val_pi() < v) throw std::domain_error("non-unit denominator dominates numerator");
    auto strip = [](const PadicR& x, long pis) {
        // divide by pi^pis
        PadicR r = x;
        long fives = pis / 2;
        if (fives) {
            r.a = r.a.div_pow5(fives);
            r.b = r.b.div_pow5(fives);
        }
        if (pis & 1) {
            // (A + B sqrt5)/sqrt5 = B + (A/5) sqrt5
            PadicU na = r.b;
            PadicU nb = r.a.div_pow5(1);
            r.a = std::move(na);
            r.b = std::move(nb);
        }
        return r;
    };
    PadicR num2 = strip(*this, v);
    PadicR den2 = strip(den, v);
    return num2 * den2.inverse();
}

std::string PadicR::str() const { return a.str() + " + " + b.str() + "*sqrt5"; }

std::optional<PadicR> sqrt_in_ramified(const PadicU& c) {
    const UnramCtx& cx = *c.ctx;
    if (c.is_zero()) return PadicR(cx);
    long v = c.val();
    PadicU u = c.div_pow5(v);
    int32_t s0 = cx.sqrt_table[u.residue_index()];
    if (s0 < 0) return std::nullopt;
    PadicU y = decode_residue(cx, s0);
    PadicU inv2 = PadicU::of_rat(cx, Rat(1, 2));
    int steps = 2;
    for (long t = 1; t < cx.m; t *= 2) ++steps;
    for (int k = 0; k < steps; ++k) y = (y + u * y.inverse()) * inv2;
    if (!(y * y == u)) throw check_failure("square-root lift failed");
    PadicU scale = PadicU::of_int(cx, pow_ui(5, v / 2));
    if (v % 2 == 0) return PadicR::of_u(y * scale);
    return PadicR(PadicU(cx), y * scale);
}

// ---------------------------------------------------------------- t5

namespace {

// series coefficients b_k = 5^k a_k (sqrt5)^(k-2), split into the rational
// part and the sqrt5 part; cached per truncation length
struct T5Coeffs {
    std::vector<std::pair<Rat, Rat>> b;  // index k-2
};

long val5_rat(const Rat& r) {
    if (sgn(r) == 0) return 1 << 20;
    return val5(Int(r.get_num())) - val5(Int(r.get_den()));
}

std::shared_ptr<const T5Coeffs> t5_coeffs(long K) {
    static std::map<long, std::shared_ptr<const T5Coeffs>> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lk(mtx);
    auto it = cache.find(K);
    if (it != cache.end()) return it->second;
    auto out = std::make_shared<T5Coeffs>();
    Int kfact = 1;
    std::array<Int, 5> prod = {1, 1, 1, 1, 1};  // prod_{i<k} (j - 5i), j = 1..4
    for (long k = 1; k <= K; ++k) {
        kfact *= k;
        for (int j = 1; j <= 4; ++j) prod[j] *= Int(j) - 5 * (k - 1);
        if (k < 2) continue;
        // a_k = sum_j prod_j / (5^k k!)
        Rat ak(0);
        Int den = pow_ui(5, k) * kfact;
        for (int j = 1; j <= 4; ++j) {
            Rat t(prod[j], den);
            t.canonicalize();
            ak += t;
        }
        Rat bk = ak * Rat(pow_ui(5, k));
        Rat rpart(0), spart(0);
        if (k % 2 == 0) {
            rpart = bk * Rat(pow_ui(5, (k - 2) / 2));
            if (val5_rat(rpart) < 1)
                throw check_failure("series coefficient not divisible by 5");
        } else {
            spart = bk * Rat(pow_ui(5, (k - 3) / 2));
            if (val5_rat(spart) < 1)
                throw check_failure("series coefficient not divisible by 5");
        }
        out->b.emplace_back(rpart, spart);
    }
    cache[K] = out;
    return out;
}

long residue_of_two(const UnramCtx&) { return 2; }

}  // namespace

PadicR t5(const PadicR& x) {
    const UnramCtx& cx = x.ctx();
    if (x.residue_index() == residue_of_two(cx))
        throw std::domain_error("t5: argument is 2 mod sqrt5");
    PadicR x5 = x.pow(5);
    PadicR e5 = PadicR::of_quadrat(cx, QuadRat::eps5());
    PadicR w = (x5 - e5).inverse();
    long K = std::max<long>(8, 4 * cx.m + 8);
    auto coeffs = t5_coeffs(K);
    PadicR acc(cx);
    for (long k = K; k >= 2; --k) {
        const auto& [rp, sp] = coeffs->b[k - 2];
        PadicR bk{PadicU::of_rat(cx, rp), PadicU::of_rat(cx, sp)};
        acc = acc * w + bk;
    }
    acc = acc * w;
    PadicR out = x5 + PadicR::of_u(PadicU::of_int(cx, 5)) + acc;
    if (out.residue_index() == residue_of_two(cx))
        throw check_failure("t5 image left the domain");
    return out;
}

PadicR eval_bipoly(const BiPoly<Int>& p, const PadicR& x, const PadicR& y) {
    const UnramCtx& cx = x.ctx();
    PadicR acc(cx);
    for (size_t i = p.c.size(); i-- > 0;) {
        PadicR row(cx);
        for (size_t j = p.c[i].size(); j-- > 0;) {
            row = row * y;
            if (!is_zero(p.c[i][j]))
                row = row + PadicR::of_u(PadicU::of_int(cx, p.c[i][j]));
        }
        acc = acc * x + row;
    }
    return acc;
}

PadicR solve_g(const PadicR& x) {
    const UnramCtx& cx = x.ctx();
    if (x.residue_index() == residue_of_two(cx))
        throw std::domain_error("solve_g: argument is 2 mod sqrt5");
    static const BiPoly<Int> g = seeds::g();
    static const BiPoly<Int> gy = [] {
        BiPoly<Int> d;
        BiPoly<Int> src = seeds::g();
        for (size_t i = 0; i < src.c.size(); ++i)
            for (size_t j = 1; j < src.c[i].size(); ++j)
                if (!is_zero(src.c[i][j])) d.set(i, j - 1, Int(long(j)) * src.c[i][j]);
        return d;
    }();
    PadicR y = x.pow(5);
    int steps = 3;
    for (long t = 1; t < cx.m; t *= 2) ++steps;
    for (int k = 0; k < steps; ++k) {
        PadicR fy = eval_bipoly(g, x, y);
        if (fy.is_zero()) break;
        PadicR dy = eval_bipoly(gy, x, y);
        y = y - fy.div(dy);
    }
    if (!eval_bipoly(g, x, y).is_zero())
        throw check_failure("hensel iteration for g did not converge");
    return y;
}

PadicR t_mobius(const PadicR& x) {
    const UnramCtx& cx = x.ctx();
    PadicR one_s5{PadicU::of_int(cx, 1), PadicU::of_int(cx, 1)};  // 1 + sqrt5
    PadicR two = PadicR::of_u(PadicU::of_int(cx, 2));
    PadicR den = two * x + one_s5;
    if (den.residue_index() == 0)
        throw std::domain_error("t_mobius: denominator is not a unit");
    PadicR num = two - one_s5 * x;
    return num * den.inverse();
}

PadicU ts5(const PadicU& z) {
    const UnramCtx& cx = *z.ctx;
    if (z.residue_index() == 4)  // -1 mod sqrt5: both preimages reduce to 2
        throw std::domain_error("ts5: argument is -1 mod 5");
    PadicU c = z * z + PadicU::of_int(cx, 4);
    auto s = sqrt_in_ramified(c);
    if (!s) throw std::domain_error("ts5: argument outside the image domain");
    PadicR zr = PadicR::of_u(z);
    PadicR inv2 = PadicR::of_u(PadicU::of_rat(cx, Rat(1, 2)));
    PadicR ep = (zr + *s) * inv2;
    PadicR em = (zr - *s) * inv2;
    PadicR out = t5(ep) + t5(em);
    if (!out.b.is_zero()) throw check_failure("ts5 image is not unramified");
    return out.a;
}

// ------------------------------------------------------- periodic points

namespace {

long frob_index(const UnramCtx& cx, long idx) {
    FpVec e = fq_decode(idx, cx.n);
    FpVec f = fq_reduce(fp_powmod(F5, e, Int(5), cx.u_mod5), cx.u_mod5);
    return fq_index(f);
}

}  // namespace

PadicR periodic_point_at(const UnramCtx& cx, long residue_index) {
    if (residue_index == 2)
        throw std::domain_error("residue 2 is outside the iteration domain");
    long d = 1;
    for (long j = frob_index(cx, residue_index); j != residue_index;
         j = frob_index(cx, j))
        ++d;
    PadicR z = PadicR::of_u(teichmuller(cx, fq_decode(residue_index, cx.n)));
    for (int it = 0; it < cx.m + 16; ++it) {
        PadicR znew = z;
        for (long k = 0; k < d; ++k) znew = t5(znew);
        if (znew == z) return z;
        z = std::move(znew);
    }
    throw precision_error("periodic point iteration did not converge");
}

std::vector<Orbit> periodic_points(const UnramCtx& cx) {
    long q = cx.q();
    std::vector<char> seen(q, 0);
    std::vector<Orbit> out;
    for (long idx = 0; idx < q; ++idx) {
        if (seen[idx]) continue;
        if (idx == 2) {
            seen[idx] = 1;
            continue;
        }
        std::vector<long> cycle{idx};
        for (long j = frob_index(cx, idx); j != idx; j = frob_index(cx, j))
            cycle.push_back(j);
        for (long j : cycle) seen[j] = 1;
        PadicR z = periodic_point_at(cx, idx);
        Orbit o;
        o.period = static_cast<int>(cycle.size());
        o.points.push_back(z);
        for (size_t k = 1; k < cycle.size(); ++k) o.points.push_back(t5(o.points.back()));
        // closure and residue-cycle agreement
        if (!(t5(o.points.back()) == o.points.front()))
            throw check_failure("orbit closure failed");
        for (size_t k = 0; k < cycle.size(); ++k) {
            if (o.points[k].residue_index() != cycle[k])
                throw check_failure("orbit residues do not follow Frobenius");
            o.residues.push_back(fq_decode(cycle[k], cx.n));
        }
        out.push_back(std::move(o));
    }
    return out;
}

Orbit ramified_companion(const Orbit& o) {
    Orbit r;
    r.period = o.period;
    r.ramified = true;
    for (const PadicR& p : o.points) {
        PadicR img = t_mobius(p);
        r.residues.push_back(img.residue());
        r.points.push_back(std::move(img));
    }
    return r;
}

long fq_frobenius_index(const UnramCtx& cx, long idx) { return frob_index(cx, idx); }

long fq_frobenius_cycle_len(const UnramCtx& cx, long idx) {
    long d = 1;
    for (long j = frob_index(cx, idx); j != idx; j = frob_index(cx, j)) ++d;
    return d;
}

long fq_pow_index(const UnramCtx& cx, long idx, const Int& e) {
    FpVec b = fq_decode(idx, cx.n);
    return fq_index(fq_reduce(fp_powmod(F5, b, e, cx.u_mod5), cx.u_mod5));
}

long fq_eval_mod5_at(const UnramCtx& cx, const std::vector<std::uint64_t>& coeffs_mod5,
                     long idx) {
    FpVec x = fq_decode(idx, cx.n);
    FpVec acc;
    for (size_t i = coeffs_mod5.size(); i-- > 0;) {
        acc = fq_mul(acc, x, cx.u_mod5);
        if (coeffs_mod5[i]) {
            if (acc.empty()) acc.resize(1, 0);
            acc[0] = F5.add(acc[0], coeffs_mod5[i]);
            fp_trim(acc);
        }
    }
    return fq_index(acc);
}

long fq_eval_int_poly_at(const UnramCtx& cx, const UniPoly<Int>& p, long idx) {
    FpVec x = fq_decode(idx, cx.n);
    FpVec acc;
    for (size_t i = p.c.size(); i-- > 0;) {
        acc = fq_mul(acc, x, cx.u_mod5);
        std::uint64_t c0 = mod_u64(p.c[i], 5);
        if (c0) {
            if (acc.empty()) acc.resize(1, 0);
            acc[0] = F5.add(acc[0], c0);
            fp_trim(acc);
        }
    }
    return fq_index(acc);
}

long frobenius_trace_of_j(const UnramCtx& cx, long j_index) {
    if (j_index == 0 || j_index == 3)  // j = 0 or j = 1728 in the residue field
        throw std::domain_error("degenerate j residue for point counting");
    long q = cx.q();
    FpVec j = fq_decode(j_index, cx.n);
    FpVec denom = j;
    // 1728 - j
    if (denom.empty()) denom.resize(1, 0);
    denom[0] = F5.sub(3, denom[0]);
    for (size_t i = 1; i < denom.size(); ++i) denom[i] = F5.neg(denom[i]);
    fp_trim(denom);
    FpVec c = fq_mul(j, fq_inv(denom, cx.u_mod5), cx.u_mod5);
    FpVec a4 = fp_scale(F5, c, 3), a6 = fp_scale(F5, c, 2);
    long sum = 0;
    for (long xi = 0; xi < q; ++xi) {
        FpVec x = fq_decode(xi, cx.n);
        FpVec t = fq_mul(fq_mul(x, x, cx.u_mod5), x, cx.u_mod5);
        t = fp_add(F5, t, fq_mul(a4, x, cx.u_mod5));
        t = fp_add(F5, t, a6);
        long ti = fq_index(t);
        if (ti == 0) continue;
        sum += (cx.sqrt_table[ti] >= 0) ? 1 : -1;
    }
    long trace = -sum;
    // Hasse bound sanity
    if (static_cast<double>(trace) * trace > 4.0 * static_cast<double>(q) + 1)
        throw check_failure("point count violated the Hasse bound");
    return trace;
}

PadicU lift_simple_root(const UnramCtx& cx, const UniPoly<Int>& p, long residue_index) {
    UniPoly<Int> dp = p.derivative();
    if (fq_eval_int_poly_at(cx, p, residue_index) != 0 ||
        fq_eval_int_poly_at(cx, dp, residue_index) == 0)
        throw std::domain_error("residue is not a simple root");
    PadicU x = decode_residue(cx, residue_index);
    auto ev = [&](const UniPoly<Int>& f, const PadicU& at) {
        PadicU acc(cx);
        for (size_t i = f.c.size(); i-- > 0;)
            acc = acc * at + PadicU::of_int(cx, f.c[i]);
        return acc;
    };
    int steps = 3;
    for (long t = 1; t < cx.m; t *= 2) ++steps;
    for (int k = 0; k < steps; ++k) x = x - ev(p, x) * ev(dp, x).inverse();
    if (!ev(p, x).is_zero()) throw check_failure("simple-root lift failed");
    return x;
}

PadicR j_eta(const PadicR& x) {
    const UnramCtx& cx = x.ctx();
    PadicR b = x.pow(5);
    auto ev = [&](std::initializer_list<long> cs) {
        PadicR acc(cx);
        for (long v : cs) {
            acc = acc * b;
            if (v) acc = acc + PadicR::of_u(PadicU::of_int(cx, v));
        }
        return acc;
    };
    PadicR n1 = ev({1, 12, 14, -12, 1});
    PadicR num = n1 * n1 * n1;
    PadicR den = b.pow(5) * ev({-1, -11, 1});
    return num.div(den);
}

}  // namespace rr5
