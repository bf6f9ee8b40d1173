#include <rr5/tower.hpp>

#include <rr5/crt.hpp>

#include <future>
#include <map>
#include <mutex>
#include <thread>

namespace rr5 {

std::string tower_kind_name(TowerKind k) {
    switch (k) {
        case TowerKind::R: return "R";
        case TowerKind::S: return "S";
        case TowerKind::Rtilde: return "Rtilde";
        case TowerKind::P: return "P";
        case TowerKind::Q: return "Q";
    }
    return "?";
}

namespace {

// Bivariate polynomial reduced mod p, stored as coefficients in the second
// variable, each a polynomial in the first:  B(t, y) = sum_j bj(t) y^j.
struct FpBivar {
    std::vector<FpVec> by_y;   // index j: coefficient of y^j, poly in t
    std::vector<FpVec> by_t;   // index i: coefficient of t^i, poly in y
    FpVec lc_t;                // leading coefficient w.r.t. t, poly in y

    FpBivar(const Fp& F, const BiPoly<Int>& b) {
        long dt = b.deg_x(), dy = b.deg_y();
        by_y.assign(dy + 1, {});
        for (long j = 0; j <= dy; ++j) {
            FpVec v(dt + 1, 0);
            for (long i = 0; i <= dt; ++i) v[i] = mod_u64(b.coeff(i, j), F.p);
            fp_trim(v);
            by_y[j] = std::move(v);
        }
        by_t.assign(dt + 1, {});
        for (long i = 0; i <= dt; ++i) {
            FpVec v(dy + 1, 0);
            for (long j = 0; j <= dy; ++j) v[j] = mod_u64(b.coeff(i, j), F.p);
            fp_trim(v);
            by_t[i] = std::move(v);
        }
        lc_t = by_t.back();
    }

    // B(t0, y) as univariate in y.
    FpVec eval_t(const Fp& F, std::uint64_t t0) const {
        FpVec out(by_y.size(), 0);
        for (size_t j = 0; j < by_y.size(); ++j) out[j] = fp_eval(F, by_y[j], t0);
        fp_trim(out);
        return out;
    }
    // B(t, y0) as univariate in t.
    FpVec eval_y(const Fp& F, std::uint64_t y0) const {
        FpVec out(by_t.size(), 0);
        for (size_t i = 0; i < by_t.size(); ++i) out[i] = fp_eval(F, by_t[i], y0);
        fp_trim(out);
        return out;
    }
};

// The elimination chain, specialized at x = a, carried to depth `levels`:
// C_1(y) = B(a, y);  C_k(y) = Res_t(C_{k-1}(t), B(t, y)).
// Degrees in t never drop (the chains are monic up to sign in their second
// variable), so the only care needed is skipping interpolation points that
// kill lc_t(B).
FpVec chain_specialized(const Fp& F, const FpBivar& B, std::uint64_t a,
                        int levels) {
    FpVec c = B.eval_t(F, a);
    long expected = fp_deg(c);
    for (int k = 2; k <= levels; ++k) {
        long target = expected * 5;
        FpVec xs, ys;
        std::uint64_t b = 0;
        while (static_cast<long>(xs.size()) < target + 2) {
            if (b >= F.p) throw resource_error("prime exhausted in chain interpolation");
            if (fp_eval(F, B.lc_t, b) == 0) {
                ++b;
                continue;
            }
            xs.push_back(b);
            ys.push_back(fp_resultant(F, c, B.eval_y(F, b)));
            ++b;
        }
        std::uint64_t vx = xs.back(), vy = ys.back();
        xs.pop_back();
        ys.pop_back();
        FpVec next = fp_interpolate(F, xs, ys);
        if (fp_eval(F, next, vx) != vy)
            throw check_failure("tower chain interpolation verification failed");
        c = std::move(next);
        expected = target;
        if (fp_deg(c) > expected)
            throw check_failure("tower chain degree overflow");
    }
    return c;
}

// Residues of the coefficients of the degree <= out_deg diagonal, mod p.
// `fin` is the bivariate closing the chain (g or h again, or g1).
std::vector<std::uint64_t> diagonal_row(std::uint64_t p, const BiPoly<Int>& base,
                                        const BiPoly<Int>& fin, int n,
                                        long out_deg) {
    Fp F(p);
    FpBivar B(F, base), Bf(F, fin);
    FpVec xs, ys;
    std::uint64_t a = 0;
    while (static_cast<long>(xs.size()) < out_deg + 2) {
        if (a >= F.p) throw resource_error("prime exhausted in diagonal interpolation");
        if (n >= 2 && fp_eval(F, Bf.lc_t, a) == 0) {
            ++a;
            continue;
        }
        std::uint64_t val;
        if (n == 1) {
            FpVec c = Bf.eval_t(F, a);
            val = fp_eval(F, c, a);
        } else {
            FpVec c = chain_specialized(F, B, a, n - 1);
            val = fp_resultant(F, c, Bf.eval_y(F, a));
        }
        xs.push_back(a);
        ys.push_back(val);
        ++a;
    }
    std::uint64_t vx = xs.back(), vy = ys.back();
    xs.pop_back();
    ys.pop_back();
    FpVec interp = fp_interpolate(F, xs, ys);
    if (fp_eval(F, interp, vx) != vy)
        throw check_failure("tower diagonal interpolation verification failed");
    std::vector<std::uint64_t> row(out_deg + 1, 0);
    for (size_t i = 0; i < interp.size(); ++i) row[i] = interp[i];
    return row;
}

UniPoly<Int> build_diagonal(const BiPoly<Int>& base, const BiPoly<Int>& fin,
                            int n, long out_deg, size_t* primes_used) {
    CrtAccum acc;
    const size_t hard_cap = 4096;
    unsigned width = std::max(1u, std::thread::hardware_concurrency());
    size_t idx = 0;
    while (acc.stable < 2) {
        size_t batch = (acc.primes_used == 0) ? std::min<unsigned>(width, 4) : width;
        std::vector<std::uint64_t> ps;
        for (size_t k = 0; k < batch; ++k) ps.push_back(crt_prime(idx++));
        std::vector<std::future<std::vector<std::uint64_t>>> jobs;
        for (std::uint64_t p : ps)
            jobs.push_back(std::async(std::launch::async, [&, p] {
                return diagonal_row(p, base, fin, n, out_deg);
            }));
        for (size_t k = 0; k < ps.size(); ++k) {
            auto row = jobs[k].get();
            if (acc.stable < 2) acc.add(row, ps[k]);
        }
        if (acc.primes_used > hard_cap)
            throw resource_error("tower CRT failed to stabilize");
    }
    if (primes_used) *primes_used = acc.primes_used;
    UniPoly<Int> out{std::move(acc.vals)};
    out.trim();
    return out;
}

std::mutex cache_mtx;
std::map<std::pair<int, int>, TowerPoly>& cache() {
    static std::map<std::pair<int, int>, TowerPoly> c;
    return c;
}

TowerPoly build_rs(TowerKind kind, int n, const TowerCaps& caps) {
    bool tilde = kind == TowerKind::Rtilde;
    int cap = tilde ? caps.rtilde : caps.rs;
    if (n < 1 || n > cap)
        throw resource_error(tower_kind_name(kind) + " index " + std::to_string(n) +
                             " outside cap " + std::to_string(cap));
    {
        std::lock_guard<std::mutex> lk(cache_mtx);
        auto it = cache().find({static_cast<int>(kind), n});
        if (it != cache().end()) return it->second;
    }
    BiPoly<Int> base = (kind == TowerKind::S) ? seeds::h() : seeds::g();
    BiPoly<Int> fin = tilde ? seeds::g1() : base;
    long out_deg = tilde ? 2 * static_cast<long>(pow_ui(5, n).get_ui())
                         : 2 * static_cast<long>(pow_ui(5, n).get_ui()) - 1;
    size_t primes = 0;
    TowerPoly t;
    t.kind = kind;
    t.n = n;
    t.poly = build_diagonal(base, fin, n, out_deg, &primes);
    t.provenance = tower_kind_name(kind) + "_" + std::to_string(n) +
                   ": " + std::to_string(n - 1) + "-fold resultant chain over " +
                   (kind == TowerKind::S ? "h" : "g") +
                   (tilde ? " closed by g1" : "") +
                   ", modular diagonal, CRT primes=" + std::to_string(primes);
    {
        std::lock_guard<std::mutex> lk(cache_mtx);
        cache().emplace(std::pair<int, int>{static_cast<int>(kind), n}, t);
    }
    return t;
}

TowerPoly build_quotient(TowerKind kind, int n, const TowerCaps& caps) {
    TowerKind basek = (kind == TowerKind::P) ? TowerKind::R : TowerKind::S;
    if (n < 1) throw std::domain_error("quotient index must be positive");
    UniPoly<Int> num = UniPoly<Int>::constant(Int(1));
    UniPoly<Int> den = UniPoly<Int>::constant(Int(1));
    std::string prov;
    for (int k : divisors(n)) {
        int mu = mobius(n / k);
        if (mu == 0) continue;
        TowerPoly rk = build_rs(basek, k, caps);
        if (mu > 0)
            num *= rk.poly;
        else
            den *= rk.poly;
        prov += (prov.empty() ? "" : " ") + tower_kind_name(basek) +
                std::to_string(k) + "^" + std::to_string(mu);
    }
    TowerPoly t;
    t.kind = kind;
    t.n = n;
    t.poly = exact_divide(num, den);  // throws if the tower invariant breaks
    t.provenance = tower_kind_name(kind) + "_" + std::to_string(n) +
                   " = " + prov + " (exact division)";
    return t;
}

}  // namespace

TowerPoly build_R(int n, const TowerCaps& caps) { return build_rs(TowerKind::R, n, caps); }
TowerPoly build_S(int n, const TowerCaps& caps) { return build_rs(TowerKind::S, n, caps); }
TowerPoly build_tildeR(int n, const TowerCaps& caps) {
    return build_rs(TowerKind::Rtilde, n, caps);
}
TowerPoly build_P(int n, const TowerCaps& caps) {
    return build_quotient(TowerKind::P, n, caps);
}
TowerPoly build_Q(int n, const TowerCaps& caps) {
    return build_quotient(TowerKind::Q, n, caps);
}

bool congruence_check(TowerKind kind, int n, const UniPoly<Int>& poly) {
    if (kind != TowerKind::R && kind != TowerKind::S)
        throw std::domain_error("congruence check applies to R and S towers");
    Fp F(5);
    FpVec got = fp_from_int(F, poly);
    unsigned long q = pow_ui(5, n).get_ui();
    // (x+c)^(5^n - 1)
    FpVec lin = (kind == TowerKind::R) ? FpVec{3, 1} : FpVec{1, 1};
    FpVec pw{1};
    {
        unsigned long e = q - 1;
        FpVec b = lin;
        while (e) {
            if (e & 1) pw = fp_mul(F, pw, b);
            b = fp_mul(F, b, b);
            e >>= 1;
        }
    }
    // (x^(5^n) - x)
    FpVec frob(q + 1, 0);
    frob[q] = 1;
    frob[1] = 4;  // -1 mod 5
    FpVec rhs = fp_mul(F, pw, frob);
    std::uint64_t scale;
    if (kind == TowerKind::R)
        scale = (n % 2 == 1) ? 1 : 4;  // (-1)^(n-1)
    else
        scale = 4;
    rhs = fp_scale(F, rhs, scale);
    return got == rhs;
}

}  // namespace rr5
