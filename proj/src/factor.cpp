#include <rr5/factor.hpp>

#include <algorithm>
#include <chrono>

namespace rr5 {

bool is_probable_prime(const Int& n) {
    return mpz_probab_prime_p(n.get_mpz_t(), 30) != 0;
}

namespace {

Int pollard_brent(const Int& n, unsigned long c0,
                  std::chrono::steady_clock::time_point deadline) {
    // Brent's cycle-finding variant of Pollard rho with batched gcds.
    Int y = 2, c = c0, m = 128;
    Int g = 1, r = 1, q = 1, x, ys;
    while (g == 1) {
        x = y;
        for (Int i = 0; i < r; ++i) y = (y * y + c) % n;
        Int k = 0;
        while (k < r && g == 1) {
            if (std::chrono::steady_clock::now() > deadline) return 0;
            ys = y;
            Int lim = std::min(m, Int(r - k));
            for (Int i = 0; i < lim; ++i) {
                y = (y * y + c) % n;
                Int d = x - y;
                if (sgn(d) < 0) d = -d;
                q = q * d % n;
            }
            mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
            k += m;
        }
        r *= 2;
    }
    if (g == n) {
        // backtrack one step at a time
        do {
            ys = (ys * ys + c) % n;
            Int d = x - ys;
            if (sgn(d) < 0) d = -d;
            mpz_gcd(g.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
        } while (g == 1);
    }
    if (g == n) return 0;
    return g;
}

void factor_rec(Int n, std::vector<Int>& out,
                std::chrono::steady_clock::time_point deadline, Int& leftover) {
    if (n == 1) return;
    if (is_probable_prime(n)) {
        out.push_back(n);
        return;
    }
    if (std::chrono::steady_clock::now() > deadline) {
        leftover *= n;
        return;
    }
    for (unsigned long c = 1;; ++c) {
        Int d = pollard_brent(n, c, deadline);
        if (d == 0) {
            if (std::chrono::steady_clock::now() > deadline) {
                leftover *= n;
                return;
            }
            continue;
        }
        factor_rec(d, out, deadline, leftover);
        factor_rec(n / d, out, deadline, leftover);
        return;
    }
}

}  // namespace

Factorization factor_int(const Int& n, unsigned long trial_bound,
                         long budget_ms) {
    Factorization f;
    f.composite_remainder = 1;
    f.sign = sgn(n);
    if (f.sign == 0) return f;
    Int m = abs(n);

    std::vector<Int> primes;
    // trial division by 2, 3, then 6k+-1
    auto strip = [&](unsigned long p) {
        while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
            primes.emplace_back(p);
            mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p);
        }
    };
    strip(2);
    strip(3);
    for (unsigned long p = 5; p <= trial_bound && m > 1; p += 6) {
        strip(p);
        strip(p + 2);
        if (Int(p) * p > m) break;
    }
    if (m > 1) {
        auto deadline = std::chrono::steady_clock::now() +
                        std::chrono::milliseconds(budget_ms);
        Int leftover = 1;
        factor_rec(m, primes, deadline, leftover);
        f.composite_remainder = leftover;
    }
    std::sort(primes.begin(), primes.end());
    for (size_t i = 0; i < primes.size();) {
        size_t j = i;
        while (j < primes.size() && primes[j] == primes[i]) ++j;
        f.factors.emplace_back(primes[i], static_cast<unsigned>(j - i));
        i = j;
    }
    return f;
}

}  // namespace rr5
