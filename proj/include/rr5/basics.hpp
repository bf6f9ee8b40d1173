#ifndef RR5_BASICS_HPP
#define RR5_BASICS_HPP

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace rr5 {

// Arbitrary-precision integers and rationals.  Rationals are kept
// canonical (lowest terms, positive denominator) by mpq_class itself.
using Int = mpz_class;
using Rat = mpq_class;

struct precision_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct resource_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct inexact_division : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct identification_failure : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct check_failure : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct store_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline Int pow_int(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline Int pow_ui(unsigned long base, unsigned long e) {
    Int r;
    mpz_ui_pow_ui(r.get_mpz_t(), base, e);
    return r;
}

inline Rat pow_rat(const Rat& base, unsigned long e) {
    Rat r = 1;
    Rat b = base;
    unsigned long k = e;
    while (k) {
        if (k & 1) r *= b;
        b *= b;
        k >>= 1;
    }
    return r;
}

inline bool is_zero(const Int& v) { return sgn(v) == 0; }
inline bool is_zero(const Rat& v) { return sgn(v) == 0; }

// Remainder of v mod p in [0, p), p a word-sized modulus.
inline std::uint64_t mod_u64(const Int& v, std::uint64_t p) {
    return mpz_fdiv_ui(v.get_mpz_t(), p);
}

// v reduced into the symmetric window (-m/2, m/2].
inline Int symmetric_mod(const Int& v, const Int& m) {
    Int r = v % m;
    if (r < 0) r += m;
    if (2 * r > m) r -= m;
    return r;
}

// 5-adic valuation; v must be nonzero.
inline long val5(const Int& v) {
    if (is_zero(v)) throw std::domain_error("val5 of zero");
    Int t = v;
    long k = 0;
    while (mpz_divisible_ui_p(t.get_mpz_t(), 5)) {
        t /= 5;
        ++k;
    }
    return k;
}

inline long val_p(const Int& v, const Int& p) {
    if (is_zero(v)) throw std::domain_error("val_p of zero");
    Int t = v;
    long k = 0;
    while (mpz_divisible_p(t.get_mpz_t(), p.get_mpz_t())) {
        t /= p;
        ++k;
    }
    return k;
}

inline int mobius(int n) {
    if (n <= 0) throw std::domain_error("mobius of nonpositive");
    int mu = 1;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            n /= p;
            if (n % p == 0) return 0;
            mu = -mu;
        }
    }
    if (n > 1) mu = -mu;
    return mu;
}

inline std::vector<int> divisors(int n) {
    std::vector<int> d;
    for (int k = 1; k <= n; ++k)
        if (n % k == 0) d.push_back(k);
    return d;
}

}  // namespace rr5

#endif
