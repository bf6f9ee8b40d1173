#ifndef RR5_POLY_HPP
#define RR5_POLY_HPP

#include <rr5/quadrat.hpp>

#include <algorithm>
#include <array>
#include <optional>

namespace rr5 {

// Dense univariate polynomial over C in {Int, Rat, QuadRat, ...}.
// coeff[i] is the coefficient of x^i; no stored leading zeros.
// The zero polynomial has an empty vector and degree -1.
template <class C>
struct UniPoly {
    std::vector<C> c;

    UniPoly() = default;
    explicit UniPoly(std::vector<C> v) : c(std::move(v)) { trim(); }

    static UniPoly zero() { return UniPoly(); }
    static UniPoly constant(const C& v) {
        UniPoly p;
        p.c.push_back(v);
        p.trim();
        return p;
    }
    static UniPoly x() {
        UniPoly p;
        p.c = {C(0), C(1)};
        return p;
    }
    // Convenience for literal transcriptions: coefficients listed from
    // the constant term upward.
    static UniPoly from_coeffs(std::initializer_list<long> v) {
        UniPoly p;
        for (long t : v) p.c.push_back(C(int(t)));
        p.trim();
        return p;
    }

    void trim() {
        while (!c.empty() && is_zero(c.back())) c.pop_back();
    }
    long degree() const { return static_cast<long>(c.size()) - 1; }
    bool is_zero_poly() const { return c.empty(); }
    const C& lc() const {
        if (c.empty()) throw std::domain_error("lc of zero polynomial");
        return c.back();
    }
    C coeff(long i) const {
        if (i < 0 || i >= static_cast<long>(c.size())) return C(0);
        return c[i];
    }
    bool is_monic() const { return !c.empty() && c.back() == C(1); }

    UniPoly operator-() const {
        UniPoly r = *this;
        for (auto& v : r.c) v = -v;
        return r;
    }
    UniPoly& operator+=(const UniPoly& o) {
        if (o.c.size() > c.size()) c.resize(o.c.size(), C(0));
        for (size_t i = 0; i < o.c.size(); ++i) c[i] += o.c[i];
        trim();
        return *this;
    }
    UniPoly& operator-=(const UniPoly& o) {
        if (o.c.size() > c.size()) c.resize(o.c.size(), C(0));
        for (size_t i = 0; i < o.c.size(); ++i) c[i] -= o.c[i];
        trim();
        return *this;
    }
    friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
    friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }

    friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
        if (a.is_zero_poly() || b.is_zero_poly()) return UniPoly();
        UniPoly r;
        r.c.assign(a.c.size() + b.c.size() - 1, C(0));
        for (size_t i = 0; i < a.c.size(); ++i) {
            if (is_zero(a.c[i])) continue;
            for (size_t j = 0; j < b.c.size(); ++j) r.c[i + j] += a.c[i] * b.c[j];
        }
        r.trim();
        return r;
    }
    UniPoly& operator*=(const UniPoly& o) { return *this = *this * o; }

    UniPoly scaled(const C& s) const {
        UniPoly r = *this;
        for (auto& v : r.c) v = v * s;
        r.trim();
        return r;
    }
    UniPoly shifted(long k) const {  // multiply by x^k
        if (is_zero_poly()) return UniPoly();
        UniPoly r;
        r.c.assign(c.size() + k, C(0));
        std::copy(c.begin(), c.end(), r.c.begin() + k);
        return r;
    }

    friend bool operator==(const UniPoly& a, const UniPoly& b) {
        return a.c == b.c;
    }
    friend bool operator!=(const UniPoly& a, const UniPoly& b) {
        return !(a.c == b.c);
    }

    UniPoly derivative() const {
        UniPoly r;
        for (size_t i = 1; i < c.size(); ++i) r.c.push_back(C(int(i)) * c[i]);
        r.trim();
        return r;
    }

    C eval(const C& x) const {
        C r(0);
        for (size_t i = c.size(); i-- > 0;) r = r * x + c[i];
        return r;
    }

    // Horner evaluation in any ring V, injecting coefficients through `inj`.
    template <class V, class Inj>
    V eval_as(const V& x, Inj inj, const V& zero) const {
        V r = zero;
        for (size_t i = c.size(); i-- > 0;) r = r * x + inj(c[i]);
        return r;
    }

    // x^deg * P(1/x) (coefficient reversal).
    UniPoly reversed() const {
        UniPoly r = *this;
        std::reverse(r.c.begin(), r.c.end());
        r.trim();
        return r;
    }

    std::string str(const std::string& var = "x") const {
        if (c.empty()) return "0";
        std::string s;
        for (size_t i = c.size(); i-- > 0;) {
            if (is_zero(c[i])) continue;
            if (!s.empty()) s += " + ";
            s += coeff_str(c[i]) + "*" + var + "^" + std::to_string(i);
        }
        return s;
    }

  private:
    static std::string coeff_str(const Int& v) { return v.get_str(); }
    static std::string coeff_str(const Rat& v) { return v.get_str(); }
    static std::string coeff_str(const QuadRat& v) { return "(" + v.str() + ")"; }
};

template <class C>
UniPoly<C> pow_poly(UniPoly<C> base, unsigned long e) {
    UniPoly<C> r = UniPoly<C>::constant(C(1));
    while (e) {
        if (e & 1) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

// Quotient of A by B when the division is exact over the coefficient ring;
// throws inexact_division otherwise.  Works over Int without passing to
// the fraction field: every coefficient division is checked.
inline UniPoly<Int> exact_divide(const UniPoly<Int>& a, const UniPoly<Int>& b) {
    if (b.is_zero_poly()) throw std::domain_error("division by zero polynomial");
    if (a.is_zero_poly()) return UniPoly<Int>();
    if (a.degree() < b.degree()) throw inexact_division("degree of divisor exceeds dividend");
    std::vector<Int> rem = a.c;
    std::vector<Int> q(a.degree() - b.degree() + 1);
    const Int& lb = b.lc();
    for (long i = a.degree() - b.degree(); i >= 0; --i) {
        Int& top = rem[i + b.degree()];
        if (!mpz_divisible_p(top.get_mpz_t(), lb.get_mpz_t()))
            throw inexact_division("leading coefficient does not divide");
        Int qi = top / lb;
        q[i] = qi;
        for (long j = 0; j <= b.degree(); ++j) rem[i + j] -= qi * b.c[j];
    }
    for (const Int& v : rem)
        if (!is_zero(v)) throw inexact_division("nonzero remainder");
    UniPoly<Int> quot{std::move(q)};
    quot.trim();
    return quot;
}

inline bool divides(const UniPoly<Int>& b, const UniPoly<Int>& a) {
    try {
        exact_divide(a, b);
        return true;
    } catch (const inexact_division&) {
        return false;
    }
}

// Field-coefficient division with remainder.
template <class C>
std::pair<UniPoly<C>, UniPoly<C>> divrem_field(const UniPoly<C>& a,
                                               const UniPoly<C>& b) {
    if (b.is_zero_poly()) throw std::domain_error("division by zero polynomial");
    UniPoly<C> q, r = a;
    if (a.degree() < b.degree()) return {q, r};
    q.c.assign(a.degree() - b.degree() + 1, C(0));
    C lb_inv = C(1) / b.lc();
    while (!r.is_zero_poly() && r.degree() >= b.degree()) {
        long k = r.degree() - b.degree();
        C f = r.lc() * lb_inv;
        q.c[k] = f;
        for (long j = 0; j <= b.degree(); ++j) r.c[k + j] -= f * b.c[j];
        r.trim();
    }
    q.trim();
    return {q, r};
}

template <class C>
UniPoly<C> gcd_field(UniPoly<C> a, UniPoly<C> b) {
    while (!b.is_zero_poly()) {
        auto [q, r] = divrem_field(a, b);
        (void)q;
        a = b;
        b = r;
    }
    if (!a.is_zero_poly()) a = a.scaled(C(1) / a.lc());
    return a;
}

inline Int content(const UniPoly<Int>& p) {
    Int g = 0;
    for (const Int& v : p.c) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    return g;
}

inline UniPoly<Int> primitive_part(const UniPoly<Int>& p) {
    if (p.is_zero_poly()) return p;
    Int g = content(p);
    if (sgn(p.lc()) < 0) g = -g;
    UniPoly<Int> r = p;
    for (Int& v : r.c) v /= g;
    return r;
}

inline UniPoly<Rat> to_rat(const UniPoly<Int>& p) {
    UniPoly<Rat> r;
    r.c.reserve(p.c.size());
    for (const Int& v : p.c) r.c.emplace_back(Rat(v));
    return r;
}

inline UniPoly<QuadRat> to_quadrat(const UniPoly<Int>& p) {
    UniPoly<QuadRat> r;
    r.c.reserve(p.c.size());
    for (const Int& v : p.c) r.c.emplace_back(QuadRat(Rat(v)));
    return r;
}

// Moebius coordinate change: (cx+d)^deg * P((ax+b)/(cx+d)).
// With `monic` set, the result is normalized to leading coefficient 1.
template <class C>
UniPoly<C> mobius_conjugate(const UniPoly<C>& p, const C& a, const C& b,
                            const C& c, const C& d, bool monic = false) {
    if (is_zero(a * d - b * c)) throw std::domain_error("singular moebius map");
    if (p.is_zero_poly()) return p;
    long n = p.degree();
    UniPoly<C> num, den, res;
    num.c = {b, a};
    num.trim();
    den.c = {d, c};
    den.trim();
    // res = sum p_k num^k den^(n-k)
    UniPoly<C> nk = UniPoly<C>::constant(C(1));
    std::vector<UniPoly<C>> numpow(n + 1);
    numpow[0] = nk;
    for (long k = 1; k <= n; ++k) numpow[k] = numpow[k - 1] * num;
    UniPoly<C> dk = UniPoly<C>::constant(C(1));
    for (long k = n; k >= 0; --k) {
        res += numpow[k].scaled(p.coeff(k)) * dk;
        if (k > 0) dk *= den;
    }
    if (monic && !res.is_zero_poly()) res = res.scaled(C(1) / res.lc());
    return res;
}

// ----------------------------------------------------------------------
// Dense bivariate polynomial; c[i][j] is the coefficient of x^i y^j.
template <class C>
struct BiPoly {
    std::vector<std::vector<C>> c;

    BiPoly() = default;

    static BiPoly zero() { return BiPoly(); }
    static BiPoly constant(const C& v) {
        BiPoly p;
        p.c = {{v}};
        p.trim();
        return p;
    }

    void set(long i, long j, const C& v) {
        if (i >= static_cast<long>(c.size())) c.resize(i + 1);
        for (auto& row : c)
            if (j >= static_cast<long>(row.size())) row.resize(j + 1, C(0));
        if (j >= static_cast<long>(c[i].size())) c[i].resize(j + 1, C(0));
        c[i][j] = v;
    }
    C coeff(long i, long j) const {
        if (i < 0 || i >= static_cast<long>(c.size())) return C(0);
        if (j < 0 || j >= static_cast<long>(c[i].size())) return C(0);
        return c[i][j];
    }
    void trim() {
        for (auto& row : c)
            while (!row.empty() && is_zero(row.back())) row.pop_back();
        while (!c.empty() && c.back().empty()) c.pop_back();
    }
    bool is_zero_poly() const {
        for (auto& row : c)
            for (auto& v : row)
                if (!is_zero(v)) return false;
        return true;
    }
    long deg_x() const {
        for (long i = static_cast<long>(c.size()) - 1; i >= 0; --i)
            for (const auto& v : c[i])
                if (!is_zero(v)) return i;
        return -1;
    }
    long deg_y() const {
        long d = -1;
        for (const auto& row : c)
            for (long j = static_cast<long>(row.size()) - 1; j >= 0; --j)
                if (!is_zero(row[j])) {
                    d = std::max(d, j);
                    break;
                }
        return d;
    }

    BiPoly operator-() const {
        BiPoly r = *this;
        for (auto& row : r.c)
            for (auto& v : row) v = -v;
        return r;
    }
    BiPoly& operator+=(const BiPoly& o) {
        for (size_t i = 0; i < o.c.size(); ++i)
            for (size_t j = 0; j < o.c[i].size(); ++j)
                if (!is_zero(o.c[i][j]))
                    set(i, j, coeff(i, j) + o.c[i][j]);
        trim();
        return *this;
    }
    BiPoly& operator-=(const BiPoly& o) { return *this += -o; }
    friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
    friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }

    friend BiPoly operator*(const BiPoly& a, const BiPoly& b) {
        BiPoly r;
        if (a.is_zero_poly() || b.is_zero_poly()) return r;
        long dxa = static_cast<long>(a.c.size()), dxb = static_cast<long>(b.c.size());
        r.c.resize(dxa + dxb - 1);
        for (long i = 0; i < dxa; ++i)
            for (long k = 0; k < dxb; ++k) {
                auto& row = r.c[i + k];
                if (a.c[i].empty() || b.c[k].empty()) continue;
                size_t need = a.c[i].size() + b.c[k].size() - 1;
                if (row.size() < need) row.resize(need, C(0));
                for (size_t j = 0; j < a.c[i].size(); ++j) {
                    if (is_zero(a.c[i][j])) continue;
                    for (size_t l = 0; l < b.c[k].size(); ++l)
                        row[j + l] += a.c[i][j] * b.c[k][l];
                }
            }
        r.trim();
        return r;
    }

    friend bool operator==(const BiPoly& a, const BiPoly& b) {
        BiPoly d = a - b;
        return d.is_zero_poly();
    }

    // Outer product u(x) * v(y).
    static BiPoly outer(const UniPoly<C>& u, const UniPoly<C>& v) {
        BiPoly r;
        if (u.is_zero_poly() || v.is_zero_poly()) return r;
        r.c.resize(u.c.size());
        for (size_t i = 0; i < u.c.size(); ++i) {
            r.c[i].resize(v.c.size(), C(0));
            for (size_t j = 0; j < v.c.size(); ++j) r.c[i][j] = u.c[i] * v.c[j];
        }
        r.trim();
        return r;
    }

    BiPoly swapped() const {  // exchange the roles of x and y
        BiPoly r;
        for (size_t i = 0; i < c.size(); ++i)
            for (size_t j = 0; j < c[i].size(); ++j)
                if (!is_zero(c[i][j])) r.set(j, i, c[i][j]);
        r.trim();
        return r;
    }

    UniPoly<C> diagonal() const {  // P(x, x)
        UniPoly<C> r;
        for (size_t i = 0; i < c.size(); ++i)
            for (size_t j = 0; j < c[i].size(); ++j) {
                if (is_zero(c[i][j])) continue;
                size_t k = i + j;
                if (r.c.size() <= k) r.c.resize(k + 1, C(0));
                r.c[k] += c[i][j];
            }
        r.trim();
        return r;
    }

    // View as polynomial in y with UniPoly coefficients in x.
    std::vector<UniPoly<C>> y_coeffs() const {
        long dy = deg_y();
        std::vector<UniPoly<C>> out(dy + 1);
        for (long j = 0; j <= dy; ++j) {
            UniPoly<C> p;
            for (size_t i = 0; i < c.size(); ++i) p.c.push_back(coeff(i, j));
            p.trim();
            out[j] = p;
        }
        return out;
    }

    // Substitute concrete values in any commutative ring V.
    template <class V, class Inj>
    V eval_as(const V& x, const V& y, Inj inj, const V& zero) const {
        V r = zero;
        for (size_t i = c.size(); i-- > 0;) {
            V row = zero;
            for (size_t j = c[i].size(); j-- > 0;) row = row * y + inj(c[i][j]);
            r = r * x + row;
        }
        return r;
    }

    // Substitute univariate polynomials for x and y.
    UniPoly<C> eval_poly(const UniPoly<C>& x, const UniPoly<C>& y) const {
        UniPoly<C> r;
        for (size_t i = c.size(); i-- > 0;) {
            UniPoly<C> row;
            for (size_t j = c[i].size(); j-- > 0;)
                row = row * y + UniPoly<C>::constant(c[i][j]);
            r = r * x + row;
        }
        return r;
    }
};

inline BiPoly<QuadRat> to_quadrat(const BiPoly<Int>& p) {
    BiPoly<QuadRat> r;
    r.c.resize(p.c.size());
    for (size_t i = 0; i < p.c.size(); ++i) {
        r.c[i].reserve(p.c[i].size());
        for (const Int& v : p.c[i]) r.c[i].emplace_back(QuadRat(Rat(v)));
    }
    r.trim();
    return r;
}

inline BiPoly<Rat> to_rat(const BiPoly<Int>& p) {
    BiPoly<Rat> r;
    r.c.resize(p.c.size());
    for (size_t i = 0; i < p.c.size(); ++i) {
        r.c[i].reserve(p.c[i].size());
        for (const Int& v : p.c[i]) r.c[i].emplace_back(Rat(v));
    }
    r.trim();
    return r;
}

}  // namespace rr5

#endif
