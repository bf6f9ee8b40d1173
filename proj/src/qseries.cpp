#include <rr5/qseries.hpp>

#include <rr5/seeds.hpp>

namespace rr5 {

PuiseuxSeries operator*(const PuiseuxSeries& a, const PuiseuxSeries& b) {
    long va = a.valuation(), vb = b.valuation();
    long ord = std::min(a.order + vb, b.order + va);
    PuiseuxSeries s(ord);
    for (long i = va; i < a.order; ++i) {
        if (is_zero(a.c[i])) continue;
        long lim = std::min(b.order, ord - i);
        for (long j = vb; j < lim; ++j) {
            if (is_zero(b.c[j])) continue;
            s.c[i + j] += a.c[i] * b.c[j];
        }
    }
    return s;
}

PuiseuxSeries PuiseuxSeries::inverse() const {
    if (order <= 0 || is_zero(c[0]))
        throw std::domain_error("inverse of a non-unit series");
    PuiseuxSeries r(order);
    Rat c0inv = Rat(1) / c[0];
    r.c[0] = c0inv;
    for (long n = 1; n < order; ++n) {
        Rat acc(0);
        for (long k = 1; k <= n; ++k)
            if (!is_zero(c[k]) && !is_zero(r.c[n - k])) acc += c[k] * r.c[n - k];
        r.c[n] = -acc * c0inv;
    }
    return r;
}

PuiseuxSeries PuiseuxSeries::substitute_scale(long k) const {
    if (k < 1) throw std::domain_error("substitution scale must be positive");
    long no = order * k;
    if (no / k != order) throw std::domain_error("substitution order overflow");
    PuiseuxSeries s(no);
    for (long e = 0; e < order; ++e) s.c[e * k] = c[e];
    return s;
}

namespace {

// in place: f <- f * (1 - q^n)  (n in integral q-powers, i.e. 5n fifths)
void mul_one_minus_qn(PuiseuxSeries& f, long n5) {
    for (long e = f.order - 1; e >= n5; --e) f.c[e] -= f.c[e - n5];
}

int chi5(long n) {
    switch (n % 5) {
        case 1:
        case 4: return 1;
        case 2:
        case 3: return -1;
        default: return 0;
    }
}

}  // namespace

PuiseuxSeries rr_product(long order) {
    if (order > 25000) throw resource_error("series order beyond budget");
    // q^(1/5) * prod (1-q^n)^chi(n): split into the chi=+1 product and the
    // chi=-1 product, one series inversion at the end.
    PuiseuxSeries num = PuiseuxSeries::one(order);
    PuiseuxSeries den = PuiseuxSeries::one(order);
    for (long n = 1; 5 * n < order; ++n) {
        int ch = chi5(n);
        if (ch == 1)
            mul_one_minus_qn(num, 5 * n);
        else if (ch == -1)
            mul_one_minus_qn(den, 5 * n);
    }
    PuiseuxSeries r = num * den.inverse();
    // shift by q^(1/5)
    PuiseuxSeries out(std::min(order, r.order + 1));
    for (long e = 1; e < out.order; ++e) out.c[e] = r.c[e - 1];
    return out;
}

namespace {

PuiseuxSeries cfrac_partial(long order, long depth) {
    // f_j = 1 + q^j / f_{j+1}, f_{depth+1} = 1, as num/den pairs;
    // r = q^(1/5) * den_1 / num_1
    PuiseuxSeries num = PuiseuxSeries::one(order);
    PuiseuxSeries den = PuiseuxSeries::one(order);
    for (long j = depth; j >= 1; --j) {
        PuiseuxSeries nn = num;
        long shift = 5 * j;
        for (long e = shift; e < order; ++e)
            if (!is_zero(den.c[e - shift])) nn.c[e] += den.c[e - shift];
        den = num;
        num = std::move(nn);
    }
    PuiseuxSeries ratio = den * num.inverse();
    PuiseuxSeries out(std::min(order, ratio.order + 1));
    for (long e = 1; e < out.order; ++e) out.c[e] = ratio.c[e - 1];
    return out;
}

}  // namespace

PuiseuxSeries rr_cfrac(long order, long depth) {
    if (order > 25000) throw resource_error("series order beyond budget");
    if (depth > 0) return cfrac_partial(order, depth);
    // auto mode: deepen until two successive truncations agree
    long d = 8;
    PuiseuxSeries prev = cfrac_partial(order, d);
    for (;;) {
        d *= 2;
        if (d > 8 * order + 64)
            throw check_failure("continued fraction depth did not converge");
        PuiseuxSeries cur = cfrac_partial(order, d);
        if (prev.c == cur.c && prev.order == cur.order) return cur;
        prev = std::move(cur);
    }
}

namespace {

PuiseuxSeries eval_bipoly(const BiPoly<Int>& P, const PuiseuxSeries& u,
                          const PuiseuxSeries& v, long order) {
    // Horner in u, inner Horner in v; constants embed at full order.
    auto cst = [&](const Int& z) {
        PuiseuxSeries s(order);
        s.c[0] = Rat(z);
        return s;
    };
    PuiseuxSeries acc(order);
    for (size_t i = P.c.size(); i-- > 0;) {
        PuiseuxSeries row(order);
        for (size_t j = P.c[i].size(); j-- > 0;) {
            row = row * v;
            if (!is_zero(P.c[i][j])) row = row + cst(P.c[i][j]);
        }
        acc = acc * u + row;
    }
    return acc;
}

}  // namespace

RelationResult verify_relation(Relation rel, long N) {
    long W = 5 * N + 8;
    PuiseuxSeries u = rr_product(W);
    PuiseuxSeries out;
    switch (rel) {
        case Relation::g5:
            out = eval_bipoly(seeds::g(), u, u.substitute_scale(5).truncated(W), W);
            break;
        case Relation::p2:
            out = eval_bipoly(seeds::P2(), u, u.substitute_scale(2).truncated(W), W);
            break;
        case Relation::p3:
            out = eval_bipoly(seeds::P3(), u, u.substitute_scale(3).truncated(W), W);
            break;
        case Relation::p7:
            out = eval_bipoly(seeds::P7(), u, u.substitute_scale(7).truncated(W), W);
            break;
        case Relation::frakr: {
            // z (z^4-3z^3+4z^2-2z+1) - r^5 (z^4+2z^3+4z^2+3z+1) with z = r(5 tau)
            PuiseuxSeries z = u.substitute_scale(5).truncated(W);
            auto polyz = [&](std::initializer_list<long> cs) {
                PuiseuxSeries acc(W);
                for (auto it = std::rbegin(cs); it != std::rend(cs); ++it) {
                    acc = acc * z;
                    if (*it) {
                        PuiseuxSeries k(W);
                        k.c[0] = Rat(long(*it));
                        acc = acc + k;
                    }
                }
                return acc;
            };
            PuiseuxSeries lhs = z * polyz({1, -2, 4, -3, 1});
            PuiseuxSeries u5 = u * u;
            u5 = u5 * u5 * u;
            PuiseuxSeries rhs = u5 * polyz({1, 3, 4, 2, 1});
            out = lhs - rhs;
            break;
        }
    }
    if (out.order <= 5 * N)
        throw resource_error("relation check lost too much truncation order");
    RelationResult res;
    res.first_nonzero_fifths = out.first_nonzero();
    if (res.first_nonzero_fifths && *res.first_nonzero_fifths > 5 * N)
        res.first_nonzero_fifths = std::nullopt;
    res.ok = !res.first_nonzero_fifths.has_value();
    return res;
}

namespace {

Complex r_numeric_once(const Complex& tau, mpfr_prec_t prec) {
    Complex q = Complex::q_of_tau(tau, prec);
    double lq = q.abs().log2_abs();
    if (lq >= -0.001) throw precision_error("tau too close to the real axis");
    long nmax = static_cast<long>((static_cast<double>(prec) + 16) / (-lq)) + 2;
    if (nmax > 4000000) throw precision_error("q too close to 1 for the bit budget");
    Complex one = Complex::of_long(1, prec);
    Complex num = one, den = one;
    // running powers q^n
    Complex qn = q;
    for (long n = 1; n <= nmax; ++n) {
        int ch = chi5(n);
        if (ch == 1)
            num = num * (one - qn);
        else if (ch == -1)
            den = den * (one - qn);
        qn = qn * q;
    }
    Complex tau5{tau.re / Real::of_long(5, prec), tau.im / Real::of_long(5, prec)};
    Complex q15 = Complex::q_of_tau(tau5, prec);
    return q15 * num / den;
}

}  // namespace

Complex r_numeric(const Complex& tau, long bits) {
    if (tau.im.sgn() <= 0) throw std::domain_error("tau must be in the upper half plane");
    Complex v1 = r_numeric_once(tau, static_cast<mpfr_prec_t>(bits + 32));
    Complex v2 = r_numeric_once(tau, static_cast<mpfr_prec_t>(bits + 64));
    Real diff = (v1 - v2).abs();
    double bound = -static_cast<double>(bits);
    if (diff.sgn() != 0 && diff.log2_abs() > bound + v2.abs().log2_abs() + 1)
        throw precision_error("redundant-precision evaluations disagree");
    return v2;
}

Real poly_abs_at(const UniPoly<Int>& p, const Complex& z) {
    mpfr_prec_t prec = z.prec();
    Complex acc = Complex::of_long(0, prec);
    for (size_t i = p.c.size(); i-- > 0;) {
        acc = acc * z;
        acc.re = acc.re + Real::of_int(p.c[i], prec);
    }
    return acc.abs();
}

}  // namespace rr5
