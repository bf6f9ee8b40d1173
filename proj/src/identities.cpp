#include <rr5/identities.hpp>

namespace rr5 {

namespace {

using QP = UniPoly<QuadRat>;
using QB = BiPoly<QuadRat>;

QP qp(std::initializer_list<QuadRat> cs) {
    QP p;
    for (const auto& v : cs) p.c.push_back(v);
    p.trim();
    return p;
}

// Dx^px * Dy^py * P(Nx/Dx, Ny/Dy), the denominator-cleared substitution.
QB clear_substitute(const QB& P, const QP& Nx, const QP& Dx, long px,
                    const QP& Ny, const QP& Dy, long py) {
    std::vector<QP> nxp(px + 1), dxp(px + 1), nyp(py + 1), dyp(py + 1);
    nxp[0] = dxp[0] = nyp[0] = dyp[0] = QP::constant(QuadRat(1));
    for (long k = 1; k <= px; ++k) {
        nxp[k] = nxp[k - 1] * Nx;
        dxp[k] = dxp[k - 1] * Dx;
    }
    for (long k = 1; k <= py; ++k) {
        nyp[k] = nyp[k - 1] * Ny;
        dyp[k] = dyp[k - 1] * Dy;
    }
    QB out;
    for (long i = 0; i < static_cast<long>(P.c.size()); ++i)
        for (long j = 0; j < static_cast<long>(P.c[i].size()); ++j) {
            if (is_zero(P.c[i][j])) continue;
            QP xpart = (nxp[i] * dxp[px - i]).scaled(P.c[i][j]);
            QP ypart = nyp[j] * dyp[py - j];
            out += QB::outer(xpart, ypart);
        }
    out.trim();
    return out;
}

// D^pow * P(N/D) for univariate P.
QP clear_substitute_uni(const QP& P, const QP& N, const QP& D, long pow) {
    std::vector<QP> np(pow + 1), dp(pow + 1);
    np[0] = dp[0] = QP::constant(QuadRat(1));
    for (long k = 1; k <= pow; ++k) {
        np[k] = np[k - 1] * N;
        dp[k] = dp[k - 1] * D;
    }
    QP out;
    for (long i = 0; i < static_cast<long>(P.c.size()); ++i) {
        if (is_zero(P.c[i])) continue;
        out += (np[i] * dp[pow - i]).scaled(P.c[i]);
    }
    return out;
}

}  // namespace

IdentityReport verify_identity_suite() {
    IdentityReport rep;
    auto add = [&](const std::string& name, bool ok) {
        rep.checks.emplace_back(name, ok);
    };

    const QuadRat s5 = QuadRat::sqrt5();
    const QuadRat one(1), two(2);
    const QB g = to_quadrat(seeds::g());
    const QB g1 = to_quadrat(seeds::g1());
    const QB h = to_quadrat(seeds::h());

    const QP x = QP::x();
    const QP cst1 = QP::constant(one);
    const QP cstm1 = QP::constant(QuadRat(-1));

    // T(x) = (-(1+sqrt5)x + 2) / (2x + 1 + sqrt5)
    const QP Tnum = qp({two, -(one + s5)});
    const QP Tden = qp({one + s5, two});

    // (2x+1+s5)^5 (2y+1+s5)^5 g(T(x),T(y)) = 2^5 (5+s5)^5 g(y,x)
    {
        QB lhs = clear_substitute(g, Tnum, Tden, 5, Tnum, Tden, 5);
        QuadRat scale = pow_qr(QuadRat(Rat(5)) + s5, 5) * QuadRat(Rat(32));
        QB rhs = g.swapped();
        for (auto& row : rhs.c)
            for (auto& v : row) v = v * scale;
        add("g T-conjugation", lhs == rhs);
    }

    // X^5 Y^5 g(-1/X, -1/Y) = g(X, Y)
    {
        QB lhs = clear_substitute(g, cstm1, x, 5, cstm1, x, 5);
        add("g inversion symmetry", lhs == g);
    }

    // g1(X,Y) = Y^5 g(X, -1/Y)
    {
        QB lhs = clear_substitute(g, x, cst1, 5, cstm1, x, 5);
        add("g1 is the y-inverted g", lhs == g1);
    }

    // X^5 Y^5 g1(-1/X, -1/Y) = g1(X, Y)
    {
        QB lhs = clear_substitute(g1, cstm1, x, 5, cstm1, x, 5);
        add("g1 inversion symmetry", lhs == g1);
    }

    // X^5 Y^5 h(X - 1/X, Y - 1/Y) = -g(X,Y) g1(X,Y)
    {
        QP phiN = qp({QuadRat(-1), QuadRat(0), QuadRat(1)});  // x^2 - 1
        QB lhs = clear_substitute(h, phiN, x, 5, phiN, x, 5);
        QB rhs = -(g * g1);
        add("h under phi equals -g*g1", lhs == rhs);
    }

    // (x+1)^5 (y+1)^5 h(L(x), L(y)) = 5^5 h(y, x),  L(z) = (-z+4)/(z+1)
    {
        QP Ln = qp({QuadRat(4), QuadRat(-1)});
        QP Ld = qp({QuadRat(1), QuadRat(1)});
        QB lhs = clear_substitute(h, Ln, Ld, 5, Ln, Ld, 5);
        QB rhs = h.swapped();
        for (auto& row : rhs.c)
            for (auto& v : row) v = v * QuadRat(Rat(3125));
        add("h L-conjugation", lhs == rhs);
    }

    // L(z) + 1 = 5 / (z+1)
    {
        QP Ln = qp({QuadRat(4), QuadRat(-1)});
        QP Ld = qp({QuadRat(1), QuadRat(1)});
        QP lhs = Ln + Ld;                       // (z+1)(L(z)+1)
        QP rhs = QP::constant(QuadRat(Rat(5)));
        add("L(z)+1 = 5/(z+1)", lhs == rhs);
    }

    // inversion symmetries of the modular equations:
    // v^3 P2(u,-1/v) = P2(v,u);  v^4 P3(u,-1/v) = P3(v,u);  v^8 P7(u,-1/v) = P7(v,u)
    {
        auto sym = [&](const QB& P, long py) {
            QB lhs = clear_substitute(P, x, cst1, P.deg_x(), cstm1, x, py);
            return lhs == P.swapped();
        };
        add("P2 inversion symmetry", sym(to_quadrat(seeds::P2()), 3));
        add("P3 inversion symmetry", sym(to_quadrat(seeds::P3()), 4));
        add("P7 inversion symmetry", sym(to_quadrat(seeds::P7()), 8));
    }

    // L(x - 1/x) = T(x) - 1/T(x):
    // (-x^2+4x+1) * Tnum * Tden = (x^2+x-1) * (Tnum^2 - Tden^2)
    {
        QP lnum = qp({QuadRat(1), QuadRat(4), QuadRat(-1)});
        QP lden = qp({QuadRat(-1), QuadRat(1), QuadRat(1)});
        QP lhs = lnum * Tnum * Tden;
        QP rhs = lden * (Tnum * Tnum - Tden * Tden);
        add("L of phi equals T - 1/T", lhs == rhs);
    }

    // h(x,x) = -(x+1)(x^2+4)(x^2-x+3)(x^2-2x+2)(x^2+x+5)
    QP hdiag;
    {
        hdiag = h.diagonal();
        QP rhs = qp({QuadRat(1), QuadRat(1)}) * qp({QuadRat(4), QuadRat(0), QuadRat(1)}) *
                 qp({QuadRat(3), QuadRat(-1), QuadRat(1)}) *
                 qp({QuadRat(2), QuadRat(-2), QuadRat(1)}) *
                 qp({QuadRat(5), QuadRat(1), QuadRat(1)});
        add("h diagonal factorization", hdiag == -rhs);
    }

    // y^9 h(y-1/y, y-1/y) = -(y^2+y-1) p4^2 p11 p16 p19
    {
        QP phiN = qp({QuadRat(-1), QuadRat(0), QuadRat(1)});
        QP lhs = clear_substitute_uni(hdiag, phiN, x, 9);
        QP p4 = to_quadrat(seeds::p4()), p11 = to_quadrat(seeds::p11());
        QP p16 = to_quadrat(seeds::p16()), p19 = to_quadrat(seeds::p19());
        QP rhs = qp({QuadRat(-1), QuadRat(1), QuadRat(1)}) * p4 * p4 * p11 * p16 * p19;
        add("h diagonal under phi", lhs == -rhs);
    }

    // Equality of the two j-invariant formulas under c = tau(b):
    // with n = -b + eps^5, d = eps^5 b + 1,
    //   N1(c)/ (c^5 (1-11c-c^2))  at c = n/d   equals   N2(b)/(b (1-11b-b^2)^5)
    // cleared: A * D2 = N2 * B * d^5, where
    //   A = d^12 N1(n/d),  B = n^5 (d^2 - 11 n d - n^2)
    {
        const QuadRat e5 = QuadRat::eps5();
        QP n = qp({e5, QuadRat(-1)});
        QP d = qp({QuadRat(1), e5});
        QP N1base = qp({QuadRat(1), QuadRat(-12), QuadRat(14), QuadRat(12), QuadRat(1)});
        QP N1 = N1base * N1base * N1base;
        QP N2base = qp({QuadRat(1), QuadRat(228), QuadRat(494), QuadRat(-228), QuadRat(1)});
        QP N2 = N2base * N2base * N2base;
        QP A = clear_substitute_uni(N1, n, d, 12);
        QP B = n * n * n * n * n *
               (d * d - (n * d).scaled(QuadRat(11)) - n * n);
        QP quad = qp({QuadRat(1), QuadRat(-11), QuadRat(-1)});
        QP D2 = x * quad * quad * quad * quad * quad;
        QP lhs = A * D2;
        QP rhs = N2 * B * d * d * d * d * d;
        add("j formulas agree under tau", lhs == rhs);
    }

    return rep;
}

}  // namespace rr5
