#ifndef RR5_TOWER_HPP
#define RR5_TOWER_HPP

#include <rr5/resultant.hpp>
#include <rr5/seeds.hpp>

namespace rr5 {

enum class TowerKind { R, S, Rtilde, P, Q };

std::string tower_kind_name(TowerKind k);

struct TowerCaps {
    int rs = 4;      // cap for R_n, S_n, P_n, Q_n
    int rtilde = 3;  // cap for the g1-terminated chain
};

struct TowerPoly {
    TowerKind kind;
    int n = 0;
    UniPoly<Int> poly;
    std::string provenance;
    long degree() const { return poly.degree(); }
};

// Iterated-resultant diagonals R_n(x) = R^(n)(x,x) for the chain built from
// g (kind R), from h (kind S), or from g with a final g1 factor (Rtilde).
// Computed per word prime by specializing the outer variable, running the
// elimination chain with univariate resultants and interpolation, then
// recombining by CRT until two extra primes confirm the reconstruction.
TowerPoly build_R(int n, const TowerCaps& caps = {});
TowerPoly build_S(int n, const TowerCaps& caps = {});
TowerPoly build_tildeR(int n, const TowerCaps& caps = {});

// Moebius quotients P_n = prod_{k|n} R_k^{mu(n/k)} and the S-side Q_n,
// realized by exact multiplication and exact division.
TowerPoly build_P(int n, const TowerCaps& caps = {});
TowerPoly build_Q(int n, const TowerCaps& caps = {});

// Closed-form congruence mod 5 for R_n / S_n.
bool congruence_check(TowerKind kind, int n, const UniPoly<Int>& poly);
inline bool congruence_check(const TowerPoly& t) {
    return congruence_check(t.kind, t.n, t.poly);
}

}  // namespace rr5

#endif
