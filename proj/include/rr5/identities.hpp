#ifndef RR5_IDENTITIES_HPP
#define RR5_IDENTITIES_HPP

#include <rr5/seeds.hpp>

namespace rr5 {

struct IdentityReport {
    std::vector<std::pair<std::string, bool>> checks;
    bool all_pass() const {
        for (auto& [n, ok] : checks)
            if (!ok) return false;
        return true;
    }
    std::vector<std::string> failures() const {
        std::vector<std::string> f;
        for (auto& [n, ok] : checks)
            if (!ok) f.push_back(n);
        return f;
    }
};

// Exact verification of the suite of polynomial / rational-function
// identities behind the curve transformations: inversion symmetry of g and
// g1, the T-conjugation of g, the h <-> g*g1 substitution identity, the
// L-map identities, the modular-equation inversion symmetries, the diagonal
// factorization of h, and the equality of the two j-invariant formulas.
// Everything is compared as polynomials over Q(sqrt5) after clearing
// denominators; no tolerances anywhere.
IdentityReport verify_identity_suite();

}  // namespace rr5

#endif
