#ifndef RR5_FAMILY_HPP
#define RR5_FAMILY_HPP

#include <rr5/classnum.hpp>
#include <rr5/padic.hpp>
#include <rr5/store.hpp>

namespace rr5 {

struct FamilyConfig {
    int prec = 40;          // 5-adic working precision
    long d_ceiling = 5000;  // candidate-discriminant search ceiling
    TowerCaps caps{};
};

// Store-backed caches.
UniPoly<Int> hilbert_cached(const Int& d, Store* store, long d_cap = 5000);
TowerPoly tower_cached(TowerKind kind, int n, const TowerCaps& caps, Store* store);

// The transcribed seed records p_4, p_11, p_16, p_19, p_51.
PdRecord seed_record(const Int& d);

// Discriminant of the CM order attached to a 5-adic j-invariant:
// Frobenius point-count shortlist first, Hilbert-polynomial confirmation
// always; full candidate scan as fallback.
Int identify_discriminant(const PadicU& j, long h_max, const FamilyConfig& cfg,
                          Store* store);

struct ReconstructionResult {
    int n = 0;
    std::vector<PdRecord> records;   // one per discriminant, sorted by d
    UniPoly<Int> special_cofactor;   // x(x^2+x-1) for n = 1, constant 1 otherwise
    int sign = 1;                    // P_n = sign * special * prod(records)
};

// Factor P_n by lifting every minimal-period-n orbit, identifying its
// discriminant through H_{-d}, multiplying the cluster's linear factors
// together with their T-companions, and verifying by exact division.
ReconstructionResult reconstruct_pd(int n, const FamilyConfig& cfg, Store* store);

enum class GenRel { p2, p3, p7 };

// p_{4d}/p_{9d}/p_{49d} from p_d via the degree-2/3/7 modular equations:
// resultant, strip known cofactors, check the degree forced by the class
// number, then verify invariance (and a 5-adic H-match when a small-field
// root is available).
PdRecord gen_pd(GenRel rel, const PdRecord& source, const FamilyConfig& cfg,
                Store* store);

// Trace-form companion: x^{2h} t_d(x - 1/x) = p_d (p_4 uses the squared rule).
TdRecord td_from_pd(const PdRecord& p);

// F_d and G_d: denominators of H_{-d} composed with the two j-formulas cleared.
std::pair<UniPoly<Int>, UniPoly<Int>> build_Fd_Gd(const Int& d, Store* store);

// exact q-adic valuation of disc(p_d)
long disc_power_check(const PdRecord& p, const Int& q);

struct ClassSum {
    Int sum = 0, target = 0;
    bool ok = false;
    std::vector<std::pair<Int, long>> parts;  // identified (d, h) pairs
};

// side 'P': sum of h(-d) over the period-n reconstruction; side 'Q': over
// the discriminants whose conjugated orbits have minimal period n.
ClassSum class_sum_check(int n, char side, const FamilyConfig& cfg, Store* store);

struct TildeFactors {
    int n = 0;
    std::vector<std::pair<PdRecord, int>> records;  // (p_d, multiplicity)
    int x2p1_multiplicity = 0;
    bool no_golden_factor = false;  // x^2 + x - 1 never divides
    int sign = 1;                   // leftover constant after full factorization
};

TildeFactors tildeR_factors(int n, const FamilyConfig& cfg, Store* store);

// Fetch p_d from the store, the seed set, or derive it on demand through
// the modular-equation chains (d = 4d', 9d', 49d' recursively).
PdRecord obtain_pd(const Int& d, const FamilyConfig& cfg, Store* store);

}  // namespace rr5

#endif
