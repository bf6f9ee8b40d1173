#ifndef RR5_FACTOR_HPP
#define RR5_FACTOR_HPP

#include <rr5/basics.hpp>

namespace rr5 {

struct Factorization {
    std::vector<std::pair<Int, unsigned>> factors;  // sorted by prime
    Int composite_remainder;                        // 1 when complete
    int sign;                                       // -1, 0, +1
};

bool is_probable_prime(const Int& n);

// Trial division up to `trial_bound`, then Pollard rho (Brent variant)
// within `budget_ms` milliseconds; whatever survives is reported as a
// composite remainder.
Factorization factor_int(const Int& n, unsigned long trial_bound = 1000000,
                         long budget_ms = 10000);

}  // namespace rr5

#endif
