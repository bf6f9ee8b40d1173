#include <rr5/fp.hpp>

#include <mutex>

namespace rr5 {

// Primes descending from 2^62; generated once, extended on demand.
std::uint64_t crt_prime(size_t index) {
    static std::vector<std::uint64_t> primes;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    if (primes.empty()) primes.reserve(256);
    while (primes.size() <= index) {
        Int start = primes.empty() ? Int(Int(1) << 62)
                                   : Int(primes.back()) - 1;
        Int p;
        // previous prime below `start`
        p = start;
        do {
            p -= 1;
        } while (mpz_probab_prime_p(p.get_mpz_t(), 30) == 0);
        primes.push_back(p.get_ui());
    }
    return primes[index];
}

}  // namespace rr5
