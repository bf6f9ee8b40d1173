#ifndef RR5_CRT_HPP
#define RR5_CRT_HPP

#include <rr5/fp.hpp>

namespace rr5 {

// Incremental Chinese remaindering of a coefficient vector over word
// primes, with symmetric-range reconstruction.  `stable` counts how many
// consecutive primes have confirmed the current reconstruction without
// changing it.
struct CrtAccum {
    std::vector<Int> vals;
    Int modulus = 1;
    int stable = 0;
    size_t primes_used = 0;

    void add(const std::vector<std::uint64_t>& residues, std::uint64_t p) {
        Int P(static_cast<unsigned long>(p));
        if (primes_used == 0) {
            vals.resize(residues.size());
            for (size_t i = 0; i < residues.size(); ++i)
                vals[i] = symmetric_mod(Int(static_cast<unsigned long>(residues[i])), P);
            modulus = P;
            primes_used = 1;
            stable = 0;
            return;
        }
        if (residues.size() != vals.size())
            throw std::domain_error("crt length mismatch");
        bool agree = true;
        for (size_t i = 0; i < vals.size(); ++i) {
            if (mod_u64(vals[i], p) != residues[i]) {
                agree = false;
                break;
            }
        }
        ++primes_used;
        if (agree) {
            ++stable;
            return;
        }
        stable = 0;
        Int minv;
        Int Mp = modulus % P;
        if (mpz_invert(minv.get_mpz_t(), Mp.get_mpz_t(), P.get_mpz_t()) == 0)
            throw std::domain_error("crt moduli not coprime");
        Int newmod = modulus * P;
        for (size_t i = 0; i < vals.size(); ++i) {
            Int r(static_cast<unsigned long>(residues[i]));
            Int t = ((r - vals[i]) % P) * minv % P;
            if (t < 0) t += P;
            vals[i] = symmetric_mod(vals[i] + modulus * t, newmod);
        }
        modulus = newmod;
    }
};

}  // namespace rr5

#endif
