#ifndef DLPCERT_QCOMB_HPP
#define DLPCERT_QCOMB_HPP

#include <vector>

#include "rational.hpp"

namespace dlpcert {

// q-combinatorics: geometric sums [n]_q, falling factorials (n)_{k,q},
// factorials k!_q and Gaussian binomials, all exact integers.
// [n]_q counts points of a projective space; binom(n,k)_q counts k-dim
// subspaces of F_q^n when q is a prime power.  Everything works for q = 1,
// where it degenerates to ordinary binomials.

inline BigInt geometric_sum(long n, long q) {
    if (n <= 0) return 0;
    if (q == 1) return n;
    return (big_pow(q, (unsigned long)n) - 1) / (q - 1);
}

// (n)_{k,q} = prod_{j=0}^{k-1} [n-j]_q.  Empty product for k <= 0.
inline BigInt q_falling_factorial(long n, long k, long q) {
    BigInt r = 1;
    for (long j = 0; j < k; ++j) {
        if (n - j <= 0) return 0; // hits [0]_q before any negative index
        r *= geometric_sum(n - j, q);
    }
    return r;
}

inline BigInt q_factorial(long k, long q) { return q_falling_factorial(k, k, q); }

inline BigInt gaussian_binomial(long n, long k, long q) {
    if (k < 0 || k > n) return 0;
    BigInt num = q_falling_factorial(n, k, q);
    BigInt den = q_factorial(k, q);
    BigInt r;
    mpz_divexact(r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return r;
}

inline BigInt factorial(long n) {
    BigInt r;
    mpz_fac_ui(r.get_mpz_t(), (unsigned long)(n < 0 ? 0 : n));
    return r;
}

inline BigInt binomial(long n, long k) {
    if (k < 0 || k > n || n < 0) return 0;
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), (unsigned long)n, (unsigned long)k);
    return r;
}

// n! / prod parts[i]!  (parts must sum to n)
inline BigInt multinomial(long n, const std::vector<long>& parts) {
    BigInt r = factorial(n);
    for (long p : parts) {
        BigInt d = factorial(p);
        mpz_divexact(r.get_mpz_t(), r.get_mpz_t(), d.get_mpz_t());
    }
    return r;
}

} // namespace dlpcert

#endif
