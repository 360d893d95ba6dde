#ifndef DLPCERT_COMPLETENESS_HPP
#define DLPCERT_COMPLETENESS_HPP

#include <vector>

#include "certificates.hpp"

namespace dlpcert {

// The closed-form dual for the subspace formulation at completeness levels
// l >= n: alpha = q^{lk}, beta depending only on dim via the recurrence
//   beta~_s = q^{l(k-s)} - 1 - sum_{i=s+1}^{k-1} binom(n-s, i-s)_q beta~_i,
// gamma = 0.

struct BetaTilde {
    std::vector<BigInt> values; // beta~_0 .. beta~_{k-1}
    bool all_nonnegative = true;
    bool below_completeness_level = false; // l < n: construction computed, no guarantee
};

inline BetaTilde build_beta_tilde(int n, int l, int k, int q) {
    if (!(0 <= k && k <= n)) throw PreconditionError("build_beta_tilde: need 0 <= k <= n");
    BetaTilde out;
    out.below_completeness_level = (l < n);
    out.values.assign(k, BigInt(0));
    for (int s = k - 1; s >= 0; --s) {
        BigInt v = big_pow(q, (unsigned long)l * (k - s)) - 1;
        for (int i = s + 1; i <= k - 1; ++i)
            v -= gaussian_binomial(n - s, i - s, q) * out.values[i];
        out.values[s] = v;
        if (v < 0) out.all_nonnegative = false;
    }
    return out;
}

inline MDualCert build_completeness_cert(int n, int l, int k, int q,
                                         const ValidSpec* spec_override = nullptr) {
    if (l < n)
        throw PreconditionError("build_completeness_cert: completeness needs l >= n "
                                "(use build_beta_tilde directly to explore l < n)");
    BetaTilde bt = build_beta_tilde(n, l, k, q);
    MDualCert c;
    c.spec = spec_override ? *spec_override : ValidSpec::dim_at_most(n, q, k);
    c.l = l;
    c.alpha = Rational(big_pow(q, (unsigned long)l * k));
    c.beta_by_dim.assign(n + 1, Rational(0));
    for (int s = 0; s < k; ++s) c.beta_by_dim[s] = Rational(bt.values[s]);
    c.gamma_by_dim.assign(n + 1, Rational(0));
    return c;
}

// max dim over the valid family, by honest subspace enumeration
inline int max_valid_dim(const ValidSpec& spec) {
    int best = -1;
    for_each_subspace(spec.n, spec.q, [&](const Subspace& S) {
        if (S.dim() > best && subspace_valid(S, spec)) best = S.dim();
    });
    if (best < 0) throw PreconditionError("max_valid_dim: empty valid family");
    return best;
}

struct CompletenessGap {
    int k = 0;                 // max valid dimension
    Rational dual_objective;   // q^{lk}
    BigInt oracle_best;        // max |C|^l over valid subspaces
    bool equal = false;
};

inline CompletenessGap completeness_gap(int n, int l, const ValidSpec& spec) {
    CompletenessGap out;
    out.k = max_valid_dim(spec);
    out.dual_objective = Rational(big_pow(spec.q, (unsigned long)l * out.k));
    BigInt best = 0;
    for_each_subspace(n, spec.q, [&](const Subspace& S) {
        if (!subspace_valid(S, spec)) return;
        BigInt v = big_pow(S.size(), (unsigned long)l);
        if (v > best) best = v;
    });
    out.oracle_best = best;
    out.equal = (out.dual_objective == Rational(best));
    return out;
}

} // namespace dlpcert

#endif
