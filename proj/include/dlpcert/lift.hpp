#ifndef DLPCERT_LIFT_HPP
#define DLPCERT_LIFT_HPP

#include <vector>

#include "certificates.hpp"

namespace dlpcert {

// Explicit lifts of dual solutions: a feasible symmetrized dual at level k
// becomes one at any level l divisible by k, with objective V^(l/k).

namespace detail {

// index of the last nonzero row of X, 0 if X = 0
inline int last_nonzero_row(long idx, int l, int n, int q) {
    long rowN = 1;
    for (int i = 0; i < n; ++i) rowN *= q;
    for (int j = l; j >= 1; --j) {
        long block = idx % rowN;
        idx /= rowN;
        if (block) return j;
        (void)block;
    }
    return 0;
}

// number of leading zero rows of X
inline int leading_zero_rows(long idx, int l, int n, int q) {
    long rowN = 1;
    for (int i = 0; i < n; ++i) rowN *= q;
    long div = 1;
    for (int i = 0; i < (l - 1) * n; ++i) div *= q;
    for (int j = 1; j <= l; ++j) {
        long block = (idx / div) % rowN;
        if (block) return j - 1;
        div /= rowN;
    }
    return l;
}

} // namespace detail

struct LiftOptions {
    bool strict = true; // verify input feasibility before lifting
    CheckOptions check;
};

// Level 1 -> level l:
//   g_l(X) = sum_{t in [l]} (1+h(0))^{l-t} h(X_1) 1[X_{t+1..l} = 0],
// all other g_u = 0; objective (1+h(0))^l.
inline SymmDualCert lift_level1(const GridFunction& h, int l, const ValidSpec& spec,
                                const LiftOptions& opts = {}) {
    int n = h.n(), q = h.q();
    if (h.l() != 1) throw ShapeMismatch("lift_level1: input must live on F_q^n");
    if (l < 1 || l > n) throw PreconditionError("lift_level1: need 1 <= l <= n");
    if (opts.strict) {
        SymmDualCert in;
        in.spec = spec;
        in.l = 1;
        in.g.push_back(h);
        FeasibilityReport r = check_symmp(in, opts.check);
        if (!r.accepted())
            throw InfeasibleInput("lift_level1: input certificate infeasible (" +
                                  std::to_string(r.violations.size()) + " violations)");
    }
    Rational V = 1 + h.at_zero();
    // partial sums S[t0] = sum_{t=max(t0,1)}^{l} V^{l-t}
    std::vector<Rational> S(l + 1, Rational(0));
    for (int t0 = l; t0 >= 0; --t0) {
        int t = std::max(t0, 1);
        S[t0] = 0;
        for (int tt = t; tt <= l; ++tt) S[t0] += rat_pow(V, (unsigned long)(l - tt));
    }

    SymmDualCert out;
    out.spec = spec;
    out.l = l;
    for (int u = 1; u < l; ++u) out.g.push_back(GridFunction::zeros_dense(l, n, q));

    GridFunction hd = h.dense() ? h : h.expand();
    GridFunction gl = GridFunction::zeros_dense(l, n, q);
    long rowN = hd.size();
    long topdiv = 1;
    for (int i = 0; i < (l - 1) * n; ++i) topdiv *= q;
    for (long idx = 0; idx < gl.size(); ++idx) {
        long row1 = idx / topdiv;
        int t0 = detail::last_nonzero_row(idx, l, n, q);
        gl[idx] = hd[row1] * S[t0];
    }
    (void)rowN;
    out.g.push_back(std::move(gl));
    return out;
}

// Level k -> level l (k | l):
//   g_u = 0 for u <= l-k, else
//   g_u(X) = sum_{t=0}^{l/k-1} V^t h_{u-l+k}(X_{l-k+1..l}) 1[X_{1..kt} = 0].
inline SymmDualCert lift_general(const SymmDualCert& cert, int l, const LiftOptions& opts = {}) {
    int k = cert.l, n = cert.n(), q = cert.q();
    if (l % k != 0) throw DivisibilityError("lift_general: k must divide l");
    if (l < 1 || l > n) throw PreconditionError("lift_general: need 1 <= l <= n");
    if (opts.strict) {
        FeasibilityReport r = check_symmp(cert, opts.check);
        if (!r.accepted())
            throw InfeasibleInput("lift_general: input certificate infeasible (" +
                                  std::to_string(r.violations.size()) + " violations)");
    }
    Rational V = cert.objective();
    int steps = l / k;

    SymmDualCert out;
    out.spec = cert.spec;
    out.l = l;
    for (int u = 1; u <= l - k; ++u) out.g.push_back(GridFunction::zeros_dense(l, n, q));

    long botN = 1;
    for (int i = 0; i < k * n; ++i) botN *= q;
    std::vector<Rational> Vpow(steps);
    for (int t = 0; t < steps; ++t) Vpow[t] = rat_pow(V, (unsigned long)t);

    for (int u = l - k + 1; u <= l; ++u) {
        const GridFunction hj_in = cert.g[u - l + k - 1];
        GridFunction hj = hj_in.dense() ? hj_in : hj_in.expand();
        GridFunction gu = GridFunction::zeros_dense(l, n, q);
        for (long idx = 0; idx < gu.size(); ++idx) {
            long bottom = idx % botN;
            if (hj[bottom] == 0) continue;
            int z0 = detail::leading_zero_rows(idx, l, n, q);
            int tmax = std::min(steps - 1, z0 / k);
            Rational coef = 0;
            for (int t = 0; t <= tmax; ++t) coef += Vpow[t];
            gu[idx] = hj[bottom] * coef;
        }
        out.g.push_back(std::move(gu));
    }
    return out;
}

// The k=1 instance of the general lift equals the warm-up lift after
// reversing the row order; objectives agree unconditionally.
inline bool compare_prop_vs_thm(const GridFunction& h, int l, const ValidSpec& spec,
                                const LiftOptions& opts = {}) {
    SymmDualCert prop = lift_level1(h, l, spec, opts);
    SymmDualCert level1;
    level1.spec = spec;
    level1.l = 1;
    level1.g.push_back(h);
    LiftOptions unchecked = opts; // already validated by lift_level1 if strict
    unchecked.strict = false;
    SymmDualCert thm = lift_general(level1, l, unchecked);

    if (prop.objective() != thm.objective()) return false;
    FqMat rev(l, l, h.q());
    for (int i = 1; i <= l; ++i) rev.at(i, l + 1 - i) = 1;
    GridFunction permuted = act_gl(prop.g[l - 1], rev);
    for (int u = 0; u < l - 1; ++u) {
        for (long i = 0; i < thm.g[u].size(); ++i)
            if (thm.g[u][i] != 0 || prop.g[u][i] != 0) return false;
    }
    const GridFunction& tl = thm.g[l - 1];
    for (long i = 0; i < tl.size(); ++i)
        if (tl[i] != permuted[i]) return false;
    return true;
}

} // namespace dlpcert

#endif
