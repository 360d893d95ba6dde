#ifndef DLPCERT_ORACLE_HPP
#define DLPCERT_ORACLE_HPP

#include <vector>

#include "certificates.hpp"
#include "simplex.hpp"
#include "subspaces.hpp"

namespace dlpcert {

// Ground truth by brute force.  Everything here is deliberately naive and
// shares no transform code with the fast paths it is used to audit.

struct MaxCodeResult {
    Subspace best;
    BigInt size = 1;
    BigInt size_pow_l = 1;
};

// Exhaustive maximum of |C| over valid subspaces; ties keep the first one
// found in RREF enumeration order.
inline MaxCodeResult max_valid_code(const ValidSpec& spec, int l,
                                    long budget = 20'000'000) {
    MaxCodeResult out;
    bool found = false;
    for_each_subspace(spec.n, spec.q, [&](const Subspace& S) {
        if (!subspace_valid(S, spec)) return;
        BigInt sz = S.size();
        if (!found || sz > out.size) {
            found = true;
            out.best = S;
            out.size = sz;
        }
    }, budget);
    if (!found) throw PreconditionError("max_valid_code: empty valid family");
    out.size_pow_l = big_pow(out.size, (unsigned long)l);
    return out;
}

// Dense action of A_h^m on a vector over F_2^{l x n}: out(x) = sum over the
// class of h of in(x + z), repeated m times.  Independent of the transform
// machinery on purpose.
inline GridFunction dense_operator_power(const Configuration& h, int m, const GridFunction& psi,
                                         long budget = 400'000'000) {
    if (psi.q() != 2) throw UnsupportedField("dense_operator_power: q = 2 only");
    GridFunction cur = psi.dense() ? psi : psi.expand();
    int l = cur.l(), n = cur.n();
    long N = cur.size();
    ConfigSpace cs(l, n, 2);
    long hrank = cs.rank(h);
    std::vector<long> cls;
    const std::vector<long>& tab = GridFunction::config_rank_table(l, n, 2);
    for (long i = 0; i < N; ++i)
        if (tab[i] == hrank) cls.push_back(i);
    if (N * (long)cls.size() * (long)m > budget)
        throw BudgetExceeded("dense_operator_power: class too large");
    for (int step = 0; step < m; ++step) {
        GridFunction nxt = GridFunction::zeros_dense(l, n, 2);
        for (long x = 0; x < N; ++x) {
            Rational s = 0;
            for (long z : cls) s += cur[x ^ z];
            nxt[x] = std::move(s);
        }
        cur = std::move(nxt);
    }
    return cur;
}

// Re-check an LPdual certificate through naive character double sums and
// per-point validity tests.  Exact, O(N^2).
inline FeasibilityReport audit_certificate(const LpDualCert& cert, long budget = 1 << 22) {
    if (cert.q() != 2) throw UnsupportedField("audit_certificate: q = 2 only");
    FeasibilityReport rep;
    GridFunction g = cert.g.dense() ? cert.g : cert.g.expand();
    long N = g.size();
    if (N * N > budget) throw BudgetExceeded("audit_certificate: N^2 too large");
    rep.objective = g[0];
    int l = cert.l, n = cert.n();

    Rational scale(1);
    scale /= big_pow(2, (unsigned long)l * n);
    for (long z = 0; z < N; ++z) {
        Rational s = 0;
        for (long x = 0; x < N; ++x) {
            int par = __builtin_parityll((unsigned long long)(z & x));
            if (par) s -= g[x];
            else s += g[x];
        }
        s *= scale;
        if (z == 0 && s != 1)
            rep.violations.push_back({"normalization", 0, rat_to_string(s), "= 1"});
        if (s < 0) rep.violations.push_back({"fourier", z, rat_to_string(s), ">= 0"});
    }
    for (long i = 1; i < N; ++i) {
        FqMat X = mat_from_index(i, l, n, 2);
        if (!matrix_valid(X, cert.spec)) continue;
        Rational lhs = g[i];
        if (cert.beta) lhs += cert.beta->at(X) - cert.beta->at(mat_neg(X));
        if (lhs > 0) rep.violations.push_back({"validity", i, rat_to_string(lhs), "<= 0"});
    }
    rep.status = rep.violations.empty() ? FeasibilityReport::Status::feasible
                                        : FeasibilityReport::Status::infeasible;
    return rep;
}

// The dense primal LP, solved exactly for tiny shapes.
inline LpProblem build_dense_primal(const ValidSpec& spec, int l) {
    if (spec.q != 2) throw UnsupportedField("build_dense_primal: q = 2 only");
    long N = dense_points(l, spec.n, 2);
    if (N > (1 << 10)) throw BudgetExceeded("build_dense_primal: q^(ln) > 2^10");
    LpProblem p;
    p.maximize = true;
    std::vector<std::string> names(N);
    for (long i = 0; i < N; ++i) names[i] = "x" + std::to_string(i);
    p.set_cols(names);
    for (long i = 0; i < N; ++i) p.objective[i] = 1;
    {
        std::vector<Rational> row(N, Rational(0));
        row[0] = 1;
        p.add_row("normalization", row, 'E', 1);
    }
    std::vector<char> valid = valid_bitmap(spec, l);
    for (long i = 1; i < N; ++i) {
        if (valid[i]) continue;
        std::vector<Rational> row(N, Rational(0));
        row[i] = 1;
        p.add_row("invalid_" + std::to_string(i), row, 'E', 0);
    }
    for (long z = 0; z < N; ++z) {
        std::vector<Rational> row(N);
        for (long x = 0; x < N; ++x)
            row[x] = __builtin_parityll((unsigned long long)(z & x)) ? Rational(-1) : Rational(1);
        p.add_row("fourier_" + std::to_string(z), row, 'G', 0);
    }
    return p;
}

inline Rational primal_optimum_dense(const ValidSpec& spec, int l) {
    LpProblem p = build_dense_primal(spec, l);
    LpSolution s = solve(p);
    if (s.status != LpSolution::Status::optimal)
        throw std::logic_error("primal_optimum_dense: dense LP not optimal");
    return s.objective;
}

} // namespace dlpcert

#endif
