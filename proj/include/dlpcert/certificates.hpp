#ifndef DLPCERT_CERTIFICATES_HPP
#define DLPCERT_CERTIFICATES_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "grid.hpp"
#include "subspaces.hpp"
#include "valid.hpp"

namespace dlpcert {

struct Violation {
    std::string constraint;
    long witness = 0; // dense indexits or enumeration index, per constraint family
    std::string lhs;
    std::string relation;
};

struct FeasibilityReport {
    enum class Status { feasible, infeasible, feasible_within_tolerance };
    Status status = Status::feasible;
    std::vector<Violation> violations;
    Rational objective = 0;

    bool feasible() const { return status == Status::feasible; }
    bool accepted() const { return status != Status::infeasible; }

    static const char* status_name(Status s) {
        switch (s) {
            case Status::feasible: return "feasible";
            case Status::infeasible: return "infeasible";
            case Status::feasible_within_tolerance: return "feasible-within-tolerance";
        }
        return "?";
    }
};

struct CheckOptions {
    double dense_budget_bits = kDenseBudgetBits;
    long work_cap = (1L << 31); // cap on |GL| * q^{ln} in the symmetrized checker
    bool use_orbit_sums = false; // orbit-deduplication fast path (identical report)
    double tol = 1e-9;           // complex-character checks for odd q
};

// --- certificate payloads ---------------------------------------------------

// Dual of the plain (full Fourier) hierarchy: g with hat g(0)=1, hat g >= 0,
// g + beta - beta(-.) <= 0 on Valid \ {0}.  beta is redundant for q a power
// of two and may be omitted.
struct LpDualCert {
    ValidSpec spec;
    int l = 1;
    GridFunction g;
    std::optional<GridFunction> beta;

    int q() const { return g.q(); }
    int n() const { return g.n(); }
    Rational objective() const { return g.at_zero(); }
};

// Dual of the GL-symmetrized partial Fourier hierarchy: one g_k per level.
struct SymmDualCert {
    ValidSpec spec;
    int l = 1;
    std::vector<GridFunction> g; // g[k-1] for k in [l]

    int q() const { return g.at(0).q(); }
    int n() const { return g.at(0).n(); }
    Rational objective() const {
        Rational v = 1;
        for (const auto& gk : g) v += gk.at_zero();
        return v;
    }
};

// Dual of the partial Fourier hierarchy: a function h_{k,M} per pair (k,M).
// Only nonzero components are stored.
struct PlpComponent {
    int k = 1;
    FqMat M;
    GridFunction h;
};

struct PlpDualCert {
    ValidSpec spec;
    int l = 1;
    int qq = 2, nn = 1;
    std::vector<PlpComponent> comps;
    std::optional<GridFunction> beta;

    int q() const { return qq; }
    int n() const { return nn; }
};

// F_{k,M}(f)(0) = q^{-kn} sum over Z with bottom rows zero of f(M Z);
// exact for every q and cheap, used for objectives.
inline Rational partial_fourier_at_zero(const GridFunction& f, int k, const FqMat& M) {
    GridFunction d = f.dense() ? f : f.expand();
    int l = f.l(), n = f.n(), q = f.q();
    long topN = 1;
    for (int i = 0; i < k * n; ++i) topN *= q;
    long shift = 1;
    for (int i = 0; i < (l - k) * n; ++i) shift *= q;
    Rational s = 0;
    bool ident = (M == FqMat::identity(l, q));
    for (long w = 0; w < topN; ++w) {
        long idx = w * shift; // bottom rows zero
        if (ident) {
            s += d[idx];
        } else {
            FqMat Z = mat_from_index(idx, l, n, q);
            s += d[index_of(mat_mul(M, Z))];
        }
    }
    Rational scale(1);
    scale /= big_pow(q, (unsigned long)k * n);
    return s * scale;
}

inline Rational plp_objective(const PlpDualCert& c) {
    Rational v = 1;
    for (const auto& comp : c.comps) v += partial_fourier_at_zero(comp.h, comp.k, comp.M);
    return v;
}

// Dual of the subspace (Moebius) formulation: alpha plus dimension-indexed
// beta and gamma (the closed-form construction only ever needs these).
struct MDualCert {
    ValidSpec spec;
    int l = 1; // hierarchy level
    Rational alpha = 0;
    std::vector<Rational> beta_by_dim;  // size n+1
    std::vector<Rational> gamma_by_dim; // size n+1

    Rational objective() const { return alpha; }
};

// --- trivial certificates ---------------------------------------------------

// g = q^{ln} 1_0: hat g = 1 everywhere, objective q^{ln}.
inline LpDualCert trivial_lpdual(const ValidSpec& spec, int l) {
    LpDualCert c;
    c.spec = spec;
    c.l = l;
    c.g = GridFunction::indicator_of_zero(l, spec.n, spec.q);
    Rational v(big_pow(spec.q, (unsigned long)l * spec.n));
    c.g[0] = v;
    return c;
}

// g_u = 0 for u < l, g_l = q^{ln} 1_0 - 1: objective q^{ln}, validity tight.
inline SymmDualCert trivial_symm(const ValidSpec& spec, int l) {
    SymmDualCert c;
    c.spec = spec;
    c.l = l;
    for (int k = 1; k <= l; ++k) c.g.push_back(GridFunction::zeros_dense(l, spec.n, spec.q));
    GridFunction& gl = c.g.back();
    Rational v(big_pow(spec.q, (unsigned long)l * spec.n));
    gl[0] = v - 1;
    for (long i = 1; i < gl.size(); ++i) gl[i] = -1;
    return c;
}

// --- index helpers ----------------------------------------------------------

inline std::vector<long> negation_index_table(int l, int n, int q) {
    long N = dense_points(l, n, q);
    std::vector<long> t(N);
    if (q == 2) {
        for (long i = 0; i < N; ++i) t[i] = i;
        return t;
    }
    for (long i = 0; i < N; ++i) t[i] = index_of(mat_neg(mat_from_index(i, l, n, q)));
    return t;
}

// Row-major index -> column-major index (digits = columns, base q^l).
inline std::vector<long> rowmajor_to_colmajor(int l, int n, int q) {
    long N = dense_points(l, n, q);
    long B = pow_long(q, l);
    std::vector<long> t(N);
    for (long i = 0; i < N; ++i) {
        FqMat X = mat_from_index(i, l, n, q);
        long cm = 0;
        for (int j = 1; j <= n; ++j) cm = cm * B + col_value(X, j);
        t[i] = cm;
    }
    return t;
}

// --- check: LPdual ----------------------------------------------------------

inline FeasibilityReport check_lpdual(const LpDualCert& cert, const CheckOptions& opts = {}) {
    FeasibilityReport rep;
    const ValidSpec& spec = cert.spec;
    GridFunction g = cert.g.dense() ? cert.g : cert.g.expand(opts.dense_budget_bits);
    rep.objective = g[0];
    int l = cert.l, n = spec.n, q = spec.q;
    if (g.l() != l || g.n() != n || g.q() != q) throw ShapeMismatch("check_lpdual: payload shape");
    std::optional<GridFunction> beta;
    if (cert.beta) beta = cert.beta->dense() ? *cert.beta : cert.beta->expand();

    bool used_tolerance = false;
    if (q == 2) {
        GridFunction gh = fourier(g);
        if (gh[0] != 1)
            rep.violations.push_back({"normalization", 0, rat_to_string(gh[0]), "= 1"});
        for (long z = 0; z < gh.size(); ++z)
            if (gh[z] < 0)
                rep.violations.push_back({"fourier", z, rat_to_string(gh[z]), ">= 0"});
    } else {
        used_tolerance = true;
        CVec gh = fourier_complex(g);
        if (std::abs(gh[0] - std::complex<double>(1, 0)) > opts.tol)
            rep.violations.push_back({"normalization", 0, std::to_string(gh[0].real()), "= 1"});
        for (long z = 0; z < (long)gh.size(); ++z) {
            if (std::abs(gh[z].imag()) > opts.tol || gh[z].real() < -opts.tol)
                rep.violations.push_back({"fourier", z, std::to_string(gh[z].real()), ">= 0"});
        }
    }

    std::vector<char> valid = valid_bitmap(spec, l, opts.dense_budget_bits);
    std::vector<long> negidx;
    if (beta) negidx = negation_index_table(l, n, q);
    for (long i = 1; i < g.size(); ++i) {
        if (!valid[i]) continue;
        Rational lhs = g[i];
        if (beta) lhs += (*beta)[i] - (*beta)[negidx[i]];
        if (lhs > 0) rep.violations.push_back({"validity", i, rat_to_string(lhs), "<= 0"});
    }

    rep.status = !rep.violations.empty() ? FeasibilityReport::Status::infeasible
                 : used_tolerance        ? FeasibilityReport::Status::feasible_within_tolerance
                                         : FeasibilityReport::Status::feasible;
    return rep;
}

// --- check: symmetrized partial Fourier dual --------------------------------

// T(X) = sum_{k,M} g_k(M X) for all X at once.  Direct path: iterate the
// whole group with an integer-scaled accumulator.  Orbit path: row spans
// classify GL-orbits, so sum_M s(M X) = |GL| / |orbit(X)| * sum_{orbit} s.
inline std::vector<Rational> gl_pullback_sum(const std::vector<GridFunction>& gs,
                                             const GLGroup& gl, bool use_orbit_sums) {
    const GridFunction& g0 = gs.at(0);
    int l = g0.l(), n = g0.n(), q = g0.q();
    long N = g0.size();
    // s = sum_k g_k, dense
    std::vector<Rational> s((size_t)N, Rational(0));
    for (const auto& gk : gs) {
        const GridFunction d = gk.dense() ? gk : gk.expand();
        for (long i = 0; i < N; ++i) s[i] += d[i];
    }

    if (use_orbit_sums) {
        std::map<std::vector<uint8_t>, long> orbit_id;
        std::vector<long> id_of(N);
        std::vector<Rational> orbit_sum;
        std::vector<long> orbit_count;
        for (long i = 0; i < N; ++i) {
            FqMat R = rref_basis(mat_from_index(i, l, n, q));
            std::vector<uint8_t> key;
            key.push_back((uint8_t)R.rows());
            key.insert(key.end(), R.entries().begin(), R.entries().end());
            auto [it, fresh] = orbit_id.emplace(std::move(key), (long)orbit_sum.size());
            if (fresh) {
                orbit_sum.push_back(Rational(0));
                orbit_count.push_back(0);
            }
            id_of[i] = it->second;
            orbit_sum[it->second] += s[i];
            ++orbit_count[it->second];
        }
        BigInt order = gl_order(l, q);
        std::vector<Rational> T((size_t)N);
        for (long i = 0; i < N; ++i) {
            Rational t = orbit_sum[id_of[i]];
            t *= Rational(order);
            t /= orbit_count[id_of[i]];
            T[i] = t;
        }
        return T;
    }

    // scale s to integers
    BigInt L = 1;
    for (long i = 0; i < N; ++i)
        mpz_lcm(L.get_mpz_t(), L.get_mpz_t(), s[i].get_den().get_mpz_t());
    std::vector<BigInt> a((size_t)N);
    BigInt amax = 0;
    for (long i = 0; i < N; ++i) {
        a[i] = s[i].get_num() * (L / s[i].get_den());
        BigInt m = abs(a[i]);
        if (m > amax) amax = m;
    }
    bool fits64 = (amax * (long)gl.elements.size()) < BigInt("4611686018427387904"); // 2^62

    // accumulate in column-major order so the GL action is digit-local
    std::vector<long> rm2cm = rowmajor_to_colmajor(l, n, q);
    long B = pow_long(q, l);
    int n1 = n / 2, n2 = n - n1;
    long hiN = 1, loN = 1;
    for (int i = 0; i < n1; ++i) hiN *= B;
    for (int i = 0; i < n2; ++i) loN *= B;

    std::vector<int64_t> s64, acc64;
    std::vector<BigInt> sbig, accbig;
    if (fits64) {
        s64.assign(N, 0);
        acc64.assign(N, 0);
        for (long i = 0; i < N; ++i) s64[rm2cm[i]] = (int64_t)a[i].get_si();
    } else {
        sbig.assign(N, 0);
        accbig.assign(N, 0);
        for (long i = 0; i < N; ++i) sbig[rm2cm[i]] = a[i];
    }

    std::vector<long> pi(B), TA(hiN), TB(loN);
    for (const FqMat& M : gl.elements) {
        for (long c = 0; c < B; ++c) {
            FqMat col(l, 1, q);
            long cc = c;
            for (int i = l; i >= 1; --i) { col.at(i, 1) = (uint8_t)(cc % q); cc /= q; }
            FqMat mc = mat_mul(M, col);
            long v = 0;
            for (int i = 1; i <= l; ++i) v = v * q + mc.at(i, 1);
            pi[c] = v;
        }
        for (long h = 0; h < hiN; ++h) {
            long v = 0, hh = h;
            std::vector<long> digs(n1);
            for (int j = n1 - 1; j >= 0; --j) { digs[j] = hh % B; hh /= B; }
            for (int j = 0; j < n1; ++j) v = v * B + pi[digs[j]];
            TA[h] = v * loN;
        }
        for (long lo = 0; lo < loN; ++lo) {
            long v = 0, ll = lo;
            std::vector<long> digs(n2);
            for (int j = n2 - 1; j >= 0; --j) { digs[j] = ll % B; ll /= B; }
            for (int j = 0; j < n2; ++j) v = v * B + pi[digs[j]];
            TB[lo] = v;
        }
        if (fits64) {
            for (long x = 0; x < N; ++x) acc64[x] += s64[TA[x / loN] + TB[x % loN]];
        } else {
            for (long x = 0; x < N; ++x) accbig[x] += sbig[TA[x / loN] + TB[x % loN]];
        }
    }

    std::vector<Rational> T((size_t)N);
    for (long i = 0; i < N; ++i) {
        Rational t = fits64 ? Rational((long)acc64[rm2cm[i]]) : Rational(accbig[rm2cm[i]]);
        t /= Rational(L);
        T[i] = t;
    }
    return T;
}

inline FeasibilityReport check_symmp(const SymmDualCert& cert, const CheckOptions& opts = {}) {
    FeasibilityReport rep;
    const ValidSpec& spec = cert.spec;
    int l = cert.l, n = spec.n, q = spec.q;
    if ((int)cert.g.size() != l) throw ShapeMismatch("check_symmp: need one g_k per level");
    rep.objective = cert.objective();

    long N = dense_points(l, n, q, opts.dense_budget_bits);
    BigInt work = gl_order(l, q) * N;
    if (work > opts.work_cap)
        throw BudgetExceeded("check_symmp: |GL| * q^(ln) = " + work.get_str() + " > work cap");

    bool used_tolerance = false;
    for (int k = 1; k <= l; ++k) {
        if (q == 2) {
            GridFunction Fk = partial_fourier_f2(cert.g[k - 1], k);
            for (long z = 0; z < Fk.size(); ++z)
                if (Fk[z] < 0)
                    rep.violations.push_back({"partial_fourier k=" + std::to_string(k), z,
                                              rat_to_string(Fk[z]), ">= 0"});
        } else {
            used_tolerance = true;
            CVec Fk = partial_fourier_complex(cert.g[k - 1], k);
            for (long z = 0; z < (long)Fk.size(); ++z)
                if (std::abs(Fk[z].imag()) > opts.tol || Fk[z].real() < -opts.tol)
                    rep.violations.push_back({"partial_fourier k=" + std::to_string(k), z,
                                              std::to_string(Fk[z].real()), ">= 0"});
        }
    }

    GLGroup gl = enumerate_gl(l, q);
    std::vector<Rational> T = gl_pullback_sum(cert.g, gl, opts.use_orbit_sums);
    Rational order(gl_order(l, q));
    std::vector<char> valid = valid_bitmap(spec, l, opts.dense_budget_bits);
    for (long i = 1; i < N; ++i) {
        if (!valid[i]) continue;
        Rational lhs = 1 + T[i] / order;
        if (lhs > 0) rep.violations.push_back({"validity", i, rat_to_string(lhs), "<= 0"});
    }

    rep.status = !rep.violations.empty() ? FeasibilityReport::Status::infeasible
                 : used_tolerance        ? FeasibilityReport::Status::feasible_within_tolerance
                                         : FeasibilityReport::Status::feasible;
    return rep;
}

// --- check: partial Fourier dual ---------------------------------------------

inline FeasibilityReport check_plp(const PlpDualCert& cert, const CheckOptions& opts = {}) {
    FeasibilityReport rep;
    const ValidSpec& spec = cert.spec;
    int l = cert.l, n = spec.n, q = spec.q;
    long N = dense_points(l, n, q, opts.dense_budget_bits);

    for (size_t ci = 0; ci < cert.comps.size(); ++ci) {
        const GridFunction h = cert.comps[ci].h.dense() ? cert.comps[ci].h
                                                        : cert.comps[ci].h.expand();
        for (long i = 0; i < h.size(); ++i)
            if (h[i] < 0)
                rep.violations.push_back({"non-negativity h[" + std::to_string(ci) + "]", i,
                                          rat_to_string(h[i]), ">= 0"});
    }

    if (q != 2) throw UnsupportedField("check_plp: exact path requires q = 2");

    GridFunction SF = GridFunction::zeros_dense(l, n, q, opts.dense_budget_bits);
    for (const auto& comp : cert.comps) {
        GridFunction F = partial_fourier_f2(comp.h.dense() ? comp.h : comp.h.expand(), comp.k,
                                            comp.M);
        for (long i = 0; i < N; ++i) SF[i] += F[i];
    }
    rep.objective = 1 + SF[0];

    std::optional<GridFunction> beta;
    if (cert.beta) beta = cert.beta->dense() ? *cert.beta : cert.beta->expand();
    std::vector<char> valid = valid_bitmap(spec, l, opts.dense_budget_bits);
    for (long i = 1; i < N; ++i) {
        if (!valid[i]) continue;
        Rational lhs = 1 + SF[i];
        if (beta) lhs += (*beta)[i] - (*beta)[i]; // q=2: -X = X, beta cancels
        if (lhs > 0) rep.violations.push_back({"validity", i, rat_to_string(lhs), "<= 0"});
    }

    rep.status = rep.violations.empty() ? FeasibilityReport::Status::feasible
                                        : FeasibilityReport::Status::infeasible;
    return rep;
}

// --- check: subspace (Moebius) dual ------------------------------------------

inline bool subspace_valid(const Subspace& S, const ValidSpec& spec) {
    if (spec.kind == ValidSpec::Kind::dim_at_most) return S.dim() <= spec.k;
    for (const auto& v : S.elements())
        if (!vector_valid(v, spec)) return false;
    return true;
}

inline FeasibilityReport check_mdual(const MDualCert& cert, const CheckOptions& opts = {}) {
    FeasibilityReport rep;
    rep.objective = cert.alpha;
    const ValidSpec& spec = cert.spec;
    int n = spec.n, q = spec.q, l = cert.l;

    for (int d = 0; d <= n; ++d) {
        Rational b = d < (int)cert.beta_by_dim.size() ? cert.beta_by_dim[d] : Rational(0);
        Rational c = d < (int)cert.gamma_by_dim.size() ? cert.gamma_by_dim[d] : Rational(0);
        if (b < 0)
            rep.violations.push_back({"beta non-negativity", d, rat_to_string(b), ">= 0"});
        if (c < 0)
            rep.violations.push_back({"gamma non-negativity", d, rat_to_string(c), ">= 0"});
    }

    std::vector<Subspace> subs = all_subspaces(n, q);
    auto beta_of = [&](int d) {
        return d < (int)cert.beta_by_dim.size() ? cert.beta_by_dim[d] : Rational(0);
    };
    auto gamma_of = [&](int d) {
        return d < (int)cert.gamma_by_dim.size() ? cert.gamma_by_dim[d] : Rational(0);
    };
    for (long si = 0; si < (long)subs.size(); ++si) {
        const Subspace& S = subs[si];
        if (!subspace_valid(S, spec)) continue;
        Rational lhs(big_pow(q, (unsigned long)l * S.dim()));
        Rational up = 0, down = 0;
        for (const Subspace& T : subs) {
            if (T.dim() >= S.dim() && T.contains_subspace(S)) up += beta_of(T.dim());
            if (S.dim() >= T.dim() && S.contains_subspace(T)) down += gamma_of(T.dim());
        }
        lhs += Rational(big_pow(q, (unsigned long)l * S.dim())) * up + down;
        if (lhs != cert.alpha)
            rep.violations.push_back(
                {"equality to objective", si, rat_to_string(lhs), "= " + rat_to_string(cert.alpha)});
    }

    rep.status = rep.violations.empty() ? FeasibilityReport::Status::feasible
                                        : FeasibilityReport::Status::infeasible;
    return rep;
}

// --- maps between formulations -----------------------------------------------

// g_k = sum_M F_{k,M}(h_{k,M}) . M  (beta drops in the GL average).
inline SymmDualCert symmetrize(const PlpDualCert& cert) {
    SymmDualCert out;
    out.spec = cert.spec;
    out.l = cert.l;
    for (int k = 1; k <= cert.l; ++k)
        out.g.push_back(GridFunction::zeros_dense(cert.l, cert.n(), cert.q()));
    for (const auto& comp : cert.comps) {
        GridFunction F = partial_fourier_f2(comp.h.dense() ? comp.h : comp.h.expand(), comp.k,
                                            comp.M);
        GridFunction FM = act_gl(F, comp.M);
        GridFunction& gk = out.g[comp.k - 1];
        for (long i = 0; i < gk.size(); ++i) gk[i] += FM[i];
    }
    return out;
}

// h_{k,M} = (q^{kn}/|GL|) F_k(g_k) . M^{-1}, beta = 0.  (The lemma's proof
// form; it makes every h_{k,M} non-negative whenever F_k(g_k) >= 0.)
inline PlpDualCert desymmetrize(const SymmDualCert& cert) {
    PlpDualCert out;
    out.spec = cert.spec;
    out.l = cert.l;
    out.qq = cert.q();
    out.nn = cert.n();
    GLGroup gl = enumerate_gl(cert.l, cert.q());
    Rational invord(1);
    invord /= Rational(gl_order(cert.l, cert.q()));
    for (int k = 1; k <= cert.l; ++k) {
        GridFunction Fk = partial_fourier_f2(cert.g[k - 1], k);
        Rational c = Rational(big_pow(cert.q(), (unsigned long)k * cert.n())) * invord;
        GridFunction base = scale(Fk, c);
        for (const FqMat& M : gl.elements) {
            PlpComponent comp;
            comp.k = k;
            comp.M = M;
            comp.h = act_gl(base, mat_inverse(M));
            out.comps.push_back(std::move(comp));
        }
    }
    return out;
}

// LPdual -> pLPdual with h_{l,I} = q^{ln} (hat g - 1_0), all other h zero.
inline PlpDualCert embed_lpdual(const LpDualCert& cert) {
    if (cert.q() != 2) throw UnsupportedField("embed_lpdual: exact path requires q = 2");
    PlpDualCert out;
    out.spec = cert.spec;
    out.l = cert.l;
    out.qq = cert.q();
    out.nn = cert.n();
    GridFunction gh = fourier(cert.g.dense() ? cert.g : cert.g.expand());
    gh[0] -= 1;
    Rational c(big_pow(cert.q(), (unsigned long)cert.l * cert.n()));
    PlpComponent comp;
    comp.k = cert.l;
    comp.M = FqMat::identity(cert.l, cert.q());
    comp.h = scale(gh, c);
    out.comps.push_back(std::move(comp));
    if (cert.beta) out.beta = cert.beta;
    return out;
}

// A level-1 LPdual certificate is a level-1 symmetrized certificate with
// g_1 = g - 1 (validity row 1 + g_1 <= 0 becomes g <= 0).
inline SymmDualCert lpdual_to_symm_level1(const LpDualCert& cert) {
    if (cert.l != 1) throw PreconditionError("lpdual_to_symm_level1: level-1 only");
    if (cert.q() != 2) throw UnsupportedField("lpdual_to_symm_level1: q = 2 only");
    SymmDualCert out;
    out.spec = cert.spec;
    out.l = 1;
    GridFunction g1 = cert.g.dense() ? cert.g : cert.g.expand();
    for (long i = 0; i < g1.size(); ++i) g1[i] -= 1;
    out.g.push_back(std::move(g1));
    return out;
}

// Natural primal solution from a code: f_C(X) = 1[rows of X all in C].
inline std::pair<BigInt, GridFunction> primal_from_code(const Subspace& C, int l) {
    int n = C.n(), q = C.q();
    GridFunction f = GridFunction::zeros_dense(l, n, q);
    long N = f.size();
    BigInt total = 0;
    for (long i = 0; i < N; ++i) {
        FqMat X = mat_from_index(i, l, n, q);
        bool in = true;
        for (int r = 1; r <= l && in; ++r)
            if (!C.contains(X.row(r))) in = false;
        if (in) {
            f[i] = 1;
            ++total;
        }
    }
    return {total, std::move(f)};
}

} // namespace dlpcert

#endif
