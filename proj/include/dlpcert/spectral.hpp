#ifndef DLPCERT_SPECTRAL_HPP
#define DLPCERT_SPECTRAL_HPP

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "certificates.hpp"
#include "config_space.hpp"
#include "grid.hpp"
#include "valid.hpp"

namespace dlpcert {

// Spectral construction of LPdual certificates for epsilon-balanced codes
// over F_2.  Everything below is q = 2.

// h_v: the configuration with one column equal to v and n-1 zero columns.
inline Configuration walk_step_config(int l, long n, long v) {
    Configuration h;
    h.l = l;
    h.q = 2;
    h.counts.assign(pow_long(2, l), 0);
    h.counts[0] = n - 1;
    h.counts[v] += 1;
    return h;
}

inline int parity_dot(long u, long v) {
    long x = u & v;
    int p = 0;
    while (x) { p ^= (int)(x & 1); x >>= 1; }
    return p;
}

// --- walk operators on symmetric functions -----------------------------------

// A_h psi for S_n-symmetric psi, via the contingency-table sum: for Y in
// class g, A_h psi(Y) = sum_{F in F_{g,h}} prod_v binom(g(v), F(-,v))
// Psi(config(X+Y)).  Tables are enumerated column-class by column-class.
class WalkApplier {
public:
    WalkApplier(int l, int n) : l_(l), n_(n), B_(pow_long(2, l)) {}

    GridFunction apply(const Configuration& h, const GridFunction& psi,
                       long table_budget = 50'000'000) {
        if (psi.repr() != GridFunction::Repr::symmetric)
            throw PreconditionError("apply_walk: psi must be configuration-indexed");
        if (psi.l() != l_ || psi.n() != n_ || psi.q() != 2)
            throw ShapeMismatch("apply_walk: shape");
        ConfigSpace cs(l_, n_, 2);
        GridFunction out = GridFunction::zeros_symmetric(l_, n_, 2);
        budget_ = table_budget;
        psi_ = &psi;
        cs_ = &cs;
        for (long gr = 0; gr < cs.count(); ++gr) {
            g_ = cs.unrank(gr);
            Rational acc = 0;
            std::vector<long> target(B_, 0), rem = h.counts;
            recurse(0, rem, target, Rational(1), acc);
            out.values()[gr] = acc;
        }
        return out;
    }

private:
    int l_, n_;
    long B_;
    long budget_ = 0;
    const GridFunction* psi_ = nullptr;
    const ConfigSpace* cs_ = nullptr;
    Configuration g_;

    // distribute g(v) for v = vcol into rows u (value F(u, vcol)); rem tracks
    // the unmet row margins h(u); target accumulates config(X+Y)
    void recurse(long vcol, std::vector<long>& rem, std::vector<long>& target, Rational weight,
                 Rational& acc) {
        if (vcol == B_) {
            Configuration t;
            t.l = l_;
            t.q = 2;
            t.counts = target;
            acc += weight * psi_->values()[cs_->rank(t)];
            return;
        }
        std::vector<long> part(B_, 0);
        distribute(vcol, 0, g_.counts[vcol], part, rem, target, weight, acc);
    }

    void distribute(long vcol, long u, long left, std::vector<long>& part,
                    std::vector<long>& rem, std::vector<long>& target, Rational weight,
                    Rational& acc) {
        if (--budget_ < 0) throw BudgetExceeded("apply_walk: contingency enumeration too large");
        if (u == B_ - 1) {
            if (left > rem[u]) return;
            part[u] = left;
            rem[u] -= left;
            target[u ^ vcol] += left;
            Rational w = weight * Rational(multinomial(g_.counts[vcol], part));
            recurse(vcol + 1, rem, target, w, acc);
            target[u ^ vcol] -= left;
            rem[u] += left;
            part[u] = 0;
            return;
        }
        long hi = std::min(left, rem[u]);
        for (long c = 0; c <= hi; ++c) {
            part[u] = c;
            rem[u] -= c;
            target[u ^ vcol] += c;
            distribute(vcol, u + 1, left - c, part, rem, target, weight, acc);
            target[u ^ vcol] -= c;
            rem[u] += c;
            part[u] = 0;
        }
    }
};

inline GridFunction apply_walk(const Configuration& h, const GridFunction& psi) {
    WalkApplier w(psi.l(), psi.n());
    return w.apply(h, psi);
}

// (A_v^m Lambda)(X) for X in class g0, Lambda the class indicator: exact
// closed-walk count by stepping the configuration one column flip at a time.
inline BigInt exact_walk_count(const Configuration& g0, long v, int m) {
    if (v <= 0) throw PreconditionError("exact_walk_count: v must be nonzero");
    std::map<std::vector<long>, BigInt> cur;
    cur[g0.counts] = 1;
    long B = (long)g0.counts.size();
    for (int step = 0; step < m; ++step) {
        std::map<std::vector<long>, BigInt> next;
        for (const auto& [c, w] : cur) {
            for (long t = 0; t < B; ++t) {
                if (!c[t]) continue;
                std::vector<long> c2 = c;
                --c2[t];
                ++c2[t ^ v];
                next[std::move(c2)] += w * c[t];
            }
        }
        cur = std::move(next);
    }
    auto it = cur.find(g0.counts);
    return it == cur.end() ? BigInt(0) : it->second;
}

// Leading term: sum over F: F_2^l -> N with F(u+v) = F(u), sum F = m, of
// binom(m, F) prod_u g0(u)^F(u).  Zero for odd m.
inline BigInt asymptotic_walk_count(const Configuration& g0, long v, int m) {
    if (v <= 0) throw PreconditionError("asymptotic_walk_count: v must be nonzero");
    if (m % 2) return 0;
    long B = (long)g0.counts.size();
    std::vector<std::pair<long, long>> pairs; // {u, u^v} with u < u^v
    for (long u = 0; u < B; ++u)
        if (u < (u ^ v)) pairs.emplace_back(u, u ^ v);
    long P = (long)pairs.size();
    BigInt total = 0;
    std::vector<long> a(P, 0);
    // enumerate compositions of m/2 into P parts
    std::function<void(long, long)> rec = [&](long pos, long left) {
        if (pos == P - 1) {
            a[pos] = left;
            std::vector<long> F(B, 0);
            for (long p = 0; p < P; ++p) {
                F[pairs[p].first] = a[p];
                F[pairs[p].second] = a[p];
            }
            BigInt term = multinomial(m, F);
            for (long u = 0; u < B; ++u)
                if (F[u]) term *= big_pow(BigInt(g0.counts[u]), (unsigned long)F[u]);
            total += term;
            return;
        }
        for (long c = 0; c <= left; ++c) {
            a[pos] = c;
            rec(pos + 1, left - c);
        }
    };
    if (P > 0) rec(0, m / 2);
    return total;
}

// --- the sign polynomial -------------------------------------------------------

inline void require_phi_preconditions(int l, int m, const Rational& eps) {
    if (m % 2) throw PreconditionError("phi: m must be even");
    if (eps <= 0 || eps > 1) throw PreconditionError("phi: eps must lie in (0,1]");
    // m >= (l-1)/lg(1/eps)  <=>  2^{l-1} eps^m <= 1, checked exactly
    Rational lhs = rat_pow(eps, (unsigned long)m) * Rational(big_pow(2, (unsigned long)(l - 1)));
    if (lhs > 1) throw PreconditionError("phi: m below the (l-1)/lg(1/eps) threshold");
}

// weights |vX| for all v, from the configuration
inline std::vector<long> combo_weights(const Configuration& g) {
    long B = (long)g.counts.size();
    std::vector<long> w(B, 0);
    for (long v = 1; v < B; ++v)
        for (long c = 0; c < B; ++c)
            if (g.counts[c] && parity_dot(v, c)) w[v] += g.counts[c];
    return w;
}

// phi_{m,u}(X) = sum_{v : <u,v> = 1} ((n - 2|vX|)^m - (eps n)^m)
inline Rational phi_mu(const Configuration& g, long u, int m, const Rational& eps) {
    long n = g.n();
    long B = (long)g.counts.size();
    std::vector<long> w = combo_weights(g);
    Rational epsn_m = rat_pow(eps * Rational((long)n), (unsigned long)m);
    Rational s = 0;
    for (long v = 0; v < B; ++v) {
        if (!parity_dot(u, v)) continue;
        BigInt base(n - 2 * w[v]);
        s += Rational(big_pow(base, (unsigned long)m)) - epsn_m;
    }
    return s;
}

inline Rational big_phi(const Configuration& g, int m, const Rational& eps) {
    require_phi_preconditions(g.l, m, eps);
    long B = (long)g.counts.size();
    Rational p = 1;
    for (long u = 1; u < B; ++u) p *= phi_mu(g, u, m, eps);
    return p;
}

inline Rational phi_mu(const FqMat& X, long u, int m, const Rational& eps) {
    return phi_mu(config_of(X), u, m, eps);
}

inline Rational big_phi(const FqMat& X, int m, const Rational& eps) {
    return big_phi(config_of(X), m, eps);
}

// Phi_m as a symmetric grid function.
inline GridFunction big_phi_function(int l, int n, int m, const Rational& eps) {
    require_phi_preconditions(l, m, eps);
    ConfigSpace cs(l, n, 2);
    GridFunction out = GridFunction::zeros_symmetric(l, n, 2);
    for (long r = 0; r < cs.count(); ++r) out.values()[r] = big_phi(cs.unrank(r), m, eps);
    return out;
}

// --- the operator M_m ----------------------------------------------------------

// W_u psi = sum_{v : <u,v> = 1} A_v^m psi
inline GridFunction apply_wu(const GridFunction& psi, long u, int m) {
    int l = psi.l();
    long B = pow_long(2, l);
    GridFunction acc = GridFunction::zeros_symmetric(l, psi.n(), 2);
    for (long v = 0; v < B; ++v) {
        if (!parity_dot(u, v)) continue;
        GridFunction t = psi;
        Configuration hv = walk_step_config(l, psi.n(), v);
        for (int i = 0; i < m; ++i) t = apply_walk(hv, t);
        for (long i = 0; i < acc.size(); ++i) acc[i] += t[i];
    }
    return acc;
}

// M_m = prod_{u != 0} B_{m,u},  B_{m,u} = W_u - 2^{l-1} (eps n)^m I
inline GridFunction apply_Mm(const GridFunction& psi, int m, const Rational& eps) {
    require_phi_preconditions(psi.l(), m, eps);
    int l = psi.l();
    long B = pow_long(2, l);
    Rational epsn_m = rat_pow(eps * Rational((long)psi.n()), (unsigned long)m);
    Rational cI = Rational(big_pow(2, (unsigned long)(l - 1))) * epsn_m;
    GridFunction cur = psi;
    for (long u = 1; u < B; ++u) {
        GridFunction w = apply_wu(cur, u, m);
        for (long i = 0; i < w.size(); ++i) w[i] -= cI * cur[i];
        cur = std::move(w);
    }
    return cur;
}

// The odd-subset decomposition of M_m; used to cross-check the product form.
// Expanding prod_u B_{m,u} over the maps u -> v(u) and redistributing the
// even-subset terms leaves a factor 2^{l-1} for every free map component,
// so the scalar between the operator products is (2^{l-1} (eps n)^m)^{2^l-1-|S|}.
inline GridFunction apply_Mm_decomposed(const GridFunction& psi, int m, const Rational& eps) {
    require_phi_preconditions(psi.l(), m, eps);
    int l = psi.l();
    long B = pow_long(2, l);
    long U = B - 1; // nonzero u's: 1..B-1
    Rational epsn_m = rat_pow(eps * Rational((long)psi.n()), (unsigned long)m);
    Rational half_group(big_pow(2, (unsigned long)(l - 1)));
    GridFunction total = GridFunction::zeros_symmetric(l, psi.n(), 2);
    for (long mask = 1; mask < (1L << U); ++mask) {
        int sz = __builtin_popcountll((unsigned long long)mask);
        if (sz % 2 == 0) continue;
        std::vector<long> S;
        for (long b = 0; b < U; ++b)
            if (mask & (1L << b)) S.push_back(b + 1);
        Rational outer = rat_pow(half_group * epsn_m, (unsigned long)(B - 1 - sz));
        for (long i : S) {
            // inner: (1/|S|) W_i psi - (2^{l-1} (eps n)^m / (2^l - |S|)) psi
            GridFunction t = apply_wu(psi, i, m);
            Rational c1(1, sz);
            Rational c2 = Rational(big_pow(2, (unsigned long)(l - 1))) * epsn_m;
            c2 /= Rational(B - sz);
            for (long x = 0; x < t.size(); ++x) t[x] = c1 * t[x] - c2 * psi[x];
            for (long u : S)
                if (u != i) t = apply_wu(t, u, m);
            for (long x = 0; x < t.size(); ++x) total[x] += outer * t[x];
        }
    }
    return total;
}

// --- configuration families -----------------------------------------------------

enum class ConfigFamily { vertex_uniform, quasirandom };

inline NormalizedConfig make_vertex_uniform(int l, const Rational& tau) {
    if (tau < 0 || Rational(l) * tau > 1)
        throw PreconditionError("vertex-uniform: need tau in [0, 1/l]");
    NormalizedConfig G;
    G.l = l;
    long B = pow_long(2, l);
    G.weights.assign(B, Rational(0));
    G.weights[0] = 1 - Rational(l) * tau;
    for (long u = 1; u < B; ++u)
        if (__builtin_popcountll((unsigned long long)u) == 1) G.weights[u] = tau;
    return G;
}

inline NormalizedConfig make_quasirandom(int l, const Rational& tau) {
    if (tau < 0 || tau > 1) throw PreconditionError("quasirandom: need tau in [0,1]");
    NormalizedConfig G;
    G.l = l;
    long B = pow_long(2, l);
    G.weights.assign(B, Rational(0));
    for (long u = 0; u < B; ++u) {
        int w = __builtin_popcountll((unsigned long long)u);
        G.weights[u] = rat_pow(tau, (unsigned long)w) * rat_pow(1 - tau, (unsigned long)(l - w));
    }
    return G;
}

struct TauChoice {
    double tau = 0;
    double residual = 0; // value of the defining equation at the returned tau
};

// Vertex-uniform: tau = (1 - sqrt(1 - l 2^{(4l-1)/m} m^{1/m} eps^2)) / (2l),
// equivalently the root of 4 l tau (1 - l tau) = l 2^{(4l-1)/m} m^{1/m} eps^2.
inline TauChoice choose_tau_vertex_uniform(const Rational& eps, int l, int m) {
    double e = eps.get_d();
    double coeff = double(l) * std::pow(2.0, (4.0 * l - 1.0) / m) * std::pow(double(m), 1.0 / m);
    double radicand = 1.0 - coeff * e * e;
    if (radicand < -1e-12)
        throw NoRoot("vertex-uniform tau: no real root; maximal legal eps = " +
                     std::to_string(std::sqrt(1.0 / coeff)));
    if (radicand < 0) radicand = 0; // boundary case up to rounding
    TauChoice t;
    t.tau = (1.0 - std::sqrt(radicand)) / (2.0 * l);
    t.residual = 4.0 * l * t.tau * (1.0 - l * t.tau) - coeff * e * e;
    return t;
}

// Quasirandom: first non-negative root of
//   4 tau (1-tau)^l (1 - 2 tau + 2 tau^2)^{l-1} - 2^{(4l-1)/m} m^{1/m} eps^2,
// found by scanning [0, 1/2] for the first sign change and bisecting.
inline TauChoice choose_tau_quasirandom(const Rational& eps, int l, int m) {
    double e = eps.get_d();
    double coeff = std::pow(2.0, (4.0 * l - 1.0) / m) * std::pow(double(m), 1.0 / m);
    auto p = [&](double t) {
        return 4.0 * t * std::pow(1.0 - t, l) * std::pow(1.0 - 2.0 * t + 2.0 * t * t, l - 1) -
               coeff * e * e;
    };
    const int steps = 1 << 14;
    double lo = 0.0, hi = -1.0;
    for (int i = 1; i <= steps; ++i) {
        double t = 0.5 * i / steps;
        if (p(t) >= 0) { hi = t; lo = 0.5 * (i - 1) / steps; break; }
    }
    if (hi < 0)
        throw NoRoot("quasirandom tau: expression negative on [0, 1/2]; eps too large");
    for (int it = 0; it < 100; ++it) {
        double mid = 0.5 * (lo + hi);
        if (p(mid) >= 0) hi = mid;
        else lo = mid;
    }
    TauChoice t;
    t.tau = hi;
    t.residual = p(hi);
    return t;
}

inline TauChoice choose_tau(ConfigFamily family, const Rational& eps, int l, int m) {
    return family == ConfigFamily::vertex_uniform ? choose_tau_vertex_uniform(eps, l, m)
                                                  : choose_tau_quasirandom(eps, l, m);
}

// Largest-remainder rounding of n G to a configuration; ties broken by
// lexicographically smaller column value.
inline Configuration build_lambda_config(const NormalizedConfig& G, int n) {
    long B = (long)G.weights.size();
    Configuration g;
    g.l = G.l;
    g.q = 2;
    g.counts.assign(B, 0);
    long assigned = 0;
    std::vector<Rational> frac(B);
    for (long u = 0; u < B; ++u) {
        Rational t = Rational(n) * G.weights[u];
        BigInt fl = t.get_num() / t.get_den(); // exact floor for t >= 0
        g.counts[u] = fl.get_si();
        assigned += g.counts[u];
        frac[u] = t - Rational(fl);
    }
    std::vector<long> order(B);
    for (long u = 0; u < B; ++u) order[u] = u;
    std::stable_sort(order.begin(), order.end(), [&](long a, long b) {
        if (frac[a] != frac[b]) return frac[a] > frac[b];
        return a < b;
    });
    for (long i = 0; i < n - assigned; ++i) ++g.counts[order[i]];
    return g;
}

inline GridFunction class_indicator(const Configuration& g) {
    GridFunction f = GridFunction::zeros_symmetric(g.l, (int)g.n(), 2);
    ConfigSpace cs(g.l, (int)g.n(), 2);
    f.values()[cs.rank(g)] = 1;
    return f;
}

inline double entropy(const NormalizedConfig& G) {
    double h = 0;
    for (const auto& w : G.weights) {
        double x = w.get_d();
        if (x > 0) h -= x * std::log2(x);
    }
    return h;
}

inline double mrrw_leading(double eps) { return eps * eps * std::log2(1.0 / eps) / 4.0; }

// --- end-to-end construction -----------------------------------------------------

struct SpectralParams {
    int l = 1;
    int m = 2;
    Rational eps = Rational(1, 2);
    int n = 8;
    ConfigFamily family = ConfigFamily::vertex_uniform;
    std::optional<double> tau; // override; otherwise choose_tau
    double dense_budget_bits = kDenseBudgetBits;
};

struct SpectralDiagnostics {
    Rational objective;   // f(0)
    double rate = 0;      // lg f(0) / n
    double entropy = 0;   // H2(G)
    Rational min_fourier; // min_Z hat f(Z), exact
    bool sign_check = false;
    bool walk_hypothesis = false;
    std::vector<std::pair<long, Rational>> walk_margins; // per |v| = 1
    double tau = 0;
    double tau_residual = 0;
    Configuration lambda_config;
    bool feasible = false;
};

struct SpectralResult {
    LpDualCert cert;
    SpectralDiagnostics diag;
};

inline SpectralResult build_spectral_certificate(const SpectralParams& p) {
    require_phi_preconditions(p.l, p.m, p.eps);
    TauChoice tc;
    if (p.tau) {
        tc.tau = *p.tau;
        tc.residual = 0;
    } else {
        tc = choose_tau(p.family, p.eps, p.l, p.m);
    }
    Rational tau_exact = rat_from_double(tc.tau);
    NormalizedConfig G = p.family == ConfigFamily::vertex_uniform
                             ? make_vertex_uniform(p.l, tau_exact)
                             : make_quasirandom(p.l, tau_exact);
    Configuration g0 = build_lambda_config(G, p.n);

    GridFunction Lambda = class_indicator(g0).expand(p.dense_budget_bits);
    GridFunction Lhat = fourier(Lambda);
    GridFunction Lhat2 = pointwise_mul(Lhat, Lhat);
    GridFunction Phi = big_phi_function(p.l, p.n, p.m, p.eps).expand(p.dense_budget_bits);
    GridFunction F = pointwise_mul(Phi, Lhat2);
    GridFunction Fhat = fourier(F);
    if (Fhat[0] == 0)
        throw DegenerateInput("spectral: hat F(0) = 0, cannot normalize");
    Rational inv = 1 / Fhat[0];
    GridFunction f = scale(F, inv);
    GridFunction fhat = scale(Fhat, inv);

    SpectralResult out;
    out.cert.spec = ValidSpec::balanced(p.n, p.eps);
    out.cert.l = p.l;
    out.cert.g = f;

    SpectralDiagnostics& d = out.diag;
    d.lambda_config = g0;
    d.tau = tc.tau;
    d.tau_residual = tc.residual;
    d.objective = f[0];
    d.rate = d.objective > 0 ? lg(d.objective) / p.n : 0;
    d.entropy = entropy(G);
    d.min_fourier = fhat[0];
    for (long z = 0; z < fhat.size(); ++z)
        if (fhat[z] < d.min_fourier) d.min_fourier = fhat[z];

    std::vector<char> valid = valid_bitmap(out.cert.spec, p.l, p.dense_budget_bits);
    d.sign_check = true;
    for (long i = 1; i < f.size(); ++i)
        if (valid[i] && f[i] > 0) { d.sign_check = false; break; }

    // finite-n walk hypothesis: A_v^m Lambda >= (2^{2l-1} (eps n)^m + 1) Lambda,
    // measured exactly on the class for every |v| = 1
    Rational bound = Rational(big_pow(2, (unsigned long)(2 * p.l - 1))) *
                         rat_pow(p.eps * Rational(p.n), (unsigned long)p.m) +
                     1;
    long B = pow_long(2, p.l);
    std::map<long, bool> margin_ok;
    for (long v = 1; v < B; ++v) {
        if (__builtin_popcountll((unsigned long long)v) != 1) continue;
        Rational margin = Rational(exact_walk_count(g0, v, p.m)) - bound;
        d.walk_margins.emplace_back(v, margin);
        margin_ok[v] = margin >= 0;
    }
    d.walk_hypothesis = true;
    for (long i = 1; i < B; ++i) {
        bool ok = false;
        for (const auto& [v, good] : margin_ok)
            if (good && parity_dot(i, v)) { ok = true; break; }
        if (!ok) { d.walk_hypothesis = false; break; }
    }

    FeasibilityReport rep = check_lpdual(out.cert);
    d.feasible = rep.feasible();
    return out;
}

} // namespace dlpcert

#endif
