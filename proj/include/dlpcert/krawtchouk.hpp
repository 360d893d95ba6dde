#ifndef DLPCERT_KRAWTCHOUK_HPP
#define DLPCERT_KRAWTCHOUK_HPP

#include <map>
#include <vector>

#include "certificates.hpp"
#include "config_space.hpp"
#include "simplex.hpp"
#include "valid.hpp"

namespace dlpcert {

// Higher-order Krawtchouk polynomial K_h(g): the character sum
// sum_{X in class h} chi(<X, Y>) for any fixed Y in class g, computed as a
// contingency-table sum over joint configurations.  Exact integer for q = 2.
//
// The enumeration of tables with margins g (column) and h (row) explodes for
// larger shapes, so tables are summed by a DP over column values w with
// memoization on (w, remaining row margins).
class KrawtchoukEvaluator {
public:
    KrawtchoukEvaluator(int l, int n, int q) : l_(l), n_(n), q_(q), B_(pow_long(q, l)) {
        if (q_ != 2) throw UnsupportedField("KrawtchoukEvaluator: exact values need q = 2");
        // <u,w> over F_2, for column values u,w
        dot_.assign(B_ * B_, 0);
        for (long u = 0; u < B_; ++u)
            for (long w = 0; w < B_; ++w) {
                long x = u & w;
                int parity = 0;
                while (x) { parity ^= (x & 1); x >>= 1; }
                dot_[u * B_ + w] = (char)parity;
            }
    }

    BigInt eval(const Configuration& h, const Configuration& g) {
        if (h.n() != n_ || g.n() != n_) throw ShapeMismatch("kraw_eval: wrong n");
        memo_.clear();
        g_ = &g;
        return rec(0, h.counts);
    }

private:
    int l_, n_, q_;
    long B_;
    std::vector<char> dot_;
    const Configuration* g_ = nullptr;
    std::map<std::pair<long, std::vector<long>>, BigInt> memo_;

    // sum over ways to fill columns w.. with remaining row margins r
    BigInt rec(long w, const std::vector<long>& r) {
        if (w == B_) return 1; // all margins consumed (both sum to n)
        auto key = std::make_pair(w, r);
        auto it = memo_.find(key);
        if (it != memo_.end()) return it->second;
        BigInt total = 0;
        std::vector<long> part(B_, 0), rem = r;
        enumerate(w, 0, g_->counts[w], part, rem, total);
        memo_.emplace(std::move(key), total);
        return total;
    }

    // distribute `left` columns of value w among rows u = pos.. ; part[u] is
    // F(u, w), rem the margins still available
    void enumerate(long w, long pos, long left, std::vector<long>& part, std::vector<long>& rem,
                   BigInt& total) {
        if (pos == B_ - 1) {
            if (left > rem[pos]) return;
            part[pos] = left;
            rem[pos] -= left;
            BigInt term = multinomial(g_->counts[w], part);
            int sign = 0;
            for (long u = 0; u < B_; ++u)
                if (part[u] & 1) sign ^= dot_[u * B_ + w];
            BigInt rest = rec(w + 1, rem);
            if (sign) total -= term * rest;
            else total += term * rest;
            rem[pos] += left;
            part[pos] = 0;
            return;
        }
        long hi = std::min(left, rem[pos]);
        for (long c = 0; c <= hi; ++c) {
            part[pos] = c;
            rem[pos] -= c;
            enumerate(w, pos + 1, left - c, part, rem, total);
            rem[pos] += c;
            part[pos] = 0;
        }
    }
};

inline BigInt kraw_eval(const Configuration& h, const Configuration& g) {
    KrawtchoukEvaluator ev(h.l, (int)h.n(), h.q);
    return ev.eval(h, g);
}

// Full table over Config x Config; row index = h rank, column = g rank.
struct KrawtchoukTable {
    int l = 1, n = 1, q = 2;
    long count = 0;
    std::vector<BigInt> entries; // count x count

    const BigInt& at(long h_rank, long g_rank) const { return entries[h_rank * count + g_rank]; }
};

inline KrawtchoukTable build_krawtchouk_table(int l, int n, int q, long budget = 4'000'000) {
    ConfigSpace cs(l, n, q);
    long C = cs.count();
    if (C * C > budget) throw BudgetExceeded("krawtchouk table: " + std::to_string(C * C));
    KrawtchoukTable t;
    t.l = l; t.n = n; t.q = q; t.count = C;
    t.entries.resize(C * C);
    KrawtchoukEvaluator ev(l, n, q);
    std::vector<Configuration> cfgs(C);
    for (long r = 0; r < C; ++r) cfgs[r] = cs.unrank(r);
    for (long hr = 0; hr < C; ++hr)
        for (long gr = 0; gr < C; ++gr) t.entries[hr * C + gr] = ev.eval(cfgs[hr], cfgs[gr]);
    return t;
}

// --- symmetry-reduced LP builders --------------------------------------------

struct KlpBundle {
    LpProblem primal;   // variables f(g) = class sums, one per configuration
    LpProblem dual;     // the stated dual: variables f(g) >= 0
    long zero_rank = 0; // rank of config(0)
    std::vector<long> kraw_row_of_config; // primal row index of each Krawtchouk row
};

inline KlpBundle build_klp(const ValidSpec& spec, int l, long budget = 4'000'000) {
    int n = spec.n, q = spec.q;
    ConfigSpace cs(l, n, q);
    long C = cs.count();
    KrawtchoukTable K = build_krawtchouk_table(l, n, q, budget);

    std::vector<Configuration> cfgs(C);
    std::vector<char> valid(C);
    for (long r = 0; r < C; ++r) {
        cfgs[r] = cs.unrank(r);
        valid[r] = config_valid(cfgs[r], spec) ? 1 : 0;
    }
    Configuration zero;
    zero.l = l; zero.q = q;
    zero.counts.assign(pow_long(q, l), 0);
    zero.counts[0] = n;
    long zr = cs.rank(zero);

    KlpBundle out;
    out.zero_rank = zr;
    std::vector<std::string> names(C);
    for (long r = 0; r < C; ++r) names[r] = "f_" + std::to_string(r);

    // primal: max sum_g f(g)
    LpProblem& P = out.primal;
    P.maximize = true;
    P.set_cols(names);
    for (long r = 0; r < C; ++r) P.objective[r] = 1;
    {
        std::vector<Rational> row(C, Rational(0));
        row[zr] = 1;
        P.add_row("normalization", row, 'E', 1);
    }
    for (long r = 0; r < C; ++r) {
        if (valid[r]) continue;
        std::vector<Rational> row(C, Rational(0));
        row[r] = 1;
        P.add_row("invalid_" + std::to_string(r), row, 'E', 0);
    }
    out.kraw_row_of_config.assign(C, -1);
    for (long hr = 0; hr < C; ++hr) {
        std::vector<Rational> row(C);
        for (long gr = 0; gr < C; ++gr) row[gr] = Rational(K.at(hr, gr));
        out.kraw_row_of_config[hr] = (long)P.rows.size();
        P.add_row("kraw_" + std::to_string(hr), row, 'G', 0);
    }
    if (q > 2) {
        for (long r = 0; r < C; ++r) {
            long nr = cs.rank(negate_config(cfgs[r]));
            if (nr <= r) continue;
            std::vector<Rational> row(C, Rational(0));
            row[r] = 1;
            row[nr] = -1;
            P.add_row("symmetry_" + std::to_string(r), row, 'E', 0);
        }
    }

    // stated dual: min 1 + sum_g K_g(config(0)) f(g)
    //   s.t. 1 + sum_g K_g(h) f(g) <= 0 for valid h != config(0), f >= 0
    LpProblem& D = out.dual;
    D.maximize = false;
    D.objective_constant = 1;
    D.set_cols(names);
    for (long gr = 0; gr < C; ++gr) D.objective[gr] = Rational(K.at(gr, zr));
    for (long hr = 0; hr < C; ++hr) {
        if (!valid[hr] || hr == zr) continue;
        std::vector<Rational> row(C);
        for (long gr = 0; gr < C; ++gr) row[gr] = Rational(K.at(gr, hr));
        D.add_row("validity_" + std::to_string(hr), row, 'L', -1);
    }
    return out;
}

// Dense certificate from a feasible solution of the stated dual.  The dense
// function G(X) = 1 + sum_g f(g) K_g(config(X)) has hat G = 1_0 + sum_g f(g)
// 1_{class g}; dividing by hat G(0) = 1 + f(config(0)) normalizes it.
inline LpDualCert klp_dual_to_certificate(const ValidSpec& spec, int l,
                                          const std::vector<Rational>& f) {
    int n = spec.n, q = spec.q;
    ConfigSpace cs(l, n, q);
    long C = cs.count();
    if ((long)f.size() != C) throw ShapeMismatch("klp_dual_to_certificate: wrong length");
    for (long r = 0; r < C; ++r)
        if (f[r] < 0) throw InfeasibleInput("klp_dual_to_certificate: f must be non-negative");
    KrawtchoukTable K = build_krawtchouk_table(l, n, q);
    Configuration zero;
    zero.l = l; zero.q = q;
    zero.counts.assign(pow_long(q, l), 0);
    zero.counts[0] = n;
    long zr = cs.rank(zero);

    GridFunction g = GridFunction::zeros_symmetric(l, n, q);
    for (long hr = 0; hr < C; ++hr) {
        Rational v = 1;
        for (long gr = 0; gr < C; ++gr)
            if (f[gr] != 0) v += f[gr] * Rational(K.at(gr, hr));
        g.values()[hr] = v;
    }
    Rational norm = 1 + f[zr];
    if (norm != 1)
        for (auto& v : g.values()) v /= norm;

    LpDualCert cert;
    cert.spec = spec;
    cert.l = l;
    cert.g = std::move(g);
    return cert;
}

// Pull the exact dual multipliers of the Krawtchouk rows out of a solved
// primal.  Our sign convention yields y <= 0 on >= rows of a max problem, so
// the dual variables of the stated dual are f(h) = -y_h.
inline std::vector<Rational> klp_dual_variables(const KlpBundle& bundle, const LpSolution& sol) {
    std::vector<Rational> f(bundle.kraw_row_of_config.size());
    for (size_t r = 0; r < f.size(); ++r) {
        Rational y = sol.dual.at(bundle.kraw_row_of_config[r]);
        f[r] = -y;
        if (f[r] < 0) throw std::logic_error("klp_dual_variables: negative multiplier");
    }
    return f;
}

inline void write_krawtchouk_csv(std::ostream& os, const KrawtchoukTable& t) {
    os << "h_rank";
    for (long g = 0; g < t.count; ++g) os << ",g" << g;
    os << "\n";
    for (long h = 0; h < t.count; ++h) {
        os << h;
        for (long g = 0; g < t.count; ++g) os << "," << t.at(h, g).get_str();
        os << "\n";
    }
}

} // namespace dlpcert

#endif
