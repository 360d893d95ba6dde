#ifndef DLPCERT_VALID_HPP
#define DLPCERT_VALID_HPP

#include <functional>
#include <vector>

#include "config_space.hpp"
#include "fq.hpp"
#include "grid.hpp"
#include "rational.hpp"

namespace dlpcert {

// The family of admissible linear codes.  A vector is admissible if it is
// zero or meets the weight condition; a matrix is admissible if its whole
// row span is (equivalently, every row combination uX is an admissible
// vector).
struct ValidSpec {
    enum class Kind { distance_at_least, epsilon_balanced, dim_at_most };
    Kind kind = Kind::distance_at_least;
    int n = 1;
    int q = 2;
    int d = 1;        // distance_at_least
    Rational eps = 0; // epsilon_balanced, exact rational in (0,1]
    int k = 0;        // dim_at_most

    static ValidSpec distance(int n, int q, int d) {
        ValidSpec s; s.kind = Kind::distance_at_least; s.n = n; s.q = q; s.d = d;
        return s;
    }
    static ValidSpec balanced(int n, const Rational& eps) {
        if (eps <= 0) throw PreconditionError("balanced: eps must be positive");
        ValidSpec s; s.kind = Kind::epsilon_balanced; s.n = n; s.q = 2; s.eps = eps;
        return s;
    }
    static ValidSpec dim_at_most(int n, int q, int k) {
        ValidSpec s; s.kind = Kind::dim_at_most; s.n = n; s.q = q; s.k = k;
        return s;
    }
};

inline int hamming_weight(const std::vector<uint8_t>& x) {
    int w = 0;
    for (uint8_t v : x)
        if (v) ++w;
    return w;
}

// Weight window test shared by the vector and configuration paths.
// The balanced window is the exact comparison (1-eps) n <= 2w <= (1+eps) n.
inline bool weight_valid(long w, const ValidSpec& spec) {
    switch (spec.kind) {
        case ValidSpec::Kind::distance_at_least:
            return w == 0 || w >= spec.d;
        case ValidSpec::Kind::epsilon_balanced: {
            if (w == 0) return true;
            Rational lo = (1 - spec.eps) * spec.n;
            Rational hi = (1 + spec.eps) * spec.n;
            Rational twow = 2 * Rational(w);
            return lo <= twow && twow <= hi;
        }
        case ValidSpec::Kind::dim_at_most:
            return true;
    }
    return false;
}

inline bool vector_valid(const std::vector<uint8_t>& x, const ValidSpec& spec) {
    if ((int)x.size() != spec.n) throw ShapeMismatch("vector_valid: wrong length");
    if (spec.kind == ValidSpec::Kind::epsilon_balanced && spec.q != 2)
        throw UnsupportedField("epsilon-balanced codes are defined over F_2 only");
    return weight_valid(hamming_weight(x), spec);
}

// uX for u encoded as an integer in [0, q^l) with the usual digit order.
inline std::vector<uint8_t> row_combination(const FqMat& X, long u) {
    const Field& F = Field::get(X.q());
    int l = X.rows(), n = X.cols(), q = X.q();
    std::vector<int> ud(l);
    for (int i = l - 1; i >= 0; --i) { ud[i] = int(u % q); u /= q; }
    std::vector<uint8_t> r(n, 0);
    for (int i = 0; i < l; ++i) {
        if (!ud[i]) continue;
        for (int j = 0; j < n; ++j)
            r[j] = (uint8_t)F.add(r[j], F.mul(ud[i], X.at(i + 1, j + 1)));
    }
    return r;
}

inline bool matrix_valid(const FqMat& X, const ValidSpec& spec) {
    if (X.cols() != spec.n || X.q() != spec.q) throw ShapeMismatch("matrix_valid: wrong shape");
    if (spec.kind == ValidSpec::Kind::dim_at_most) return rank(X) <= spec.k;
    long B = pow_long(spec.q, X.rows());
    for (long u = 1; u < B; ++u)
        if (!vector_valid(row_combination(X, u), spec)) return false;
    return true;
}

// Validity of a whole S_n-orbit.  |uX| depends only on config(X):
// it is the total count of columns c with <u,c> != 0.  Rank is also
// configuration-determined (span of the distinct column values present).
inline bool config_valid(const Configuration& g, const ValidSpec& spec) {
    const Field& F = Field::get(g.q);
    long B = g.buckets();
    int l = g.l, q = g.q;
    if (spec.kind == ValidSpec::Kind::dim_at_most) {
        // rank of any X in the class = dim span of the present column values
        std::vector<std::vector<uint8_t>> cols;
        for (long c = 0; c < B; ++c)
            if (g.counts[c]) {
                std::vector<uint8_t> v(l);
                long cc = c;
                for (int i = l - 1; i >= 0; --i) { v[i] = (uint8_t)(cc % q); cc /= q; }
                cols.push_back(v);
            }
        FqMat M((int)cols.size() ? (int)cols.size() : 1, l, q);
        for (int i = 0; i < (int)cols.size(); ++i)
            for (int j = 0; j < l; ++j) M.at(i + 1, j + 1) = cols[i][j];
        return (cols.empty() ? 0 : rank(M)) <= spec.k;
    }
    if (spec.kind == ValidSpec::Kind::epsilon_balanced && q != 2)
        throw UnsupportedField("epsilon-balanced codes are defined over F_2 only");
    for (long u = 1; u < B; ++u) {
        long w = 0;
        std::vector<int> ud(l);
        long uu = u;
        for (int i = l - 1; i >= 0; --i) { ud[i] = int(uu % q); uu /= q; }
        for (long c = 0; c < B; ++c) {
            if (!g.counts[c]) continue;
            long cc = c;
            int dot = 0;
            std::vector<int> cd(l);
            for (int i = l - 1; i >= 0; --i) { cd[i] = int(cc % q); cc /= q; }
            for (int i = 0; i < l; ++i) dot = F.add(dot, F.mul(ud[i], cd[i]));
            if (dot) w += g.counts[c];
        }
        if (!weight_valid(w, spec)) return false;
    }
    return true;
}

// Dense-order iteration over {X : matrix_valid(X, spec)}.
inline void enumerate_valid_matrices(const ValidSpec& spec, int l,
                                     const std::function<void(long, const FqMat&)>& fn) {
    long N = dense_points(l, spec.n, spec.q);
    for (long i = 0; i < N; ++i) {
        FqMat X = mat_from_index(i, l, spec.n, spec.q);
        if (matrix_valid(X, spec)) fn(i, X);
    }
}

// Per-index validity bitmap in dense order, computed once per scan via the
// configuration table (validity is S_n-invariant).
inline std::vector<char> valid_bitmap(const ValidSpec& spec, int l,
                                      double budget_bits = kDenseBudgetBits) {
    long N = dense_points(l, spec.n, spec.q, budget_bits);
    ConfigSpace cs(l, spec.n, spec.q);
    std::vector<char> per_cfg(cs.count());
    for (long r = 0; r < cs.count(); ++r) per_cfg[r] = config_valid(cs.unrank(r), spec) ? 1 : 0;
    const std::vector<long>& tab = GridFunction::config_rank_table(l, spec.n, spec.q, budget_bits);
    std::vector<char> out(N);
    for (long i = 0; i < N; ++i) out[i] = per_cfg[tab[i]];
    return out;
}

} // namespace dlpcert

#endif
