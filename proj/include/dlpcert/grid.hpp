#ifndef DLPCERT_GRID_HPP
#define DLPCERT_GRID_HPP

#include <complex>
#include <cstdint>
#include <functional>
#include <map>
#include <tuple>
#include <vector>

#include "config_space.hpp"
#include "fq.hpp"
#include "rational.hpp"

namespace dlpcert {

// Hard cap on dense expansion: q^(l n) <= 2^24 entries.
inline constexpr double kDenseBudgetBits = 24.0;

inline long dense_points(int l, int n, int q, double budget_bits = kDenseBudgetBits) {
    double bits = double(l) * n * std::log2(double(q));
    if (bits > budget_bits)
        throw BudgetExceeded("dense grid needs " + std::to_string(bits) + " bits > budget " +
                             std::to_string(budget_bits));
    long s = 1;
    for (int i = 0; i < l * n; ++i) s *= q;
    return s;
}

// Exact-rational function on F_q^{l x n}.
//
// Two representations:
//   dense      one value per matrix, in the fixed row-major index order
//              (entry (1,1) is the most significant base-q digit);
//   symmetric  one value per S_n-orbit, indexed by ConfigSpace rank.  Only
//              meaningful for functions constant on configurations.
class GridFunction {
public:
    enum class Repr { dense, symmetric };

    GridFunction() = default;

    static GridFunction zeros_dense(int l, int n, int q, double budget_bits = kDenseBudgetBits) {
        GridFunction f;
        f.l_ = l; f.n_ = n; f.q_ = q; f.repr_ = Repr::dense;
        f.values_.assign(dense_points(l, n, q, budget_bits), Rational(0));
        return f;
    }

    static GridFunction zeros_symmetric(int l, int n, int q) {
        GridFunction f;
        f.l_ = l; f.n_ = n; f.q_ = q; f.repr_ = Repr::symmetric;
        f.values_.assign(ConfigSpace(l, n, q).count(), Rational(0));
        return f;
    }

    static GridFunction constant(int l, int n, int q, const Rational& c) {
        GridFunction f = zeros_symmetric(l, n, q);
        for (auto& v : f.values_) v = c;
        return f;
    }

    static GridFunction indicator_of_zero(int l, int n, int q) {
        GridFunction f = zeros_dense(l, n, q);
        f.values_[0] = 1;
        return f;
    }

    int l() const { return l_; }
    int n() const { return n_; }
    int q() const { return q_; }
    Repr repr() const { return repr_; }
    bool dense() const { return repr_ == Repr::dense; }
    long size() const { return (long)values_.size(); }

    std::vector<Rational>& values() { return values_; }
    const std::vector<Rational>& values() const { return values_; }

    Rational& operator[](long i) { return values_[i]; }
    const Rational& operator[](long i) const { return values_[i]; }

    const Rational& at(const FqMat& X) const {
        if (repr_ == Repr::dense) return values_[index_of(X)];
        ConfigSpace cs(l_, n_, q_);
        return values_[cs.rank(config_of(X))];
    }

    Rational at_zero() const {
        if (repr_ == Repr::dense) return values_[0];
        ConfigSpace cs(l_, n_, q_);
        Configuration z; z.l = l_; z.q = q_;
        z.counts.assign(pow_long(q_, l_), 0);
        z.counts[0] = n_;
        return values_[cs.rank(z)];
    }

    GridFunction expand(double budget_bits = kDenseBudgetBits) const {
        if (repr_ == Repr::dense) return *this;
        GridFunction out = zeros_dense(l_, n_, q_, budget_bits);
        ConfigSpace cs(l_, n_, q_);
        long N = out.size();
        std::vector<long> cfg_rank = config_rank_table(l_, n_, q_, budget_bits);
        for (long i = 0; i < N; ++i) out.values_[i] = values_[cfg_rank[i]];
        return out;
    }

    // Collapse a dense function to the symmetric representation, verifying
    // it really is constant on S_n-orbits.
    GridFunction collapse() const {
        if (repr_ == Repr::symmetric) return *this;
        GridFunction out = zeros_symmetric(l_, n_, q_);
        ConfigSpace cs(l_, n_, q_);
        std::vector<long> cfg_rank = config_rank_table(l_, n_, q_);
        std::vector<char> seen(out.size(), 0);
        for (long i = 0; i < size(); ++i) {
            long r = cfg_rank[i];
            if (!seen[r]) {
                out.values_[r] = values_[i];
                seen[r] = 1;
            } else if (out.values_[r] != values_[i]) {
                throw NotSymmetric("collapse: function not constant on S_n-orbits");
            }
        }
        return out;
    }

    // Dense-index -> configuration-rank table, shared by expand/collapse.
    static const std::vector<long>& config_rank_table(int l, int n, int q,
                                                      double budget_bits = kDenseBudgetBits) {
        struct Key { int l, n, q; bool operator<(const Key& o) const {
            return std::tie(l, n, q) < std::tie(o.l, o.n, o.q); } };
        static std::map<Key, std::vector<long>> cache;
        Key key{l, n, q};
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
        long N = dense_points(l, n, q, budget_bits);
        ConfigSpace cs(l, n, q);
        std::vector<long> tab(N);
        long B = pow_long(q, l);
        // column digits of each index, built incrementally in column-major order
        std::vector<long> colpow(n);
        for (long i = 0; i < N; ++i) {
            FqMat X = mat_from_index(i, l, n, q);
            Configuration g;
            g.l = l; g.q = q;
            g.counts.assign(B, 0);
            for (int j = 1; j <= n; ++j) ++g.counts[col_value(X, j)];
            tab[i] = cs.rank(g);
        }
        return cache.emplace(key, std::move(tab)).first->second;
    }

private:
    int l_ = 1, n_ = 1, q_ = 2;
    Repr repr_ = Repr::dense;
    std::vector<Rational> values_;
};

inline void require_same_shape(const GridFunction& a, const GridFunction& b, const char* who) {
    if (a.l() != b.l() || a.n() != b.n() || a.q() != b.q())
        throw ShapeMismatch(std::string(who) + ": shape mismatch");
}

inline GridFunction add(const GridFunction& a, const GridFunction& b) {
    require_same_shape(a, b, "add");
    const GridFunction& x = (a.repr() == b.repr()) ? a : a.expand();
    const GridFunction& y = (a.repr() == b.repr()) ? b : b.expand();
    GridFunction out = x;
    for (long i = 0; i < out.size(); ++i) out[i] += y[i];
    return out;
}

inline GridFunction sub(const GridFunction& a, const GridFunction& b) {
    require_same_shape(a, b, "sub");
    const GridFunction& x = (a.repr() == b.repr()) ? a : a.expand();
    const GridFunction& y = (a.repr() == b.repr()) ? b : b.expand();
    GridFunction out = x;
    for (long i = 0; i < out.size(); ++i) out[i] -= y[i];
    return out;
}

inline GridFunction scale(const GridFunction& a, const Rational& c) {
    GridFunction out = a;
    for (long i = 0; i < out.size(); ++i) out[i] *= c;
    return out;
}

inline GridFunction pointwise_mul(const GridFunction& a, const GridFunction& b) {
    require_same_shape(a, b, "pointwise_mul");
    if (a.repr() != b.repr()) return pointwise_mul(a.expand(), b.expand());
    GridFunction out = a;
    for (long i = 0; i < out.size(); ++i) out[i] *= b[i];
    return out;
}

// --- transforms (q = 2, exact) -------------------------------------------

// In-place +/- butterflies over the given bit (from least significant).
inline void wht_bit(std::vector<Rational>& v, long bit) {
    long N = (long)v.size();
    long step = 1L << bit;
    for (long base = 0; base < N; base += 2 * step)
        for (long i = base; i < base + step; ++i) {
            Rational a = v[i] + v[i + step];
            Rational b = v[i] - v[i + step];
            v[i] = std::move(a);
            v[i + step] = std::move(b);
        }
}

// F_k over F_2: Walsh transform of the first k rows, identity on the rest,
// normalized by 2^{-kn}.  k = 0 is the identity, k = l the full Fourier
// transform with hat f(Z) = 2^{-ln} sum_X f(X) (-1)^{<Z,X>}.
inline GridFunction partial_fourier_f2(const GridFunction& f, int k) {
    if (f.q() != 2) throw PreconditionError("partial_fourier_f2: q must be 2");
    if (k < 0 || k > f.l()) throw PreconditionError("partial_fourier_f2: k out of range");
    GridFunction out = f.dense() ? f : f.expand();
    int l = f.l(), n = f.n();
    // rows 1..k occupy the top k*n digits
    for (long p = 0; p < (long)k * n; ++p) wht_bit(out.values(), (long)l * n - 1 - p);
    Rational s(1, 1);
    s /= big_pow(2, (unsigned long)k * n);
    for (auto& v : out.values()) v *= s;
    return out;
}

inline GridFunction fourier(const GridFunction& f) {
    if (f.q() != 2)
        throw UnsupportedField("fourier: exact transform only over F_2; use fourier_complex");
    return partial_fourier_f2(f, f.l());
}

// Inverse of fourier at q=2: unnormalized Walsh transform.
inline GridFunction inverse_fourier(const GridFunction& f) {
    if (f.q() != 2) throw UnsupportedField("inverse_fourier: q must be 2");
    GridFunction out = f.dense() ? f : f.expand();
    for (long b = 0; b < (long)f.l() * f.n(); ++b) wht_bit(out.values(), b);
    return out;
}

// --- group actions --------------------------------------------------------

// (f.M)(X) = f(M X)
inline GridFunction act_gl(const GridFunction& f, const FqMat& M) {
    if (M.rows() != f.l() || M.cols() != f.l() || M.q() != f.q())
        throw ShapeMismatch("act_gl: M must be l x l over the same field");
    GridFunction in = f.dense() ? f : f.expand();
    GridFunction out = in;
    int l = f.l(), n = f.n(), q = f.q();
    long B = pow_long(q, l);
    // column map c -> M c
    std::vector<long> pi(B);
    for (long c = 0; c < B; ++c) {
        FqMat col(l, 1, q);
        long cc = c;
        for (int i = l; i >= 1; --i) { col.at(i, 1) = (uint8_t)(cc % q); cc /= q; }
        FqMat mc = mat_mul(M, col);
        long v = 0;
        for (int i = 1; i <= l; ++i) v = v * q + mc.at(i, 1);
        pi[c] = v;
    }
    // scatter: value of column j's digits within the row-major index
    // column j (0-based) digit for row i sits at power (l n - 1) - (i n + j)
    std::vector<std::vector<long>> scatter(n, std::vector<long>(B, 0));
    for (int j = 0; j < n; ++j)
        for (long c = 0; c < B; ++c) {
            long v = 0, cc = c;
            std::vector<int> digs(l);
            for (int i = l - 1; i >= 0; --i) { digs[i] = int(cc % q); cc /= q; }
            for (int i = 0; i < l; ++i) {
                long p = (long)(l * n - 1) - ((long)i * n + j);
                long pw = 1;
                for (long t = 0; t < p; ++t) pw *= q;
                v += digs[i] * pw;
            }
            scatter[j][c] = v;
        }
    long N = in.size();
    for (long idx = 0; idx < N; ++idx) {
        // gather column values of X(idx), map through pi, scatter to target
        long rest = idx, tgt = 0;
        // recover digits row-major
        static thread_local std::vector<int> dig;
        dig.assign(l * n, 0);
        long r2 = idx;
        for (int p = l * n - 1; p >= 0; --p) { dig[p] = int(r2 % q); r2 /= q; }
        for (int j = 0; j < n; ++j) {
            long c = 0;
            for (int i = 0; i < l; ++i) c = c * q + dig[i * n + j];
            tgt += scatter[j][pi[c]];
        }
        (void)rest;
        out[idx] = in[tgt];
    }
    return out;
}

// F_{k,M}(f) = F_k(f.M) . M^{-1}
inline GridFunction partial_fourier_f2(const GridFunction& f, int k, const FqMat& M) {
    GridFunction t = act_gl(f, M);
    t = partial_fourier_f2(t, k);
    return act_gl(t, mat_inverse(M));
}

// Translation: adds z (a length-n row vector) to every row of the argument.
inline GridFunction act_translate(const GridFunction& f, const std::vector<uint8_t>& z) {
    if ((int)z.size() != f.n()) throw ShapeMismatch("act_translate: |z| != n");
    GridFunction in = f.dense() ? f : f.expand();
    GridFunction out = in;
    int l = f.l(), n = f.n(), q = f.q();
    const Field& F = Field::get(q);
    long N = in.size();
    for (long idx = 0; idx < N; ++idx) {
        FqMat X = mat_from_index(idx, l, n, q);
        for (int i = 1; i <= l; ++i)
            for (int j = 1; j <= n; ++j) X.at(i, j) = (uint8_t)F.add(X.at(i, j), z[j - 1]);
        out[idx] = in[index_of(X)];
    }
    return out;
}

// Column permutation: (sigma.X)_{ij} = X_{i sigma(j)}; sigma is 0-based.
inline GridFunction act_permute(const GridFunction& f, const std::vector<int>& sigma) {
    if ((int)sigma.size() != f.n()) throw ShapeMismatch("act_permute: |sigma| != n");
    if (!f.dense()) return f; // symmetric functions are S_n-invariant
    GridFunction out = f;
    int l = f.l(), n = f.n(), q = f.q();
    long N = f.size();
    for (long idx = 0; idx < N; ++idx) {
        FqMat X = mat_from_index(idx, l, n, q);
        FqMat Y(l, n, q);
        for (int i = 1; i <= l; ++i)
            for (int j = 1; j <= n; ++j) Y.at(i, j) = X.at(i, sigma[j - 1] + 1);
        out[idx] = f[index_of(Y)];
    }
    return out;
}

// --- convolution -----------------------------------------------------------

// Unnormalized-sum convolution (a*b)(X) = sum_W a(W) b(X-W).  Together with
// the 1/q^{ln}-normalized Fourier transform this gives hat(a.b) = hat a * hat b
// with no extra constant.
inline GridFunction convolve(const GridFunction& a, const GridFunction& b) {
    require_same_shape(a, b, "convolve");
    GridFunction x = a.dense() ? a : a.expand();
    GridFunction y = b.dense() ? b : b.expand();
    long N = x.size();
    if (N > (1L << 13))
        throw BudgetExceeded("convolve: quadratic convolution capped at 2^13 points");
    GridFunction out = GridFunction::zeros_dense(a.l(), a.n(), a.q());
    if (a.q() == 2) {
        for (long w = 0; w < N; ++w) {
            if (x[w] == 0) continue;
            for (long t = 0; t < N; ++t) out[w ^ t] += x[w] * y[t]; // X = W + T over F_2
        }
    } else {
        const Field& F = Field::get(a.q());
        int digits = a.l() * a.n(), q = a.q();
        for (long w = 0; w < N; ++w) {
            if (x[w] == 0) continue;
            for (long t = 0; t < N; ++t) {
                long acc = 0, ww = w, tt = t, pw = 1;
                // digit-wise field addition of indices (X = W + T)
                std::vector<int> dsum(digits);
                for (int p = digits - 1; p >= 0; --p) {
                    dsum[p] = F.add(int(ww % q), int(tt % q));
                    ww /= q; tt /= q;
                }
                for (int p = 0; p < digits; ++p) acc = acc * q + dsum[p];
                (void)pw;
                out[acc] += x[w] * y[t];
            }
        }
    }
    return out;
}

// --- complex transforms for odd q ------------------------------------------
//
// Characters over F_q for odd prime q cannot stay rational; these mirrors of
// the exact transforms are used only inside tolerance-qualified cone checks.

using CVec = std::vector<std::complex<double>>;

inline CVec to_complex(const GridFunction& f) {
    GridFunction d = f.dense() ? f : f.expand();
    CVec v(d.size());
    for (long i = 0; i < d.size(); ++i) v[i] = d[i].get_d();
    return v;
}

// DFT with kernel conj(chi), normalized 1/q^{kn}, over the top k*n digits.
inline CVec partial_fourier_complex(const GridFunction& f, int k) {
    int l = f.l(), n = f.n(), q = f.q();
    CVec v = to_complex(f);
    long N = (long)v.size();
    const double tau = 2.0 * 3.14159265358979323846 / q;
    std::vector<std::complex<double>> w(q);
    for (int j = 0; j < q; ++j) w[j] = {std::cos(tau * j), -std::sin(tau * j)};
    // digit p (from most significant); top k*n digits get a q-point DFT
    for (long p = 0; p < (long)k * n; ++p) {
        long pos = (long)l * n - 1 - p; // power index
        long stride = 1;
        for (long t = 0; t < pos; ++t) stride *= q;
        long block = stride * q;
        CVec tmp(q);
        for (long base = 0; base < N; base += block)
            for (long off = 0; off < stride; ++off) {
                for (int z = 0; z < q; ++z) {
                    std::complex<double> acc = 0;
                    for (int x = 0; x < q; ++x)
                        acc += v[base + off + (long)x * stride] * w[(z * x) % q];
                    tmp[z] = acc;
                }
                for (int z = 0; z < q; ++z) v[base + off + (long)z * stride] = tmp[z];
            }
    }
    double s = std::pow((double)q, -(double)k * n);
    for (auto& c : v) c *= s;
    return v;
}

inline CVec fourier_complex(const GridFunction& f) { return partial_fourier_complex(f, f.l()); }

} // namespace dlpcert

#endif
