#ifndef DLPCERT_CONFIG_SPACE_HPP
#define DLPCERT_CONFIG_SPACE_HPP

#include <vector>

#include "fq.hpp"
#include "qcomb.hpp"

namespace dlpcert {

// The configuration of X in F_q^{l x n} records, for each column value
// u in F_q^l, how many columns of X equal u.  It labels the S_n-orbit of X.
// Column values are identified with integers in [0, q^l) via the same
// big-endian digit order used for dense indices (row 1 most significant).
struct Configuration {
    int l = 1;
    int q = 2;
    std::vector<long> counts; // size q^l, summing to n

    long n() const {
        long s = 0;
        for (long c : counts) s += c;
        return s;
    }
    long buckets() const { return (long)counts.size(); }

    bool operator==(const Configuration& o) const {
        return l == o.l && q == o.q && counts == o.counts;
    }
    bool operator<(const Configuration& o) const { return counts < o.counts; }
};

inline long pow_long(int q, int e) {
    long r = 1;
    for (int i = 0; i < e; ++i) r *= q;
    return r;
}

inline int col_value(const FqMat& X, int j) {
    int v = 0;
    for (int i = 1; i <= X.rows(); ++i) v = v * X.q() + X.at(i, j);
    return v;
}

inline Configuration config_of(const FqMat& X) {
    Configuration g;
    g.l = X.rows();
    g.q = X.q();
    g.counts.assign(pow_long(X.q(), X.rows()), 0);
    for (int j = 1; j <= X.cols(); ++j) ++g.counts[col_value(X, j)];
    return g;
}

// |config^{-1}(g)| = n! / prod_u g(u)!
inline BigInt class_size(const Configuration& g) {
    return multinomial(g.n(), g.counts);
}

// g^-(u) = g(-u); trivial for q = 2.
inline Configuration negate_config(const Configuration& g) {
    const Field& F = Field::get(g.q);
    Configuration r = g;
    long B = g.buckets();
    for (long u = 0; u < B; ++u) {
        // negate each digit of u
        long v = 0, uu = u;
        std::vector<int> digs(g.l);
        for (int i = g.l - 1; i >= 0; --i) {
            digs[i] = int(uu % g.q);
            uu /= g.q;
        }
        for (int i = 0; i < g.l; ++i) v = v * g.q + F.neg(digs[i]);
        r.counts[v] = g.counts[u];
    }
    return r;
}

// Enumeration of Config_{n,l}: all ways of writing n as an ordered sum of
// q^l non-negative parts, ranked lexicographically by the counts vector.
class ConfigSpace {
public:
    ConfigSpace(int l, int n, int q) : l_(l), n_(n), q_(q), buckets_(pow_long(q, l)) {}

    long count() const { return compositions(n_, buckets_); }

    long rank(const Configuration& g) const {
        long r = 0;
        long rem = n_;
        for (long b = 0; b < buckets_ - 1; ++b) {
            long c = g.counts[b];
            for (long j = 0; j < c; ++j) r += compositions(rem - j, buckets_ - 1 - b);
            rem -= c;
        }
        return r;
    }

    Configuration unrank(long idx) const {
        Configuration g;
        g.l = l_;
        g.q = q_;
        g.counts.assign(buckets_, 0);
        long rem = n_;
        for (long b = 0; b < buckets_ - 1; ++b) {
            long c = 0;
            while (true) {
                long block = compositions(rem - c, buckets_ - 1 - b);
                if (idx < block) break;
                idx -= block;
                ++c;
            }
            g.counts[b] = c;
            rem -= c;
        }
        g.counts[buckets_ - 1] = rem;
        return g;
    }

    int l() const { return l_; }
    int n() const { return n_; }
    int q() const { return q_; }

private:
    int l_, n_, q_;
    long buckets_;

    // number of compositions of m into b non-negative parts
    static long compositions(long m, long b) {
        if (m < 0) return 0;
        if (b == 0) return m == 0 ? 1 : 0;
        BigInt c = binomial(m + b - 1, b - 1);
        return c.get_si();
    }
};

// Normalized configuration: exact-rational weights on F_2^l summing to 1.
struct NormalizedConfig {
    int l = 1;
    std::vector<Rational> weights; // size 2^l

    bool sums_to_one() const {
        Rational s = 0;
        for (const auto& w : weights) s += w;
        return s == 1;
    }
};

} // namespace dlpcert

#endif
