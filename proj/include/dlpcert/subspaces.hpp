#ifndef DLPCERT_SUBSPACES_HPP
#define DLPCERT_SUBSPACES_HPP

#include <functional>
#include <vector>

#include "fq.hpp"
#include "qcomb.hpp"

namespace dlpcert {

// A linear subspace of F_q^n, held as its reduced-row-echelon generator
// matrix (k x n, zero rows dropped).  RREF bases are canonical, so equality
// of subspaces is equality of bases.
struct Subspace {
    FqMat basis; // RREF, dim() rows

    int dim() const { return basis.rows(); }
    int n() const { return basis.cols(); }
    int q() const { return basis.q(); }

    BigInt size() const { return big_pow(q(), (unsigned long)dim()); }

    // Membership by elimination against the RREF pivots.
    bool contains(std::vector<uint8_t> v) const {
        const Field& F = Field::get(q());
        for (int i = 1; i <= dim(); ++i) {
            int piv = 0;
            for (int j = 1; j <= n(); ++j)
                if (basis.at(i, j)) { piv = j; break; }
            if (!piv) continue;
            int c = v[piv - 1];
            if (!c) continue;
            for (int j = 1; j <= n(); ++j)
                v[j - 1] = (uint8_t)F.sub(v[j - 1], F.mul(c, basis.at(i, j)));
        }
        for (uint8_t x : v)
            if (x) return false;
        return true;
    }

    bool contains_subspace(const Subspace& s) const {
        for (int i = 1; i <= s.dim(); ++i)
            if (!contains(s.basis.row(i))) return false;
        return true;
    }

    // All q^dim codewords, in the lexicographic order of coefficient tuples.
    std::vector<std::vector<uint8_t>> elements() const {
        const Field& F = Field::get(q());
        long total = 1;
        for (int i = 0; i < dim(); ++i) total *= q();
        std::vector<std::vector<uint8_t>> out;
        out.reserve(total);
        for (long code = 0; code < total; ++code) {
            std::vector<uint8_t> v(n(), 0);
            long c = code;
            for (int i = dim(); i >= 1; --i) {
                int coef = int(c % q());
                c /= q();
                if (coef)
                    for (int j = 1; j <= n(); ++j)
                        v[j - 1] = (uint8_t)F.add(v[j - 1], F.mul(coef, basis.at(i, j)));
            }
            out.push_back(std::move(v));
        }
        return out;
    }

    bool operator==(const Subspace& o) const { return basis == o.basis; }
};

// Visit every k-dimensional subspace of F_q^n exactly once, via RREF
// generator matrices: pivot columns chosen in lexicographic order, then the
// free entries counted through in lexicographic order.
inline void for_each_subspace_of_dim(int n, int q, int k,
                                     const std::function<void(const Subspace&)>& fn) {
    if (k == 0) {
        Subspace s{FqMat(0, n, q)};
        fn(s);
        return;
    }
    if (k > n) return;
    std::vector<int> piv(k);
    for (int i = 0; i < k; ++i) piv[i] = i; // 0-based pivot columns
    while (true) {
        // free positions: (i, j) with j > piv[i], j not a pivot
        std::vector<std::pair<int, int>> free_pos;
        std::vector<char> is_piv(n, 0);
        for (int i = 0; i < k; ++i) is_piv[piv[i]] = 1;
        for (int i = 0; i < k; ++i)
            for (int j = piv[i] + 1; j < n; ++j)
                if (!is_piv[j]) free_pos.emplace_back(i, j);
        long total = 1;
        for (size_t t = 0; t < free_pos.size(); ++t) total *= q;
        for (long code = 0; code < total; ++code) {
            FqMat B(k, n, q);
            for (int i = 0; i < k; ++i) B.at(i + 1, piv[i] + 1) = 1;
            long c = code;
            for (int t = (int)free_pos.size() - 1; t >= 0; --t) {
                B.at(free_pos[t].first + 1, free_pos[t].second + 1) = (uint8_t)(c % q);
                c /= q;
            }
            Subspace s{B};
            fn(s);
        }
        // next pivot combination (lexicographic)
        int i = k - 1;
        while (i >= 0 && piv[i] == n - k + i) --i;
        if (i < 0) break;
        ++piv[i];
        for (int j = i + 1; j < k; ++j) piv[j] = piv[j - 1] + 1;
    }
}

inline void for_each_subspace(int n, int q, const std::function<void(const Subspace&)>& fn,
                              long budget = 20'000'000) {
    BigInt total = 0;
    for (int k = 0; k <= n; ++k) total += gaussian_binomial(n, k, q);
    if (total > budget)
        throw BudgetExceeded("subspace enumeration: " + total.get_str() + " subspaces > budget");
    for (int k = 0; k <= n; ++k) for_each_subspace_of_dim(n, q, k, fn);
}

inline std::vector<Subspace> all_subspaces(int n, int q, long budget = 1'000'000) {
    std::vector<Subspace> out;
    for_each_subspace(n, q, [&](const Subspace& s) { out.push_back(s); }, budget);
    return out;
}

} // namespace dlpcert

#endif
