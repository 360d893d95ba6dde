#ifndef DLPCERT_FQ_HPP
#define DLPCERT_FQ_HPP

#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <vector>

#include "errors.hpp"
#include "qcomb.hpp"

namespace dlpcert {

// Supported fields: prime q, plus q = 4 realized as F_2[x]/(x^2+x+1) with
// elements encoded as 2-bit polynomials.  Larger prime powers are out of
// scope.  Arithmetic goes through small lookup tables so matrix kernels stay
// branch-free.
class Field {
public:
    int q;

    int add(int a, int b) const { return add_[a * q + b]; }
    int sub(int a, int b) const { return add_[a * q + neg_[b]]; }
    int mul(int a, int b) const { return mul_[a * q + b]; }
    int neg(int a) const { return neg_[a]; }
    int inv(int a) const {
        if (a == 0) throw PreconditionError("Field::inv(0)");
        return inv_[a];
    }

    static const Field& get(int q) {
        static std::map<int, std::unique_ptr<Field>> cache;
        auto it = cache.find(q);
        if (it == cache.end())
            it = cache.emplace(q, std::unique_ptr<Field>(new Field(q))).first;
        return *it->second;
    }

private:
    std::vector<int> add_, mul_, neg_, inv_;

    static bool is_prime(int q) {
        if (q < 2) return false;
        for (int d = 2; d * d <= q; ++d)
            if (q % d == 0) return false;
        return true;
    }

    explicit Field(int q_) : q(q_) {
        const bool prime = is_prime(q);
        if (!prime && q != 4)
            throw UnsupportedField("field order " + std::to_string(q) +
                                   " not supported (prime q or q=4 only)");
        add_.resize(q * q);
        mul_.resize(q * q);
        neg_.resize(q);
        inv_.assign(q, 0);
        for (int a = 0; a < q; ++a)
            for (int b = 0; b < q; ++b) {
                if (prime) {
                    add_[a * q + b] = (a + b) % q;
                    mul_[a * q + b] = (a * b) % q;
                } else { // q = 4, basis {1, x}, x^2 = x + 1
                    add_[a * q + b] = a ^ b;
                    int c = 0;
                    // carry-less multiply then reduce mod x^2+x+1
                    if (b & 1) c ^= a;
                    if (b & 2) c ^= a << 1;
                    if (c & 4) c ^= 0b111; // replace x^2 by x+1
                    mul_[a * q + b] = c & 3;
                }
            }
        for (int a = 0; a < q; ++a) {
            neg_[a] = prime ? (q - a) % q : a;
            for (int b = 1; b < q; ++b)
                if (mul_[a * q + b] == 1) inv_[a] = b;
        }
    }
};

// A single field element carrying its modulus.  Matrix code works on raw
// digits for speed; this type is for API-level scalar arithmetic.
struct FqScalar {
    int value = 0;
    int q = 2;

    FqScalar() = default;
    FqScalar(int v, int q_) : value(v % q_), q(q_) {
        if (value < 0) value += q_;
        Field::get(q_); // validate field order
    }

    FqScalar operator+(FqScalar o) const { return {Field::get(q).add(value, o.value), q}; }
    FqScalar operator-(FqScalar o) const { return {Field::get(q).sub(value, o.value), q}; }
    FqScalar operator*(FqScalar o) const { return {Field::get(q).mul(value, o.value), q}; }
    FqScalar inverse() const { return {Field::get(q).inv(value), q}; }
    bool operator==(const FqScalar& o) const { return value == o.value && q == o.q; }
};

// Matrix over F_q.  Row/column indices are 1-based at the API surface,
// mirroring the X_{1..t} row-restriction convention.
class FqMat {
public:
    FqMat() = default;
    FqMat(int rows, int cols, int q)
        : rows_(rows), cols_(cols), q_(q), e_((size_t)rows * cols, 0) {
        Field::get(q);
    }

    static FqMat zero(int rows, int cols, int q) { return FqMat(rows, cols, q); }

    static FqMat identity(int n, int q) {
        FqMat m(n, n, q);
        for (int i = 1; i <= n; ++i) m.at(i, i) = 1;
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    int q() const { return q_; }

    uint8_t& at(int i, int j) { return e_[(size_t)(i - 1) * cols_ + (j - 1)]; }
    uint8_t at(int i, int j) const { return e_[(size_t)(i - 1) * cols_ + (j - 1)]; }

    const std::vector<uint8_t>& entries() const { return e_; }
    std::vector<uint8_t>& entries() { return e_; }

    bool is_zero() const {
        for (uint8_t v : e_)
            if (v) return false;
        return true;
    }

    // Rows i..j inclusive (1-based); X_{i,...,j} in the usual notation.
    FqMat row_restrict(int i, int j) const {
        if (i < 1 || j > rows_ || i > j + 1)
            throw PreconditionError("row_restrict: bad range");
        FqMat r(j - i + 1, cols_, q_);
        for (int a = i; a <= j; ++a)
            for (int b = 1; b <= cols_; ++b) r.at(a - i + 1, b) = at(a, b);
        return r;
    }

    std::vector<uint8_t> row(int i) const {
        std::vector<uint8_t> r(cols_);
        for (int j = 1; j <= cols_; ++j) r[j - 1] = at(i, j);
        return r;
    }

    // Column j as a vector of length rows().
    std::vector<uint8_t> col(int j) const {
        std::vector<uint8_t> c(rows_);
        for (int i = 1; i <= rows_; ++i) c[i - 1] = at(i, j);
        return c;
    }

    friend bool operator==(const FqMat& a, const FqMat& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.q_ == b.q_ && a.e_ == b.e_;
    }
    friend bool operator!=(const FqMat& a, const FqMat& b) { return !(a == b); }
    friend bool operator<(const FqMat& a, const FqMat& b) { return a.e_ < b.e_; }

private:
    int rows_ = 0, cols_ = 0, q_ = 2;
    std::vector<uint8_t> e_;
};

inline FqMat mat_mul(const FqMat& a, const FqMat& b) {
    if (a.cols() != b.rows() || a.q() != b.q())
        throw ShapeMismatch("mat_mul: incompatible shapes");
    const Field& F = Field::get(a.q());
    FqMat c(a.rows(), b.cols(), a.q());
    for (int i = 1; i <= a.rows(); ++i)
        for (int k = 1; k <= a.cols(); ++k) {
            int aik = a.at(i, k);
            if (!aik) continue;
            for (int j = 1; j <= b.cols(); ++j)
                c.at(i, j) = (uint8_t)F.add(c.at(i, j), F.mul(aik, b.at(k, j)));
        }
    return c;
}

inline FqMat mat_add(const FqMat& a, const FqMat& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols() || a.q() != b.q())
        throw ShapeMismatch("mat_add: incompatible shapes");
    const Field& F = Field::get(a.q());
    FqMat c = a;
    for (int i = 1; i <= a.rows(); ++i)
        for (int j = 1; j <= a.cols(); ++j) c.at(i, j) = (uint8_t)F.add(a.at(i, j), b.at(i, j));
    return c;
}

inline FqMat mat_neg(const FqMat& a) {
    const Field& F = Field::get(a.q());
    FqMat c = a;
    for (auto& v : c.entries()) v = (uint8_t)F.neg(v);
    return c;
}

inline FqMat mat_sub(const FqMat& a, const FqMat& b) { return mat_add(a, mat_neg(b)); }

// Row rank over F_q by Gaussian elimination.
inline int rank(FqMat X) {
    const Field& F = Field::get(X.q());
    int r = 0;
    for (int col = 1; col <= X.cols() && r < X.rows(); ++col) {
        int piv = 0;
        for (int i = r + 1; i <= X.rows(); ++i)
            if (X.at(i, col)) { piv = i; break; }
        if (!piv) continue;
        ++r;
        for (int j = 1; j <= X.cols(); ++j) std::swap(X.at(piv, j), X.at(r, j));
        int pinv = F.inv(X.at(r, col));
        for (int j = 1; j <= X.cols(); ++j) X.at(r, j) = (uint8_t)F.mul(X.at(r, j), pinv);
        for (int i = 1; i <= X.rows(); ++i) {
            if (i == r || !X.at(i, col)) continue;
            int f = X.at(i, col);
            for (int j = 1; j <= X.cols(); ++j)
                X.at(i, j) = (uint8_t)F.sub(X.at(i, j), F.mul(f, X.at(r, j)));
        }
    }
    return r;
}

// Reduced row echelon form with zero rows dropped; canonical label of the
// row space.  Two matrices have equal row span iff their rref_basis agree.
inline FqMat rref_basis(FqMat X) {
    const Field& F = Field::get(X.q());
    int r = 0;
    for (int col = 1; col <= X.cols() && r < X.rows(); ++col) {
        int piv = 0;
        for (int i = r + 1; i <= X.rows(); ++i)
            if (X.at(i, col)) { piv = i; break; }
        if (!piv) continue;
        ++r;
        for (int j = 1; j <= X.cols(); ++j) std::swap(X.at(piv, j), X.at(r, j));
        int pinv = F.inv(X.at(r, col));
        for (int j = 1; j <= X.cols(); ++j) X.at(r, j) = (uint8_t)F.mul(X.at(r, j), pinv);
        for (int i = 1; i <= X.rows(); ++i) {
            if (i == r || !X.at(i, col)) continue;
            int f = X.at(i, col);
            for (int j = 1; j <= X.cols(); ++j)
                X.at(i, j) = (uint8_t)F.sub(X.at(i, j), F.mul(f, X.at(r, j)));
        }
    }
    return X.row_restrict(1, r == 0 ? 0 : r);
}

inline FqMat mat_inverse(const FqMat& M) {
    if (M.rows() != M.cols()) throw ShapeMismatch("mat_inverse: not square");
    const Field& F = Field::get(M.q());
    int n = M.rows();
    FqMat A(n, 2 * n, M.q());
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) A.at(i, j) = M.at(i, j);
        A.at(i, n + i) = 1;
    }
    int r = 0;
    for (int col = 1; col <= n; ++col) {
        int piv = 0;
        for (int i = r + 1; i <= n; ++i)
            if (A.at(i, col)) { piv = i; break; }
        if (!piv) throw PreconditionError("mat_inverse: singular matrix");
        ++r;
        for (int j = 1; j <= 2 * n; ++j) std::swap(A.at(piv, j), A.at(r, j));
        int pinv = F.inv(A.at(r, col));
        for (int j = 1; j <= 2 * n; ++j) A.at(r, j) = (uint8_t)F.mul(A.at(r, j), pinv);
        for (int i = 1; i <= n; ++i) {
            if (i == r || !A.at(i, col)) continue;
            int f = A.at(i, col);
            for (int j = 1; j <= 2 * n; ++j)
                A.at(i, j) = (uint8_t)F.sub(A.at(i, j), F.mul(f, A.at(r, j)));
        }
    }
    FqMat inv(n, n, M.q());
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) inv.at(i, j) = A.at(i, n + j);
    return inv;
}

// |GL_l(F_q)| = (q-1)^l q^binom(l,2) l!_q
inline BigInt gl_order(int l, int q) {
    BigInt r = big_pow(q - 1, (unsigned long)l);
    r *= big_pow(q, (unsigned long)(l * (l - 1) / 2));
    r *= q_factorial(l, q);
    return r;
}

struct GLGroup {
    int l = 1, q = 2;
    std::vector<FqMat> elements; // lexicographic by flattened entry list
};

// Materialize GL_l(F_q), rejecting sizes past the enumeration budget
// (l^2 lg q > 25 means more than ~33M candidate matrices).
inline GLGroup enumerate_gl(int l, int q) {
    double bits = double(l) * l * std::log2(double(q));
    if (bits > 25.0)
        throw BudgetExceeded("enumerate_gl: l^2 lg q = " + std::to_string(bits) + " > 25");
    GLGroup g;
    g.l = l;
    g.q = q;
    long total = 1;
    for (int i = 0; i < l * l; ++i) total *= q;
    FqMat M(l, l, q);
    for (long code = 0; code < total; ++code) {
        long c = code;
        // most-significant digit = first flattened entry
        for (int p = l * l - 1; p >= 0; --p) {
            M.entries()[p] = (uint8_t)(c % q);
            c /= q;
        }
        if (rank(M) == l) g.elements.push_back(M);
    }
    return g;
}

// Count of {M in GL_l : (MX)_{1..s} = 0 and (MX)_{t+1..l} = 0}, by the
// closed form with z = s + l - t and r = rk(X).
inline BigInt count_m_qst(const FqMat& X, int s, int t) {
    int l = X.rows(), q = X.q();
    if (!(0 <= s && s <= t && t <= l)) throw PreconditionError("count_m_qst: need 0<=s<=t<=l");
    int z = s + l - t;
    int r = rank(X);
    BigInt c = big_pow(q - 1, (unsigned long)l);
    c *= big_pow(q, (unsigned long)(l * (l - 1) / 2));
    c *= q_falling_factorial(l - z, r, q);
    c *= q_factorial(l - r, q);
    return c;
}

inline std::vector<FqMat> enumerate_m_qst(const FqMat& X, int s, int t, const GLGroup& gl) {
    int l = X.rows();
    if (gl.l != l || gl.q != X.q()) throw ShapeMismatch("enumerate_m_qst: group/matrix mismatch");
    std::vector<FqMat> out;
    for (const FqMat& M : gl.elements) {
        FqMat Y = mat_mul(M, X);
        bool ok = true;
        for (int i = 1; i <= s && ok; ++i)
            for (int j = 1; j <= Y.cols(); ++j)
                if (Y.at(i, j)) { ok = false; break; }
        for (int i = t + 1; i <= l && ok; ++i)
            for (int j = 1; j <= Y.cols(); ++j)
                if (Y.at(i, j)) { ok = false; break; }
        if (ok) out.push_back(M);
    }
    return out;
}

// --- dense index mapping -------------------------------------------------
//
// Functions on F_q^{l x n} are stored in a fixed dense order: the matrix is
// read row-major and interpreted as a base-q number whose most significant
// digit is entry (1,1).

inline long dense_size(int l, int n, int q) {
    double bits = double(l) * n * std::log2(double(q));
    if (bits > 30.0) throw BudgetExceeded("dense_size: q^(l n) too large");
    long s = 1;
    for (int i = 0; i < l * n; ++i) s *= q;
    return s;
}

inline long index_of(const FqMat& X) {
    long idx = 0;
    for (uint8_t v : X.entries()) idx = idx * X.q() + v;
    return idx;
}

inline FqMat mat_from_index(long idx, int l, int n, int q) {
    FqMat X(l, n, q);
    for (int p = l * n - 1; p >= 0; --p) {
        X.entries()[p] = (uint8_t)(idx % q);
        idx /= q;
    }
    return X;
}

} // namespace dlpcert

#endif
