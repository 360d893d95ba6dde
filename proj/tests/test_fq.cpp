#include <catch2/catch_amalgamated.hpp>

#include <dlpcert/fq.hpp>

using namespace dlpcert;

TEST_CASE("field arithmetic over prime fields and F_4") {
    for (int q : {2, 3, 5, 7, 4}) {
        const Field& F = Field::get(q);
        for (int a = 0; a < q; ++a) {
            CHECK(F.add(a, F.neg(a)) == 0);
            if (a) CHECK(F.mul(a, F.inv(a)) == 1);
            for (int b = 0; b < q; ++b) {
                CHECK(F.add(a, b) == F.add(b, a));
                CHECK(F.mul(a, b) == F.mul(b, a));
            }
        }
    }
    CHECK_THROWS_AS(Field::get(6), UnsupportedField);
    CHECK_THROWS_AS(Field::get(8), UnsupportedField);
}

TEST_CASE("F_4 is a field with x^2 = x + 1") {
    const Field& F = Field::get(4);
    // elements 0,1,w=2,w+1=3
    CHECK(F.mul(2, 2) == 3);
    CHECK(F.mul(2, 3) == 1);
    CHECK(F.mul(3, 3) == 2);
}

TEST_CASE("rank") {
    FqMat Z(2, 3, 2);
    CHECK(rank(Z) == 0);

    FqMat I = FqMat::identity(3, 2);
    CHECK(rank(I) == 3);

    // identity padded with zero columns
    FqMat P(2, 4, 3);
    P.at(1, 1) = 1;
    P.at(2, 2) = 1;
    CHECK(rank(P) == 2);

    FqMat R(2, 3, 2); // identical rows
    R.at(1, 1) = R.at(1, 2) = 1;
    R.at(2, 1) = R.at(2, 2) = 1;
    CHECK(rank(R) == 1);
}

TEST_CASE("GL enumeration sizes match the closed formula") {
    GLGroup g15 = enumerate_gl(1, 5);
    CHECK(g15.elements.size() == 4);

    GLGroup g22 = enumerate_gl(2, 2);
    CHECK(g22.elements.size() == 6);
    CHECK(BigInt(6) == gl_order(2, 2));

    GLGroup g32 = enumerate_gl(3, 2);
    CHECK(g32.elements.size() == 168);
    CHECK(BigInt(168) == gl_order(3, 2));

    GLGroup g23 = enumerate_gl(2, 3);
    CHECK(BigInt((long)g23.elements.size()) == gl_order(2, 3));

    CHECK_THROWS_AS(enumerate_gl(6, 2), BudgetExceeded);
}

TEST_CASE("GL elements are closed under product and inverse") {
    GLGroup g = enumerate_gl(2, 3);
    for (size_t i = 0; i < g.elements.size(); i += 7) {
        const FqMat& M = g.elements[i];
        FqMat Minv = mat_inverse(M);
        CHECK(mat_mul(M, Minv) == FqMat::identity(2, 3));
    }
}

TEST_CASE("count_m_qst matches filter-based enumeration") {
    // X = 0: every M fixes it
    FqMat Z(2, 4, 2);
    CHECK(count_m_qst(Z, 1, 2) == gl_order(2, 2));

    // l=2, q=2, rows (e1, 0), s=1, t=2 -> 2
    FqMat X(2, 3, 2);
    X.at(1, 1) = 1;
    CHECK(count_m_qst(X, 1, 2) == 2);

    // full rank: no M can zero a row
    FqMat Y(2, 3, 2);
    Y.at(1, 1) = 1;
    Y.at(2, 2) = 1;
    CHECK(count_m_qst(Y, 1, 2) == 0);

    // exhaustive cross-check for l <= 3, q in {2,3}
    for (int q : {2, 3}) {
        for (int l = 1; l <= (q == 2 ? 3 : 2); ++l) {
            GLGroup gl = enumerate_gl(l, q);
            int n = l + 1;
            long N = 1;
            for (int i = 0; i < l * n; ++i) N *= q;
            for (long idx = 0; idx < N; idx += (N > 256 ? 37 : 1)) {
                FqMat X2 = mat_from_index(idx, l, n, q);
                for (int s = 0; s <= l; ++s)
                    for (int t = s; t <= l; ++t) {
                        BigInt closed = count_m_qst(X2, s, t);
                        BigInt brute((long)enumerate_m_qst(X2, s, t, gl).size());
                        CHECK(closed == brute);
                    }
            }
        }
    }
}

TEST_CASE("rank is GL-invariant") {
    GLGroup gl = enumerate_gl(2, 2);
    for (int n = 1; n <= 3; ++n) {
        long N = 1;
        for (int i = 0; i < 2 * n; ++i) N *= 2;
        for (long idx = 0; idx < N; ++idx) {
            FqMat X = mat_from_index(idx, 2, n, 2);
            int r = rank(X);
            for (const FqMat& M : gl.elements) CHECK(rank(mat_mul(M, X)) == r);
        }
    }
}

TEST_CASE("dense index round trip") {
    for (long idx = 0; idx < 81; ++idx) {
        FqMat X = mat_from_index(idx, 2, 2, 3);
        CHECK(index_of(X) == idx);
    }
    // most significant digit is entry (1,1)
    FqMat X(2, 2, 2);
    X.at(1, 1) = 1;
    CHECK(index_of(X) == 8);
}

TEST_CASE("row restriction") {
    FqMat X(3, 2, 2);
    X.at(2, 1) = 1;
    FqMat mid = X.row_restrict(2, 3);
    CHECK(mid.rows() == 2);
    CHECK(mid.at(1, 1) == 1);
    CHECK(mid.at(2, 1) == 0);
}
