#include <catch2/catch_amalgamated.hpp>

#include <random>

#include <dlpcert/grid.hpp>

using namespace dlpcert;

namespace {

GridFunction random_rational_grid(int l, int n, int q, unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> num(-6, 6), den(1, 4);
    GridFunction f = GridFunction::zeros_dense(l, n, q);
    for (long i = 0; i < f.size(); ++i) {
        Rational r(num(rng), den(rng));
        r.canonicalize();
        f[i] = r;
    }
    return f;
}

} // namespace

TEST_CASE("fourier of point mass and constant") {
    // f = 1_0  ->  hat f = 1/q^{ln} everywhere
    GridFunction f = GridFunction::indicator_of_zero(2, 2, 2);
    GridFunction fh = fourier(f);
    for (long i = 0; i < fh.size(); ++i) CHECK(fh[i] == Rational(1, 16));

    // f = 1  ->  hat f = 1_0
    GridFunction ones = GridFunction::constant(1, 3, 2, 1).expand();
    GridFunction oh = fourier(ones);
    CHECK(oh[0] == 1);
    for (long i = 1; i < oh.size(); ++i) CHECK(oh[i] == 0);
}

TEST_CASE("fourier of a shifted point mass picks up the character") {
    // q=2, l=1, n=2, f = 1_{x=(1,0)}: hat f(z) = (1/4)(-1)^{z_1}
    GridFunction f = GridFunction::zeros_dense(1, 2, 2);
    FqMat X(1, 2, 2);
    X.at(1, 1) = 1;
    f[index_of(X)] = 1;
    GridFunction fh = fourier(f);
    for (long z = 0; z < 4; ++z) {
        FqMat Z = mat_from_index(z, 1, 2, 2);
        Rational expect = Z.at(1, 1) ? Rational(-1, 4) : Rational(1, 4);
        CHECK(fh[z] == expect);
    }
}

TEST_CASE("inverse fourier inverts exactly") {
    GridFunction f = random_rational_grid(2, 2, 2, 11);
    CHECK(inverse_fourier(fourier(f)).values() == f.values());
}

TEST_CASE("partial fourier endpoints") {
    GridFunction f = random_rational_grid(2, 2, 2, 5);
    CHECK(partial_fourier_f2(f, 0).values() == f.values());          // F_0 = id
    CHECK(partial_fourier_f2(f, 2).values() == fourier(f).values()); // F_l = fourier
}

TEST_CASE("partial fourier matches the two-point hand computation") {
    // q=2, l=2, n=1, f = 1_{X=(1;0)}, k=1: F_1(f)(Y) = (1/2)(-1)^{Y_1} 1[Y_2=0]
    GridFunction f = GridFunction::zeros_dense(2, 1, 2);
    FqMat X(2, 1, 2);
    X.at(1, 1) = 1;
    f[index_of(X)] = 1;
    GridFunction F1 = partial_fourier_f2(f, 1);
    for (long y = 0; y < 4; ++y) {
        FqMat Y = mat_from_index(y, 2, 1, 2);
        Rational expect = 0;
        if (Y.at(2, 1) == 0) expect = Y.at(1, 1) ? Rational(-1, 2) : Rational(1, 2);
        CHECK(F1[y] == expect);
    }
}

TEST_CASE("F_{k,M} inversion identity (q=2: R_k acts trivially)") {
    // F_{k,M}^{-1} = q^{kn} F_{k,M}(.) . R_k; over F_2 R_k = I, so applying
    // F_{k,M} twice and scaling by q^{kn} is the identity.
    for (int n = 1; n <= 3; ++n) {
        GridFunction f = random_rational_grid(2, n, 2, 100 + n);
        GLGroup gl = enumerate_gl(2, 2);
        for (int k = 0; k <= 2; ++k)
            for (const FqMat& M : gl.elements) {
                GridFunction g = partial_fourier_f2(partial_fourier_f2(f, k, M), k, M);
                Rational s(big_pow(2, (unsigned long)k * n));
                for (long i = 0; i < g.size(); ++i) CHECK(s * g[i] == f[i]);
            }
    }
}

TEST_CASE("convolution identity: 1_0 is the unit") {
    GridFunction b = random_rational_grid(1, 3, 2, 3);
    GridFunction e = GridFunction::indicator_of_zero(1, 3, 2);
    CHECK(convolve(e, b).values() == b.values());
}

TEST_CASE("hat(a b) = hat a * hat b, exhaustive at q=2, l=1, n=3") {
    GridFunction a = random_rational_grid(1, 3, 2, 21);
    GridFunction b = random_rational_grid(1, 3, 2, 22);
    GridFunction lhs = fourier(pointwise_mul(a, b));
    GridFunction rhs = convolve(fourier(a), fourier(b));
    CHECK(lhs.values() == rhs.values());
}

TEST_CASE("Parseval at q=2") {
    for (int n = 1; n <= 3; ++n) {
        GridFunction f = random_rational_grid(2, n, 2, 40 + n);
        GridFunction fh = fourier(f);
        Rational lhs = 0, rhs = 0;
        for (long i = 0; i < f.size(); ++i) lhs += f[i] * f[i];
        for (long i = 0; i < fh.size(); ++i) rhs += fh[i] * fh[i];
        CHECK(lhs == Rational(big_pow(2, (unsigned long)2 * n)) * rhs);
    }
}

TEST_CASE("group actions") {
    GridFunction f = random_rational_grid(2, 2, 2, 7);

    SECTION("identity acts trivially") {
        CHECK(act_gl(f, FqMat::identity(2, 2)).values() == f.values());
    }

    SECTION("row swap permutes row blocks") {
        FqMat S(2, 2, 2);
        S.at(1, 2) = 1;
        S.at(2, 1) = 1;
        GridFunction g = act_gl(f, S);
        for (long i = 0; i < f.size(); ++i) {
            FqMat X = mat_from_index(i, 2, 2, 2);
            FqMat Y(2, 2, 2);
            for (int j = 1; j <= 2; ++j) {
                Y.at(1, j) = X.at(2, j);
                Y.at(2, j) = X.at(1, j);
            }
            CHECK(g[i] == f[index_of(Y)]);
        }
    }

    SECTION("translation is invertible") {
        std::vector<uint8_t> z = {1, 0};
        GridFunction g = act_translate(act_translate(f, z), z); // q=2: involution
        CHECK(g.values() == f.values());
    }

    SECTION("permutation fixes symmetric functions") {
        GridFunction s = GridFunction::constant(2, 2, 2, Rational(3, 7));
        GridFunction sd = s.expand();
        GridFunction p = act_permute(sd, {1, 0});
        CHECK(p.values() == sd.values());
    }

    SECTION("fourier commutes with act_permute") {
        for (int n = 2; n <= 3; ++n) {
            GridFunction g = random_rational_grid(2, n, 2, 60 + n);
            std::vector<int> sigma(n);
            for (int i = 0; i < n; ++i) sigma[i] = (i + 1) % n;
            GridFunction lhs = fourier(act_permute(g, sigma));
            GridFunction rhs = act_permute(fourier(g), sigma);
            CHECK(lhs.values() == rhs.values());
        }
    }
}

TEST_CASE("symmetric representation round trip") {
    std::mt19937 rng(99);
    std::uniform_int_distribution<int> num(-9, 9), den(1, 5);
    for (int trial = 0; trial < 50; ++trial) {
        int l = 1 + (trial % 2), n = 2 + (trial % 5);
        GridFunction s = GridFunction::zeros_symmetric(l, n, 2);
        for (long i = 0; i < s.size(); ++i) s[i] = Rational(num(rng), den(rng));
        GridFunction back = s.expand().collapse();
        CHECK(back.values() == s.values());
    }
}

TEST_CASE("collapse rejects non-symmetric functions") {
    GridFunction f = GridFunction::zeros_dense(1, 2, 2);
    f[1] = 1; // weight-1 class has two points with different values
    CHECK_THROWS_AS(f.collapse(), NotSymmetric);
}

TEST_CASE("dense budget is enforced") {
    CHECK_THROWS_AS(GridFunction::zeros_dense(5, 6, 2), BudgetExceeded);
}
