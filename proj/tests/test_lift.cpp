#include <catch2/catch_amalgamated.hpp>

#include <dlpcert/lift.hpp>

using namespace dlpcert;

namespace {

// level-1 payload of the trivial certificate, scaled by t >= 1:
// h = t (2^n 1_0 - 1), feasible with h(0) = t (2^n - 1)
GridFunction scaled_trivial_level1(int n, const Rational& t) {
    GridFunction h = GridFunction::zeros_dense(1, n, 2);
    Rational full(big_pow(2, (unsigned long)n));
    h[0] = t * (full - 1);
    for (long i = 1; i < h.size(); ++i) h[i] = -t;
    return h;
}

} // namespace

TEST_CASE("lift from level 1") {
    SECTION("trivial certificate, l=2, n=4") {
        ValidSpec spec = ValidSpec::distance(4, 2, 2);
        GridFunction h = scaled_trivial_level1(4, 1);
        SymmDualCert c = lift_level1(h, 2, spec);
        CHECK(c.objective() == 256); // (2^4)^2
        CHECK(check_symmp(c).feasible());
    }

    SECTION("l=1 returns the input") {
        ValidSpec spec = ValidSpec::distance(3, 2, 2);
        GridFunction h = scaled_trivial_level1(3, 1);
        SymmDualCert c = lift_level1(h, 1, spec);
        CHECK(c.g.size() == 1);
        CHECK(c.g[0].values() == h.values());
    }

    SECTION("h(0) = 0 degenerates to objective 1") {
        ValidSpec spec = ValidSpec::dim_at_most(3, 2, 0);
        GridFunction h = GridFunction::zeros_dense(1, 3, 2);
        SymmDualCert c = lift_level1(h, 2, spec);
        CHECK(c.objective() == 1);
        CHECK(check_symmp(c).feasible());
    }

    SECTION("rational-valued input keeps exact arithmetic") {
        ValidSpec spec = ValidSpec::distance(3, 2, 2);
        GridFunction h = scaled_trivial_level1(3, Rational(3, 2));
        SymmDualCert c = lift_level1(h, 2, spec);
        CHECK(c.objective() == Rational(529, 4)); // (1 + (3/2) * 7)^2
        CHECK(check_symmp(c).feasible());
    }

    SECTION("infeasible input is rejected in strict mode") {
        ValidSpec spec = ValidSpec::distance(3, 2, 2);
        GridFunction h = GridFunction::zeros_dense(1, 3, 2); // validity 1 + 0 > 0
        CHECK_THROWS_AS(lift_level1(h, 2, spec), InfeasibleInput);
        LiftOptions relaxed;
        relaxed.strict = false;
        CHECK(lift_level1(h, 2, spec, relaxed).objective() == 1);
    }
}

TEST_CASE("general lift") {
    SECTION("k=1 to l=3 at n=3") {
        ValidSpec spec = ValidSpec::distance(3, 2, 2);
        SymmDualCert base = trivial_symm(spec, 1);
        SymmDualCert c = lift_general(base, 3);
        CHECK(c.objective() == 512); // (2^3)^3
        CHECK(check_symmp(c).feasible());
        // g_u = 0 for u <= l - k
        for (int u = 0; u < 2; ++u)
            for (long i = 0; i < c.g[u].size(); ++i) CHECK(c.g[u][i] == 0);
    }

    SECTION("k = l is the identity") {
        ValidSpec spec = ValidSpec::distance(3, 2, 2);
        SymmDualCert base = trivial_symm(spec, 2);
        SymmDualCert c = lift_general(base, 2);
        CHECK(c.objective() == base.objective());
        for (int u = 0; u < 2; ++u) CHECK(c.g[u].values() == base.g[u].expand().values());
    }

    SECTION("k must divide l") {
        ValidSpec spec = ValidSpec::distance(4, 2, 2);
        SymmDualCert base = trivial_symm(spec, 2);
        CHECK_THROWS_AS(lift_general(base, 3), DivisibilityError);
    }

    SECTION("value law is purely algebraic (unchecked mode)") {
        ValidSpec spec = ValidSpec::distance(4, 2, 2);
        SymmDualCert shaped;
        shaped.spec = spec;
        shaped.l = 2;
        shaped.g = {GridFunction::zeros_dense(2, 4, 2), GridFunction::zeros_dense(2, 4, 2)};
        shaped.g[0][3] = Rational(5, 7); // no feasibility intended
        shaped.g[1][0] = Rational(2, 3);
        LiftOptions relaxed;
        relaxed.strict = false;
        SymmDualCert c = lift_general(shaped, 4, relaxed);
        Rational V = shaped.objective();
        CHECK(c.objective() == V * V);
    }
}

TEST_CASE("warm-up lift equals the general lift after row reversal") {
    ValidSpec spec = ValidSpec::distance(3, 2, 2);
    GridFunction h = scaled_trivial_level1(3, 1);
    CHECK(compare_prop_vs_thm(h, 2, spec));
    CHECK(compare_prop_vs_thm(h, 1, spec));
    CHECK(compare_prop_vs_thm(h, 3, spec));
    GridFunction hr = scaled_trivial_level1(3, Rational(5, 4));
    CHECK(compare_prop_vs_thm(hr, 2, spec));
}
