#include <catch2/catch_amalgamated.hpp>

#include <dlpcert/certificates.hpp>

using namespace dlpcert;

TEST_CASE("check_lpdual on simple certificates") {
    SECTION("constant g = 1 against the zero-dimensional family") {
        LpDualCert c;
        c.spec = ValidSpec::dim_at_most(2, 2, 0);
        c.l = 1;
        c.g = GridFunction::constant(1, 2, 2, 1).expand();
        FeasibilityReport r = check_lpdual(c);
        CHECK(r.feasible());
        CHECK(r.objective == 1);
    }

    SECTION("trivial certificate is feasible for every spec, objective q^(ln)") {
        for (int l = 1; l <= 2; ++l) {
            std::vector<ValidSpec> specs = {ValidSpec::distance(3, 2, 2),
                                            ValidSpec::balanced(3, Rational(1, 2)),
                                            ValidSpec::dim_at_most(3, 2, 1)};
            for (const auto& spec : specs) {
                LpDualCert c = trivial_lpdual(spec, l);
                FeasibilityReport r = check_lpdual(c);
                CHECK(r.feasible());
                CHECK(r.objective == Rational(big_pow(2, (unsigned long)l * 3)));
            }
        }
    }

    SECTION("positive value at a valid nonzero point is reported") {
        LpDualCert c = trivial_lpdual(ValidSpec::distance(3, 2, 2), 1);
        // x = (1,1,0) has weight 2, valid and nonzero
        FqMat x(1, 3, 2);
        x.at(1, 1) = x.at(1, 2) = 1;
        long w = index_of(x);
        c.g[w] = 1;
        FeasibilityReport r = check_lpdual(c);
        CHECK_FALSE(r.feasible());
        bool found = false;
        for (const auto& v : r.violations)
            if (v.constraint == "validity" && v.witness == w) found = true;
        CHECK(found);
    }

    SECTION("broken normalization is reported") {
        LpDualCert c = trivial_lpdual(ValidSpec::distance(3, 2, 2), 1);
        c.g[0] += 1;
        FeasibilityReport r = check_lpdual(c);
        CHECK_FALSE(r.feasible());
        CHECK(r.violations.front().constraint == "normalization");
    }
}

TEST_CASE("check_symmp basics") {
    SECTION("all-zero certificate against the zero-dimensional family") {
        SymmDualCert c;
        c.spec = ValidSpec::dim_at_most(3, 2, 0);
        c.l = 2;
        c.g = {GridFunction::zeros_dense(2, 3, 2), GridFunction::zeros_dense(2, 3, 2)};
        FeasibilityReport r = check_symmp(c);
        CHECK(r.feasible());
        CHECK(r.objective == 1);
    }

    SECTION("trivial symmetrized certificate is feasible with tight validity") {
        SymmDualCert c = trivial_symm(ValidSpec::distance(3, 2, 2), 2);
        FeasibilityReport r = check_symmp(c);
        CHECK(r.feasible());
        CHECK(r.objective == 64);
    }

    SECTION("negative partial Fourier value is reported") {
        SymmDualCert c = trivial_symm(ValidSpec::dim_at_most(2, 2, 0), 2);
        c.g[0][1] = Rational(-1); // F_1(g_1) dips negative somewhere
        FeasibilityReport r = check_symmp(c);
        CHECK_FALSE(r.feasible());
        bool found = false;
        for (const auto& v : r.violations)
            if (v.constraint.rfind("partial_fourier", 0) == 0) found = true;
        CHECK(found);
    }

    SECTION("orbit fast path produces the identical report") {
        SymmDualCert c = trivial_symm(ValidSpec::distance(3, 2, 2), 2);
        c.g[1][5] += Rational(7, 3); // break it somewhere
        CheckOptions direct, orbit;
        orbit.use_orbit_sums = true;
        FeasibilityReport a = check_symmp(c, direct);
        FeasibilityReport b = check_symmp(c, orbit);
        CHECK(a.status == b.status);
        REQUIRE(a.violations.size() == b.violations.size());
        for (size_t i = 0; i < a.violations.size(); ++i) {
            CHECK(a.violations[i].constraint == b.violations[i].constraint);
            CHECK(a.violations[i].witness == b.violations[i].witness);
            CHECK(a.violations[i].lhs == b.violations[i].lhs);
        }
    }
}

TEST_CASE("check_plp basics") {
    SECTION("empty certificate against the zero-dimensional family") {
        PlpDualCert c;
        c.spec = ValidSpec::dim_at_most(3, 2, 0);
        c.l = 2;
        c.qq = 2;
        c.nn = 3;
        FeasibilityReport r = check_plp(c);
        CHECK(r.feasible());
        CHECK(r.objective == 1);
    }

    SECTION("negative h is reported") {
        PlpDualCert c;
        c.spec = ValidSpec::dim_at_most(2, 2, 0);
        c.l = 1;
        c.qq = 2;
        c.nn = 2;
        PlpComponent comp;
        comp.k = 1;
        comp.M = FqMat::identity(1, 2);
        comp.h = GridFunction::zeros_dense(1, 2, 2);
        comp.h[2] = Rational(-1, 3);
        c.comps.push_back(comp);
        FeasibilityReport r = check_plp(c);
        CHECK_FALSE(r.feasible());
        CHECK(r.violations.front().constraint.rfind("non-negativity", 0) == 0);
    }
}

TEST_CASE("embed LPdual into the partial Fourier dual") {
    SECTION("trivial certificate keeps its value and feasibility") {
        ValidSpec spec = ValidSpec::distance(3, 2, 2);
        LpDualCert triv = trivial_lpdual(spec, 2);
        PlpDualCert p = embed_lpdual(triv);
        CHECK(plp_objective(p) == triv.objective());
        FeasibilityReport r = check_plp(p);
        CHECK(r.feasible());
    }

    SECTION("constant g embeds to the zero certificate") {
        LpDualCert c;
        c.spec = ValidSpec::dim_at_most(2, 2, 0);
        c.l = 1;
        c.g = GridFunction::constant(1, 2, 2, 1).expand();
        PlpDualCert p = embed_lpdual(c);
        CHECK(plp_objective(p) == 1);
        for (const auto& comp : p.comps)
            for (long i = 0; i < comp.h.size(); ++i) CHECK(comp.h[i] == 0);
    }
}

TEST_CASE("symmetrize and desymmetrize preserve value and feasibility") {
    ValidSpec spec = ValidSpec::distance(3, 2, 2);

    SECTION("zero certificate round trip") {
        PlpDualCert zero;
        zero.spec = ValidSpec::dim_at_most(2, 2, 0);
        zero.l = 2;
        zero.qq = 2;
        zero.nn = 2;
        SymmDualCert s = symmetrize(zero);
        CHECK(s.objective() == 1);
        PlpDualCert back = desymmetrize(s);
        CHECK(plp_objective(back) == 1);
    }

    SECTION("embedded trivial certificate: symmetrize keeps g_k = 0 for k < l") {
        ValidSpec sp2 = ValidSpec::distance(2, 2, 2);
        PlpDualCert p = embed_lpdual(trivial_lpdual(sp2, 2));
        SymmDualCert s = symmetrize(p);
        CHECK(s.objective() == plp_objective(p));
        for (long i = 0; i < s.g[0].size(); ++i) CHECK(s.g[0][i] == 0);
        FeasibilityReport r = check_symmp(s);
        CHECK(r.feasible());
    }

    SECTION("desymmetrize of a feasible symmetrized certificate is feasible") {
        SymmDualCert s = trivial_symm(spec, 2);
        PlpDualCert p = desymmetrize(s);
        CHECK(plp_objective(p) == s.objective());
        FeasibilityReport r = check_plp(p);
        CHECK(r.feasible());
    }

    SECTION("round trip preserves the objective exactly at l=2, n=2") {
        ValidSpec sp2 = ValidSpec::distance(2, 2, 2);
        SymmDualCert s = trivial_symm(sp2, 2);
        PlpDualCert p = desymmetrize(s);
        SymmDualCert s2 = symmetrize(p);
        CHECK(s2.objective() == s.objective());
        CHECK(check_symmp(s2).feasible());
    }
}

TEST_CASE("check_mdual on a hand-built completeness certificate") {
    // n=1, l=1, q=2, k=1: alpha = 2, beta~_0 = q^l - 1 = 1
    MDualCert c;
    c.spec = ValidSpec::dim_at_most(1, 2, 1);
    c.l = 1;
    c.alpha = 2;
    c.beta_by_dim = {Rational(1), Rational(0)};
    c.gamma_by_dim = {Rational(0), Rational(0)};
    CHECK(check_mdual(c).feasible());

    SECTION("negative beta is reported") {
        MDualCert bad = c;
        bad.beta_by_dim[0] = -1;
        FeasibilityReport r = check_mdual(bad);
        CHECK_FALSE(r.feasible());
    }

    SECTION("perturbed alpha breaks an equality") {
        MDualCert bad = c;
        bad.alpha += 1;
        FeasibilityReport r = check_mdual(bad);
        CHECK_FALSE(r.feasible());
        CHECK(r.violations.front().constraint == "equality to objective");
    }
}

TEST_CASE("primal_from_code") {
    SECTION("zero code") {
        Subspace C{FqMat(0, 3, 2)};
        auto [value, f] = primal_from_code(C, 2);
        CHECK(value == 1);
        CHECK(f[0] == 1);
    }

    SECTION("full space") {
        Subspace C{rref_basis(FqMat::identity(3, 2))};
        auto [value, f] = primal_from_code(C, 2);
        CHECK(value == 64);
    }

    SECTION("even-weight code at n=3, l=2") {
        FqMat B(2, 3, 2);
        B.at(1, 1) = B.at(1, 2) = 1;
        B.at(2, 2) = B.at(2, 3) = 1;
        Subspace C{rref_basis(B)};
        CHECK(C.size() == 4);
        auto [value, f] = primal_from_code(C, 2);
        CHECK(value == 16);
        // f vanishes off Valid_{n,l} for the matching distance family
        ValidSpec spec = ValidSpec::distance(3, 2, 2);
        for (long i = 0; i < f.size(); ++i)
            if (f[i] != 0) CHECK(matrix_valid(mat_from_index(i, 2, 3, 2), spec));
    }
}
