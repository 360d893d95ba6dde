#include <catch2/catch_amalgamated.hpp>

#include <dlpcert/completeness.hpp>
#include <dlpcert/json_io.hpp>
#include <dlpcert/lift.hpp>

using namespace dlpcert;

TEST_CASE("grid function JSON round trip") {
    GridFunction f = GridFunction::zeros_symmetric(2, 3, 2);
    for (long i = 0; i < f.size(); ++i) f[i] = rat(i - 2, 3);
    GridFunction g = grid_from_json(to_json(f));
    CHECK(g.repr() == f.repr());
    CHECK(g.values() == f.values());

    GridFunction d = f.expand();
    GridFunction d2 = grid_from_json(to_json(d));
    CHECK(d2.dense());
    CHECK(d2.values() == d.values());
}

TEST_CASE("valid spec JSON round trip") {
    for (ValidSpec spec : {ValidSpec::distance(5, 3, 2), ValidSpec::balanced(6, Rational(1, 3)),
                           ValidSpec::dim_at_most(4, 2, 2)}) {
        ValidSpec back = spec_from_json(to_json(spec));
        CHECK(back.kind == spec.kind);
        CHECK(back.n == spec.n);
        CHECK(back.q == spec.q);
        CHECK(back.d == spec.d);
        CHECK(back.eps == spec.eps);
        CHECK(back.k == spec.k);
    }
}

TEST_CASE("certificate JSON round trips for every formulation") {
    ValidSpec spec = ValidSpec::distance(3, 2, 2);

    SECTION("LPdual") {
        LpDualCert c = trivial_lpdual(spec, 2);
        Json j = to_json(c);
        CHECK(j["formulation"] == "LPdual");
        CHECK(j["schema"] == 1);
        auto back = std::get<LpDualCert>(certificate_from_json(j));
        CHECK(back.g.values() == c.g.values());
        CHECK(back.l == 2);
        CHECK(to_json(back) == j);
    }

    SECTION("symmpLPdual") {
        SymmDualCert c = trivial_symm(spec, 2);
        Json j = to_json(c);
        auto back = std::get<SymmDualCert>(certificate_from_json(j));
        CHECK(back.objective() == c.objective());
        CHECK(to_json(back) == j);
    }

    SECTION("pLPdual") {
        PlpDualCert c = embed_lpdual(trivial_lpdual(spec, 2));
        Json j = to_json(c);
        auto back = std::get<PlpDualCert>(certificate_from_json(j));
        CHECK(plp_objective(back) == plp_objective(c));
        CHECK(to_json(back) == j);
    }

    SECTION("Mdual") {
        MDualCert c = build_completeness_cert(3, 3, 2, 2);
        Json j = to_json(c);
        auto back = std::get<MDualCert>(certificate_from_json(j));
        CHECK(back.alpha == c.alpha);
        CHECK(back.beta_by_dim == c.beta_by_dim);
        CHECK(to_json(back) == j);
    }
}

TEST_CASE("feasibility report serialization") {
    LpDualCert c = trivial_lpdual(ValidSpec::distance(3, 2, 2), 1);
    c.g[0] += 1;
    FeasibilityReport r = check_lpdual(c);
    Json j = to_json(r);
    CHECK(j["status"] == "infeasible");
    CHECK(j["violations"].size() == r.violations.size());
}

TEST_CASE("rationals are serialized canonically") {
    CHECK(rat_to_string(rat(4, 8)) == "1/2");
    CHECK(rat_to_string(rat(-6, 3)) == "-2");
    CHECK(rat_from_string("7/2") == rat(7, 2));
    CHECK_THROWS_AS(rat_from_string("seven"), ParseError);
}
