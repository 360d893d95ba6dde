#include <catch2/catch_amalgamated.hpp>

#include <sstream>

#include <dlpcert/simplex.hpp>

using namespace dlpcert;

TEST_CASE("one-variable LPs") {
    SECTION("max x s.t. x <= 3") {
        LpProblem p;
        p.maximize = true;
        p.set_cols({"x"});
        p.objective[0] = 1;
        p.add_row("cap", {Rational(1)}, 'L', 3);
        LpSolution s = solve(p);
        REQUIRE(s.status == LpSolution::Status::optimal);
        CHECK(s.objective == 3);
        CHECK(s.primal[0] == 3);
        CHECK(s.dual[0] == 1);
    }

    SECTION("infeasible: x <= -1 with x >= 0") {
        LpProblem p;
        p.maximize = true;
        p.set_cols({"x"});
        p.objective[0] = 1;
        p.add_row("cap", {Rational(1)}, 'L', -1);
        CHECK(solve(p).status == LpSolution::Status::infeasible);
    }

    SECTION("unbounded: max x s.t. x >= 1") {
        LpProblem p;
        p.maximize = true;
        p.set_cols({"x"});
        p.objective[0] = 1;
        p.add_row("floor", {Rational(1)}, 'G', 1);
        CHECK(solve(p).status == LpSolution::Status::unbounded);
    }
}

TEST_CASE("mixed relations, free variables, exact rationals") {
    // min 2x + 3y  s.t.  x + y = 4, x - y >= 1, x <= 3, y free
    LpProblem p;
    p.maximize = false;
    p.set_cols({"x", "y"});
    p.free_var[1] = true;
    p.objective[0] = 2;
    p.objective[1] = 3;
    p.add_row("sum", {Rational(1), Rational(1)}, 'E', 4);
    p.add_row("gap", {Rational(1), Rational(-1)}, 'G', 1);
    p.add_row("cap", {Rational(1), Rational(0)}, 'L', 3);
    LpSolution s = solve(p);
    REQUIRE(s.status == LpSolution::Status::optimal);
    // candidates: x as large as possible since y costs more: x=3, y=1 -> 9
    CHECK(s.primal[0] == 3);
    CHECK(s.primal[1] == 1);
    CHECK(s.objective == 9);
    // strong duality holds by construction; verify dual signs for a min LP
    // with our row order (=, >=, <=): y_G >= 0, y_L <= 0
    CHECK(s.dual[1] >= 0);
    CHECK(s.dual[2] <= 0);
}

TEST_CASE("fractional data stays exact") {
    // max (1/3)x + (1/7)y s.t. x/2 + y <= 5/3, x + y/9 <= 2
    LpProblem p;
    p.maximize = true;
    p.set_cols({"x", "y"});
    p.objective[0] = Rational(1, 3);
    p.objective[1] = Rational(1, 7);
    p.add_row("r1", {Rational(1, 2), Rational(1)}, 'L', Rational(5, 3));
    p.add_row("r2", {Rational(1), Rational(1, 9)}, 'L', Rational(2));
    LpSolution s = solve(p);
    REQUIRE(s.status == LpSolution::Status::optimal);
    // exact optimum at the intersection of the two constraints:
    // x/2 + y = 5/3 and x + y/9 = 2 meet at x = 98/51, y = 12/17
    CHECK(s.primal[0] == Rational(98, 51));
    CHECK(s.primal[1] == Rational(12, 17));
    CHECK(s.objective == Rational(1, 3) * Rational(98, 51) + Rational(1, 7) * Rational(12, 17));
}

TEST_CASE("redundant equality rows do not break phase 1") {
    LpProblem p;
    p.maximize = true;
    p.set_cols({"x", "y"});
    p.objective[0] = 1;
    p.objective[1] = 1;
    p.add_row("e1", {Rational(1), Rational(1)}, 'E', 2);
    p.add_row("e2", {Rational(2), Rational(2)}, 'E', 4); // same hyperplane
    LpSolution s = solve(p);
    REQUIRE(s.status == LpSolution::Status::optimal);
    CHECK(s.objective == 2);
}

TEST_CASE("deterministic pivoting") {
    LpProblem p;
    p.maximize = true;
    p.set_cols({"a", "b", "c"});
    for (int j = 0; j < 3; ++j) p.objective[j] = 1;
    p.add_row("r1", {Rational(1), Rational(2), Rational(1)}, 'L', 6);
    p.add_row("r2", {Rational(2), Rational(1), Rational(3)}, 'L', 8);
    LpSolution s1 = solve(p);
    LpSolution s2 = solve(p);
    CHECK(s1.primal == s2.primal);
    CHECK(s1.dual == s2.dual);
    CHECK(s1.objective == s2.objective);
}

TEST_CASE("LP text format round trip") {
    LpProblem p;
    p.maximize = false;
    p.objective_constant = Rational(1);
    p.set_cols({"u", "v"});
    p.free_var[0] = true;
    p.objective[0] = Rational(-2, 3);
    p.objective[1] = 5;
    p.add_row("only", {Rational(1, 2), Rational(-1)}, 'G', Rational(7, 4));
    std::stringstream ss;
    write_lp(ss, p);
    LpProblem q = read_lp(ss);
    CHECK(q.maximize == p.maximize);
    CHECK(q.objective_constant == p.objective_constant);
    CHECK(q.col_names == p.col_names);
    CHECK(q.free_var == p.free_var);
    CHECK(q.objective == p.objective);
    REQUIRE(q.rows.size() == 1);
    CHECK(q.rows[0].rel == 'G');
    CHECK(q.rows[0].rhs == p.rows[0].rhs);
    CHECK(q.rows[0].coeffs == p.rows[0].coeffs);
}
