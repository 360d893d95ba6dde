#include <catch2/catch_amalgamated.hpp>

#include <dlpcert/krawtchouk.hpp>
#include <dlpcert/oracle.hpp>

using namespace dlpcert;

namespace {

Configuration level1_config(int n, int weight) {
    Configuration g;
    g.l = 1;
    g.q = 2;
    g.counts = {n - weight, (long)weight};
    return g;
}

// classical binary Krawtchouk K_k(i; n) = sum_j (-1)^j binom(i,j) binom(n-i,k-j)
BigInt classical_kraw(int n, int k, int i) {
    BigInt s = 0;
    for (int j = 0; j <= k; ++j) {
        BigInt t = binomial(i, j) * binomial(n - i, k - j);
        s += (j % 2) ? -t : t;
    }
    return s;
}

} // namespace

TEST_CASE("krawtchouk special rows and columns") {
    for (int l = 1; l <= 2; ++l)
        for (int n = 2; n <= (l == 1 ? 6 : 5); ++n) {
            ConfigSpace cs(l, n, 2);
            Configuration zero = cs.unrank(0);
            zero.counts.assign(pow_long(2, l), 0);
            zero.counts[0] = n;
            for (long r = 0; r < cs.count(); ++r) {
                Configuration g = cs.unrank(r);
                CHECK(kraw_eval(zero, g) == 1);            // h = config(0) row
                CHECK(kraw_eval(g, zero) == class_size(g)); // g = config(0) column
            }
        }
}

TEST_CASE("level-1 values match the classical formula exhaustively") {
    for (int n = 1; n <= 8; ++n)
        for (int k = 0; k <= n; ++k)
            for (int i = 0; i <= n; ++i)
                CHECK(kraw_eval(level1_config(n, k), level1_config(n, i)) ==
                      classical_kraw(n, k, i));
    // spot value K_1(2; 5) = n - 2i = 1
    CHECK(kraw_eval(level1_config(5, 1), level1_config(5, 2)) == 1);
}

TEST_CASE("level-1 values satisfy the classical recurrence") {
    // (k+1) K_{k+1}(i) = (n - 2i) K_k(i) - (n - k + 1) K_{k-1}(i)
    for (int n = 2; n <= 8; ++n)
        for (int i = 0; i <= n; ++i)
            for (int k = 1; k <= n - 1; ++k) {
                BigInt lhs = BigInt(k + 1) * kraw_eval(level1_config(n, k + 1), level1_config(n, i));
                BigInt rhs = BigInt(n - 2 * i) * kraw_eval(level1_config(n, k), level1_config(n, i)) -
                             BigInt(n - k + 1) * kraw_eval(level1_config(n, k - 1), level1_config(n, i));
                CHECK(lhs == rhs);
            }
}

TEST_CASE("krawtchouk value is a genuine character sum") {
    // K_h(g) = sum over X in class h of chi(<X, Y>) for a fixed Y in class g
    int l = 2, n = 3;
    ConfigSpace cs(l, n, 2);
    long N = dense_points(l, n, 2);
    for (long gr = 0; gr < cs.count(); gr += 3) {
        Configuration g = cs.unrank(gr);
        // find a representative Y
        long yidx = -1;
        for (long i = 0; i < N; ++i)
            if (config_of(mat_from_index(i, l, n, 2)) == g) { yidx = i; break; }
        REQUIRE(yidx >= 0);
        for (long hr = 0; hr < cs.count(); hr += 2) {
            Configuration h = cs.unrank(hr);
            BigInt direct = 0;
            for (long x = 0; x < N; ++x) {
                if (!(config_of(mat_from_index(x, l, n, 2)) == h)) continue;
                direct += __builtin_parityll((unsigned long long)(x & yidx)) ? -1 : 1;
            }
            CHECK(kraw_eval(h, g) == direct);
        }
    }
}

TEST_CASE("reduced LP equals the dense LP at l=1, n=5, d=3") {
    ValidSpec spec = ValidSpec::distance(5, 2, 3);
    KlpBundle bundle = build_klp(spec, 1);
    CHECK(bundle.primal.num_cols() == 6);
    LpSolution reduced = solve(bundle.primal);
    REQUIRE(reduced.status == LpSolution::Status::optimal);
    Rational dense = primal_optimum_dense(spec, 1);
    CHECK(reduced.objective == dense);
    // golden value, frozen after first computation; the LP is tight here
    CHECK(reduced.objective == 4);

    // the stated dual LP reaches the same optimum
    LpSolution dual = solve(bundle.dual);
    REQUIRE(dual.status == LpSolution::Status::optimal);
    CHECK(dual.objective == reduced.objective);
}

TEST_CASE("reduced LP trivial cases") {
    ValidSpec spec = ValidSpec::dim_at_most(3, 2, 0);
    KlpBundle bundle = build_klp(spec, 1);
    LpSolution s = solve(bundle.primal);
    REQUIRE(s.status == LpSolution::Status::optimal);
    CHECK(s.objective == 1);
}

TEST_CASE("reduced LP equals the dense LP at l=2, n=3, d=2") {
    ValidSpec spec = ValidSpec::distance(3, 2, 2);
    KlpBundle bundle = build_klp(spec, 2);
    LpSolution reduced = solve(bundle.primal);
    REQUIRE(reduced.status == LpSolution::Status::optimal);
    Rational dense = primal_optimum_dense(spec, 2);
    CHECK(reduced.objective == dense);
    CHECK(reduced.objective >= 16); // even-weight code gives 4^2
}

TEST_CASE("trivial reduced dual expands to the trivial dense certificate") {
    ValidSpec spec = ValidSpec::distance(3, 2, 2);
    ConfigSpace cs(1, 3, 2);
    (void)cs;
    ConfigSpace cs2(2, 3, 2);
    std::vector<Rational> f(cs2.count(), Rational(1));
    Configuration zero;
    zero.l = 2;
    zero.q = 2;
    zero.counts.assign(4, 0);
    zero.counts[0] = 3;
    f[cs2.rank(zero)] = 0;
    LpDualCert cert = klp_dual_to_certificate(spec, 2, f);
    LpDualCert triv = trivial_lpdual(spec, 2);
    CHECK(cert.g.expand().values() == triv.g.values());
    CHECK(check_lpdual(cert).feasible());
}

TEST_CASE("simplex dual of the reduced primal gives a feasible dense certificate") {
    ValidSpec spec = ValidSpec::distance(5, 2, 3);
    KlpBundle bundle = build_klp(spec, 1);
    LpSolution s = solve(bundle.primal);
    REQUIRE(s.status == LpSolution::Status::optimal);
    std::vector<Rational> f = klp_dual_variables(bundle, s);
    LpDualCert cert = klp_dual_to_certificate(spec, 1, f);
    FeasibilityReport rep = check_lpdual(cert);
    CHECK(rep.feasible());
    CHECK(rep.objective == s.objective);
}

TEST_CASE("krawtchouk table CSV dump is stable") {
    KrawtchoukTable t = build_krawtchouk_table(1, 2, 2);
    std::ostringstream os;
    write_krawtchouk_csv(os, t);
    // rank order at l=1, n=2 is (0,2), (1,1), (2,0): weights 2, 1, 0
    CHECK(os.str() ==
          "h_rank,g0,g1,g2\n"
          "0,1,-1,1\n"
          "1,-2,0,2\n"
          "2,1,1,1\n");
}
