// dlpcert: construct and verify exact dual certificates for the Delsarte LP
// hierarchies on linear codes.
//
// Exit codes: 0 success/feasible, 2 infeasible, 3 feasible-within-tolerance,
// 64 usage error, 65 budget refusal, 1 other failure.

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include <dlpcert/dlpcert.hpp>

using namespace dlpcert;

namespace {

struct SpecFlags {
    int n = 0;
    int q = 2;
    std::optional<int> distance;
    std::optional<std::string> balanced;
    std::optional<int> dim;

    void attach(CLI::App* cmd, bool require_n = true) {
        auto* n_opt = cmd->add_option("--n", n, "block length");
        if (require_n) n_opt->required();
        cmd->add_option("--q", q, "field size (prime or 4)")->default_val(2);
        auto* d = cmd->add_option("--spec-distance", distance, "family: distance >= d");
        auto* b = cmd->add_option("--spec-balanced", balanced,
                                  "family: eps-balanced, eps as p/q");
        auto* k = cmd->add_option("--spec-dim", dim, "family: dimension <= k");
        d->excludes(b)->excludes(k);
        b->excludes(d)->excludes(k);
        k->excludes(d)->excludes(b);
    }

    ValidSpec build() const {
        if (distance) return ValidSpec::distance(n, q, *distance);
        if (balanced) return ValidSpec::balanced(n, rat_from_string(*balanced));
        if (dim) return ValidSpec::dim_at_most(n, q, *dim);
        throw CLI::ValidationError("one of --spec-distance/--spec-balanced/--spec-dim required");
    }
};

struct Budgets {
    long dense_cap = 1L << 20; // points
    long work_cap = 1L << 31;
    long subspace_cap = 20'000'000;

    double dense_bits() const { return std::log2((double)dense_cap); }

    void attach(CLI::App& app) {
        if (const char* env = std::getenv("DLPCERT_DENSE_CAP")) dense_cap = std::atol(env);
        app.add_option("--dense-cap", dense_cap, "max dense grid points")
            ->default_val(dense_cap);
        app.add_option("--work-cap", work_cap, "max |GL| * points work in checkers")
            ->default_val(work_cap);
        app.add_option("--subspace-cap", subspace_cap, "max subspaces to enumerate")
            ->default_val(subspace_cap);
    }
};

int report_and_exit_code(const FeasibilityReport& rep, const std::string& format) {
    if (format == "human") {
        std::cout << FeasibilityReport::status_name(rep.status)
                  << "  objective = " << rat_to_string(rep.objective) << "\n";
        for (const auto& v : rep.violations)
            std::cout << "  violated " << v.constraint << " at " << v.witness << ": " << v.lhs
                      << " (need " << v.relation << ")\n";
    } else {
        std::cout << to_json(rep).dump(2) << "\n";
    }
    switch (rep.status) {
        case FeasibilityReport::Status::feasible: return 0;
        case FeasibilityReport::Status::infeasible: return 2;
        case FeasibilityReport::Status::feasible_within_tolerance: return 3;
    }
    return 1;
}

FeasibilityReport check_any(const AnyCertificate& cert, const CheckOptions& opts) {
    if (std::holds_alternative<LpDualCert>(cert))
        return check_lpdual(std::get<LpDualCert>(cert), opts);
    if (std::holds_alternative<SymmDualCert>(cert))
        return check_symmp(std::get<SymmDualCert>(cert), opts);
    if (std::holds_alternative<PlpDualCert>(cert))
        return check_plp(std::get<PlpDualCert>(cert), opts);
    return check_mdual(std::get<MDualCert>(cert), opts);
}

Json spectral_diag_json(const SpectralDiagnostics& d) {
    Json j;
    j["objective"] = rat_to_string(d.objective);
    j["rate"] = d.rate;
    j["rate_precision"] = 1e-12;
    j["entropy"] = d.entropy;
    j["entropy_precision"] = 1e-12;
    j["tau"] = d.tau;
    j["tau_precision"] = 1e-12;
    j["tau_residual"] = d.tau_residual;
    j["min_fourier"] = rat_to_string(d.min_fourier);
    j["sign_check"] = d.sign_check;
    j["walk_hypothesis"] = d.walk_hypothesis;
    Json margins = Json::array();
    for (const auto& [v, m] : d.walk_margins)
        margins.push_back(Json{{"v", v}, {"margin", rat_to_string(m)}});
    j["walk_margins"] = std::move(margins);
    Json counts = Json::array();
    for (long c : d.lambda_config.counts) counts.push_back(c);
    j["lambda_config"] = std::move(counts);
    j["feasible"] = d.feasible;
    return j;
}

ConfigFamily parse_family(const std::string& s) {
    if (s == "vu" || s == "vertex-uniform") return ConfigFamily::vertex_uniform;
    if (s == "qr" || s == "quasirandom") return ConfigFamily::quasirandom;
    throw CLI::ValidationError("--family must be vu or qr");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact dual certificates for Delsarte LP hierarchies on linear codes"};
    app.require_subcommand(1);
    Budgets budgets;
    budgets.attach(app);
    std::string format = "json";
    app.add_option("--format", format, "output format: json|human")->default_val("json");

    // verify ------------------------------------------------------------
    auto* verify = app.add_subcommand("verify", "check a certificate file");
    std::string verify_path;
    bool verify_orbit = false;
    verify->add_option("cert", verify_path, "certificate JSON file")->required();
    verify->add_flag("--orbit-sums", verify_orbit,
                     "use the orbit-deduplicated validity scan (identical report)");

    // lift ----------------------------------------------------------------
    auto* lift_cmd = app.add_subcommand("lift", "lift a dual certificate to a higher level");
    std::string lift_in, lift_out;
    int lift_level = 0;
    bool lift_unchecked = false;
    lift_cmd->add_option("--in", lift_in, "input certificate (symmpLPdual, or LPdual at level 1)")
        ->required();
    lift_cmd->add_option("--level", lift_level, "target level")->required();
    lift_cmd->add_option("--out", lift_out, "output certificate path")->required();
    lift_cmd->add_flag("--unchecked", lift_unchecked, "skip input feasibility verification");

    // completeness ---------------------------------------------------------
    auto* comp = app.add_subcommand("completeness",
                                    "closed-form subspace dual at levels >= n");
    SpecFlags comp_spec;
    comp_spec.attach(comp);
    int comp_level = 0;
    std::optional<int> comp_k;
    std::string comp_out;
    bool comp_gap = false;
    comp->add_option("--level", comp_level, "hierarchy level (>= n)")->required();
    comp->add_option("--k", comp_k, "max dimension (default: max valid dimension)");
    comp->add_option("--out", comp_out, "certificate output path");
    comp->add_flag("--gap", comp_gap, "also report the dual-vs-oracle gap");

    // spectral --------------------------------------------------------------
    auto* spec_cmd = app.add_subcommand("spectral",
                                        "spectral dual certificate for eps-balanced codes");
    int sp_level = 1, sp_m = 2, sp_n = 8;
    std::string sp_eps = "1/2", sp_family = "vu", sp_emit;
    std::optional<double> sp_tau;
    spec_cmd->add_option("--level", sp_level)->required();
    spec_cmd->add_option("--m", sp_m)->required();
    spec_cmd->add_option("--eps", sp_eps, "eps as p/q")->required();
    spec_cmd->add_option("--n", sp_n)->required();
    spec_cmd->add_option("--family", sp_family, "vu|qr")->default_val("vu");
    spec_cmd->add_option("--tau", sp_tau, "override the tau choice");
    spec_cmd->add_option("--emit-cert", sp_emit, "write the LPdual certificate here");

    // sweep -------------------------------------------------------------------
    auto* sweep = app.add_subcommand("sweep", "rate table over a list of eps values (CSV)");
    int sw_level = 1, sw_m = 2, sw_n = 8;
    std::string sw_eps = "1/2", sw_family = "vu", sw_out;
    sweep->add_option("--l", sw_level)->required();
    sweep->add_option("--m", sw_m)->required();
    sweep->add_option("--n", sw_n)->required();
    sweep->add_option("--eps", sw_eps, "comma-separated eps list, each as p/q")->required();
    sweep->add_option("--family", sw_family, "vu|qr")->default_val("vu");
    sweep->add_option("--out", sw_out, "CSV output path (default stdout)");

    // lp-solve ------------------------------------------------------------------
    auto* lp = app.add_subcommand("lp-solve", "exact simplex on an LP file or the reduced LP");
    std::string lp_in, lp_emit_cert, lp_write;
    bool lp_klp = false;
    int lp_level = 1;
    SpecFlags lp_spec;
    lp->add_option("--in", lp_in, "LP file in the dlpcert-lp text format");
    lp->add_flag("--klp", lp_klp, "build the symmetry-reduced LP from a family spec");
    lp->add_option("--level", lp_level, "hierarchy level for --klp")->default_val(1);
    lp_spec.attach(lp, false);
    lp->add_option("--emit-cert", lp_emit_cert,
                   "with --klp: write the dense LPdual certificate from the exact duals");
    lp->add_option("--write-lp", lp_write, "dump the solved LP in text format");

    // oracle -----------------------------------------------------------------------
    auto* oracle = app.add_subcommand("oracle", "brute-force ground truth");
    auto* maxcode = oracle->add_subcommand("max-code", "largest valid linear code");
    SpecFlags mc_spec;
    mc_spec.attach(maxcode);
    int mc_level = 1;
    maxcode->add_option("--level", mc_level)->default_val(1);
    auto* audit = oracle->add_subcommand("audit", "independent re-check of an LPdual certificate");
    std::string audit_path;
    audit->add_option("cert", audit_path)->required();
    oracle->require_subcommand(1);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 64;
    }

    CheckOptions check_opts;
    check_opts.dense_budget_bits = budgets.dense_bits();
    check_opts.work_cap = budgets.work_cap;

    try {
        if (*verify) {
            check_opts.use_orbit_sums = verify_orbit;
            AnyCertificate cert = certificate_from_json(load_json_file(verify_path));
            return report_and_exit_code(check_any(cert, check_opts), format);
        }

        if (*lift_cmd) {
            AnyCertificate in = certificate_from_json(load_json_file(lift_in));
            SymmDualCert base;
            if (std::holds_alternative<SymmDualCert>(in)) {
                base = std::get<SymmDualCert>(in);
            } else if (std::holds_alternative<LpDualCert>(in)) {
                base = lpdual_to_symm_level1(std::get<LpDualCert>(in));
            } else {
                std::cerr << "lift: input must be symmpLPdual or a level-1 LPdual\n";
                return 64;
            }
            LiftOptions lo;
            lo.strict = !lift_unchecked;
            lo.check = check_opts;
            SymmDualCert out = lift_general(base, lift_level, lo);
            save_certificate_file(lift_out, to_json(out));
            Json j;
            j["level"] = lift_level;
            j["objective"] = rat_to_string(out.objective());
            j["out"] = lift_out;
            std::cout << j.dump(2) << "\n";
            return 0;
        }

        if (*comp) {
            ValidSpec spec = comp_spec.build();
            int k = comp_k ? *comp_k : max_valid_dim(spec);
            MDualCert cert = build_completeness_cert(spec.n, comp_level, k, spec.q, &spec);
            Json j;
            j["k"] = k;
            j["alpha"] = rat_to_string(cert.alpha);
            FeasibilityReport rep = check_mdual(cert, check_opts);
            j["status"] = FeasibilityReport::status_name(rep.status);
            if (comp_gap) {
                CompletenessGap gap = completeness_gap(spec.n, comp_level, spec);
                j["gap"] = Json{{"dual_objective", rat_to_string(gap.dual_objective)},
                                {"oracle_best", gap.oracle_best.get_str()},
                                {"equal", gap.equal}};
            }
            if (!comp_out.empty()) {
                save_certificate_file(comp_out, to_json(cert));
                j["out"] = comp_out;
            }
            std::cout << j.dump(2) << "\n";
            return rep.feasible() ? 0 : 2;
        }

        if (*spec_cmd) {
            SpectralParams p;
            p.l = sp_level;
            p.m = sp_m;
            p.eps = rat_from_string(sp_eps);
            p.n = sp_n;
            p.family = parse_family(sp_family);
            p.tau = sp_tau;
            p.dense_budget_bits = budgets.dense_bits();
            SpectralResult r = build_spectral_certificate(p);
            Json j = spectral_diag_json(r.diag);
            if (!sp_emit.empty()) {
                save_certificate_file(sp_emit, to_json(r.cert));
                j["out"] = sp_emit;
            }
            std::cout << j.dump(2) << "\n";
            return 0;
        }

        if (*sweep) {
            std::ostringstream csv;
            csv << "eps,tau,n,objective,rate,entropy,mrrw_leading,sign_check,walk_hypothesis,"
                   "feasible,status\n";
            std::string item;
            std::istringstream list(sw_eps);
            while (std::getline(list, item, ',')) {
                SpectralParams p;
                p.l = sw_level;
                p.m = sw_m;
                p.eps = rat_from_string(item);
                p.n = sw_n;
                p.family = parse_family(sw_family);
                p.dense_budget_bits = budgets.dense_bits();
                csv << item << ",";
                try {
                    SpectralResult r = build_spectral_certificate(p);
                    char buf[256];
                    std::snprintf(buf, sizeof(buf), "%.12g,%d,%s,%.12g,%.12g,%.12g,%d,%d,%d,ok",
                                  r.diag.tau, p.n, rat_to_string(r.diag.objective).c_str(),
                                  r.diag.rate, r.diag.entropy, mrrw_leading(p.eps.get_d()),
                                  (int)r.diag.sign_check, (int)r.diag.walk_hypothesis,
                                  (int)r.diag.feasible);
                    csv << buf << "\n";
                } catch (const NoRoot&) {
                    csv << ",,,,,,,,,no_root\n";
                }
            }
            if (sw_out.empty()) {
                std::cout << csv.str();
            } else {
                std::ofstream os(sw_out);
                os << csv.str();
                std::cout << "wrote " << sw_out << "\n";
            }
            return 0;
        }

        if (*lp) {
            LpProblem problem;
            std::optional<KlpBundle> bundle;
            ValidSpec spec;
            if (lp_klp) {
                spec = lp_spec.build();
                bundle = build_klp(spec, lp_level);
                problem = bundle->primal;
            } else if (!lp_in.empty()) {
                std::ifstream is(lp_in);
                if (!is) throw ParseError("cannot open " + lp_in);
                problem = read_lp(is);
            } else {
                std::cerr << "lp-solve: need --in or --klp\n";
                return 64;
            }
            if (!lp_write.empty()) {
                std::ofstream os(lp_write);
                write_lp(os, problem);
            }
            LpSolution sol = solve(problem);
            Json j;
            j["status"] = sol.status == LpSolution::Status::optimal      ? "optimal"
                          : sol.status == LpSolution::Status::infeasible ? "infeasible"
                                                                         : "unbounded";
            if (sol.status == LpSolution::Status::optimal) {
                j["objective"] = rat_to_string(sol.objective);
                Json primal = Json::array(), dual = Json::array();
                for (const auto& v : sol.primal) primal.push_back(rat_to_string(v));
                for (const auto& v : sol.dual) dual.push_back(rat_to_string(v));
                j["primal"] = std::move(primal);
                j["dual"] = std::move(dual);
            }
            if (!lp_emit_cert.empty()) {
                if (!bundle || sol.status != LpSolution::Status::optimal) {
                    std::cerr << "lp-solve: --emit-cert needs --klp and an optimal solve\n";
                    return 64;
                }
                std::vector<Rational> f = klp_dual_variables(*bundle, sol);
                LpDualCert cert = klp_dual_to_certificate(spec, lp_level, f);
                save_certificate_file(lp_emit_cert, to_json(cert));
                j["out"] = lp_emit_cert;
            }
            std::cout << j.dump(2) << "\n";
            return 0;
        }

        if (*maxcode) {
            ValidSpec spec = mc_spec.build();
            MaxCodeResult r = max_valid_code(spec, mc_level, budgets.subspace_cap);
            Json j;
            j["size"] = r.size.get_str();
            j["size_pow_l"] = r.size_pow_l.get_str();
            j["basis"] = to_json(r.best.basis);
            std::cout << j.dump(2) << "\n";
            return 0;
        }

        if (*audit) {
            AnyCertificate cert = certificate_from_json(load_json_file(audit_path));
            if (!std::holds_alternative<LpDualCert>(cert)) {
                std::cerr << "audit: only LPdual certificates have an independent audit path\n";
                return 64;
            }
            return report_and_exit_code(audit_certificate(std::get<LpDualCert>(cert)), format);
        }
    } catch (const BudgetExceeded& e) {
        std::cerr << "budget exceeded: " << e.what() << "\n";
        return 65;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 64;
}
