#ifndef DLPCERT_JSON_IO_HPP
#define DLPCERT_JSON_IO_HPP

#include <fstream>
#include <string>
#include <variant>

#include <json.hpp>

#include "certificates.hpp"

namespace dlpcert {

using Json = nlohmann::ordered_json;

// --- GridFunction ------------------------------------------------------------
// {"q":2,"l":1,"n":4,"repr":"dense","values":["p/q",...]}

inline Json to_json(const GridFunction& f) {
    Json j;
    j["q"] = f.q();
    j["l"] = f.l();
    j["n"] = f.n();
    j["repr"] = f.dense() ? "dense" : "symmetric";
    Json vals = Json::array();
    for (long i = 0; i < f.size(); ++i) vals.push_back(rat_to_string(f[i]));
    j["values"] = std::move(vals);
    return j;
}

inline GridFunction grid_from_json(const Json& j) {
    int q = j.at("q"), l = j.at("l"), n = j.at("n");
    std::string repr = j.at("repr");
    GridFunction f = repr == "dense" ? GridFunction::zeros_dense(l, n, q)
                                     : GridFunction::zeros_symmetric(l, n, q);
    const Json& vals = j.at("values");
    if ((long)vals.size() != f.size()) throw ParseError("grid_from_json: wrong value count");
    for (long i = 0; i < f.size(); ++i) f[i] = rat_from_string(vals[i].get<std::string>());
    return f;
}

// --- ValidSpec -----------------------------------------------------------------

inline Json to_json(const ValidSpec& s) {
    Json j;
    switch (s.kind) {
        case ValidSpec::Kind::distance_at_least:
            j["variant"] = "distance_at_least";
            j["d"] = s.d;
            break;
        case ValidSpec::Kind::epsilon_balanced:
            j["variant"] = "epsilon_balanced";
            j["eps"] = rat_to_string(s.eps);
            break;
        case ValidSpec::Kind::dim_at_most:
            j["variant"] = "dim_at_most";
            j["k"] = s.k;
            break;
    }
    j["n"] = s.n;
    j["q"] = s.q;
    return j;
}

inline ValidSpec spec_from_json(const Json& j) {
    std::string v = j.at("variant");
    int n = j.at("n"), q = j.at("q");
    if (v == "distance_at_least") return ValidSpec::distance(n, q, j.at("d"));
    if (v == "epsilon_balanced") return ValidSpec::balanced(n, rat_from_string(j.at("eps")));
    if (v == "dim_at_most") return ValidSpec::dim_at_most(n, q, j.at("k"));
    throw ParseError("spec_from_json: unknown variant '" + v + "'");
}

// --- matrices --------------------------------------------------------------------

inline Json to_json(const FqMat& M) {
    Json rows = Json::array();
    for (int i = 1; i <= M.rows(); ++i) {
        Json r = Json::array();
        for (int j = 1; j <= M.cols(); ++j) r.push_back((int)M.at(i, j));
        rows.push_back(std::move(r));
    }
    return rows;
}

inline FqMat mat_from_json(const Json& j, int q) {
    int rows = (int)j.size();
    int cols = rows ? (int)j.at(0).size() : 0;
    FqMat M(rows, cols, q);
    for (int i = 0; i < rows; ++i)
        for (int c = 0; c < cols; ++c) M.at(i + 1, c + 1) = (uint8_t)j.at(i).at(c).get<int>();
    return M;
}

// --- certificates ------------------------------------------------------------------
// {"schema":1,"formulation":...,"q":..,"l":..,"n":..,"spec":{...},
//  "payload":{...},"claimed_objective":"p/q"}

using AnyCertificate = std::variant<LpDualCert, SymmDualCert, PlpDualCert, MDualCert>;

inline Json to_json(const LpDualCert& c) {
    Json j;
    j["schema"] = 1;
    j["formulation"] = "LPdual";
    j["q"] = c.q();
    j["l"] = c.l;
    j["n"] = c.n();
    j["spec"] = to_json(c.spec);
    Json payload;
    payload["g"] = to_json(c.g);
    if (c.beta) payload["beta"] = to_json(*c.beta);
    j["payload"] = std::move(payload);
    j["claimed_objective"] = rat_to_string(c.objective());
    return j;
}

inline Json to_json(const SymmDualCert& c) {
    Json j;
    j["schema"] = 1;
    j["formulation"] = "symmpLPdual";
    j["q"] = c.q();
    j["l"] = c.l;
    j["n"] = c.n();
    j["spec"] = to_json(c.spec);
    Json gs = Json::array();
    for (const auto& g : c.g) gs.push_back(to_json(g));
    j["payload"] = Json{{"g", std::move(gs)}};
    j["claimed_objective"] = rat_to_string(c.objective());
    return j;
}

inline Json to_json(const PlpDualCert& c) {
    Json j;
    j["schema"] = 1;
    j["formulation"] = "pLPdual";
    j["q"] = c.q();
    j["l"] = c.l;
    j["n"] = c.n();
    j["spec"] = to_json(c.spec);
    Json comps = Json::array();
    for (const auto& comp : c.comps) {
        Json e;
        e["k"] = comp.k;
        e["M"] = to_json(comp.M);
        e["h"] = to_json(comp.h);
        comps.push_back(std::move(e));
    }
    Json payload;
    payload["h"] = std::move(comps);
    if (c.beta) payload["beta"] = to_json(*c.beta);
    j["payload"] = std::move(payload);
    j["claimed_objective"] = rat_to_string(plp_objective(c));
    return j;
}

inline Json to_json(const MDualCert& c) {
    Json j;
    j["schema"] = 1;
    j["formulation"] = "Mdual";
    j["q"] = c.spec.q;
    j["l"] = c.l;
    j["n"] = c.spec.n;
    j["spec"] = to_json(c.spec);
    Json payload;
    payload["alpha"] = rat_to_string(c.alpha);
    Json b = Json::array(), g = Json::array();
    for (const auto& v : c.beta_by_dim) b.push_back(rat_to_string(v));
    for (const auto& v : c.gamma_by_dim) g.push_back(rat_to_string(v));
    payload["beta_by_dim"] = std::move(b);
    payload["gamma_by_dim"] = std::move(g);
    j["payload"] = std::move(payload);
    j["claimed_objective"] = rat_to_string(c.alpha);
    return j;
}

inline AnyCertificate certificate_from_json(const Json& j) {
    if (j.value("schema", 0) != 1) throw ParseError("certificate: unsupported schema");
    std::string form = j.at("formulation");
    ValidSpec spec = spec_from_json(j.at("spec"));
    int l = j.at("l");
    const Json& payload = j.at("payload");
    if (form == "LPdual") {
        LpDualCert c;
        c.spec = spec;
        c.l = l;
        c.g = grid_from_json(payload.at("g"));
        if (payload.contains("beta")) c.beta = grid_from_json(payload.at("beta"));
        return c;
    }
    if (form == "symmpLPdual") {
        SymmDualCert c;
        c.spec = spec;
        c.l = l;
        for (const auto& g : payload.at("g")) c.g.push_back(grid_from_json(g));
        return c;
    }
    if (form == "pLPdual") {
        PlpDualCert c;
        c.spec = spec;
        c.l = l;
        c.qq = j.at("q");
        c.nn = j.at("n");
        for (const auto& e : payload.at("h")) {
            PlpComponent comp;
            comp.k = e.at("k");
            comp.M = mat_from_json(e.at("M"), c.qq);
            comp.h = grid_from_json(e.at("h"));
            c.comps.push_back(std::move(comp));
        }
        if (payload.contains("beta")) c.beta = grid_from_json(payload.at("beta"));
        return c;
    }
    if (form == "Mdual") {
        MDualCert c;
        c.spec = spec;
        c.l = l;
        c.alpha = rat_from_string(payload.at("alpha"));
        for (const auto& v : payload.at("beta_by_dim"))
            c.beta_by_dim.push_back(rat_from_string(v.get<std::string>()));
        for (const auto& v : payload.at("gamma_by_dim"))
            c.gamma_by_dim.push_back(rat_from_string(v.get<std::string>()));
        return c;
    }
    throw ParseError("certificate: unknown formulation '" + form + "'");
}

inline void save_certificate_file(const std::string& path, const Json& j) {
    std::ofstream os(path);
    if (!os) throw ParseError("cannot open for writing: " + path);
    os << j.dump(2) << "\n";
}

inline Json load_json_file(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw ParseError("cannot open: " + path);
    Json j;
    is >> j;
    return j;
}

inline Json to_json(const FeasibilityReport& r) {
    Json j;
    j["status"] = FeasibilityReport::status_name(r.status);
    j["objective"] = rat_to_string(r.objective);
    Json v = Json::array();
    for (const auto& viol : r.violations) {
        v.push_back(Json{{"constraint", viol.constraint},
                         {"witness", viol.witness},
                         {"lhs", viol.lhs},
                         {"required", viol.relation}});
    }
    j["violations"] = std::move(v);
    return j;
}

} // namespace dlpcert

#endif
