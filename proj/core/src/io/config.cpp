#include "cosserat/io/config.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace cosserat::io {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& msg) { throw std::invalid_argument("config: " + msg); }

void reject_unknown(const json& obj, const std::string& where,
                    std::initializer_list<const char*> known) {
    for (auto it = obj.begin(); it != obj.end(); ++it) {
        bool ok = false;
        for (const char* k : known)
            if (it.key() == k) ok = true;
        if (!ok) fail("unknown key '" + it.key() + "' in '" + where + "'");
    }
}

double need_number(const json& obj, const std::string& where, const char* key) {
    if (!obj.contains(key)) fail("'" + where + "' is missing '" + key + "'");
    const json& v = obj.at(key);
    if (!v.is_number()) fail("'" + where + "." + key + "' must be a number");
    return v.get<double>();
}

int need_int(const json& obj, const std::string& where, const char* key) {
    if (!obj.contains(key)) fail("'" + where + "' is missing '" + key + "'");
    const json& v = obj.at(key);
    if (!v.is_number_integer()) fail("'" + where + "." + key + "' must be an integer");
    return v.get<int>();
}

ScalarField parse_load(const json& v, const std::string& where, double a, double b) {
    if (v.is_number()) {
        const double c = v.get<double>();
        if (c == 0.0) return {};
        return uniform(c);
    }
    if (!v.is_object()) fail("'" + where + "' must be a number or a load object");
    reject_unknown(v, where, {"type", "amplitude", "m", "n"});
    if (!v.contains("type") || !v.at("type").is_string())
        fail("'" + where + "' needs a string 'type'");
    const std::string type = v.at("type").get<std::string>();
    if (type == "uniform") {
        return uniform(need_number(v, where, "amplitude"));
    }
    if (type == "sinusoid") {
        const double A = need_number(v, where, "amplitude");
        const double m = v.contains("m") ? need_number(v, where, "m") : 1.0;
        const double n = v.contains("n") ? need_number(v, where, "n") : 1.0;
        const double kx = m * M_PI / a, ky = n * M_PI / b;
        return [A, kx, ky](double x, double y) {
            return A * std::sin(kx * x) * std::sin(ky * y);
        };
    }
    fail("'" + where + ".type' must be 'uniform' or 'sinusoid'");
}

BCKind parse_kind(const std::string& s, const std::string& where) {
    if (s == "clamped" || s == "displacement") return BCKind::Displacement;
    if (s == "free" || s == "traction") return BCKind::Traction;
    if (s == "simply_supported") return BCKind::SimplySupported;
    fail("'" + where + "' has unknown edge kind '" + s + "'");
}

template <std::size_t N>
void parse_group(const json& v, const std::string& where, BCKind& kind,
                 std::array<ScalarField, N>& data) {
    if (v.is_string()) {
        kind = parse_kind(v.get<std::string>(), where);
        return;
    }
    if (!v.is_object()) fail("'" + where + "' must be a string or an object");
    reject_unknown(v, where, {"kind", "data"});
    if (!v.contains("kind") || !v.at("kind").is_string())
        fail("'" + where + "' needs a string 'kind'");
    kind = parse_kind(v.at("kind").get<std::string>(), where);
    if (v.contains("data")) {
        const json& d = v.at("data");
        if (!d.is_array() || d.size() != N)
            fail("'" + where + ".data' must be an array of " + std::to_string(N) + " numbers");
        if (kind == BCKind::SimplySupported)
            fail("'" + where + "': simply supported edges take no data");
        for (std::size_t i = 0; i < N; ++i) {
            if (!d[i].is_number()) fail("'" + where + ".data' must contain numbers");
            const double c = d[i].get<double>();
            if (c != 0.0) data[i] = uniform(c);
        }
    }
}

EdgeCondition parse_edge(const json& v, const std::string& where) {
    EdgeCondition ec;
    if (v.is_string()) {
        const BCKind k = parse_kind(v.get<std::string>(), where);
        ec.bending = k;
        ec.twisting = k;
        return ec;
    }
    if (!v.is_object()) fail("'" + where + "' must be a string or an object");
    reject_unknown(v, where, {"bending", "twisting"});
    if (v.contains("bending")) parse_group(v.at("bending"), where + ".bending", ec.bending, ec.bending_data);
    if (v.contains("twisting"))
        parse_group(v.at("twisting"), where + ".twisting", ec.twisting, ec.twisting_data);
    return ec;
}

}  // namespace

RunConfig parse_config(const std::string& json_text) {
    json root;
    try {
        root = json::parse(json_text);
    } catch (const json::parse_error& e) {
        fail(std::string("invalid JSON: ") + e.what());
    }
    if (!root.is_object()) fail("top level must be an object");
    reject_unknown(root, "config", {"material", "geometry", "loads", "bc", "run"});

    RunConfig rc;
    if (!root.contains("material")) fail("missing 'material' block");
    {
        const json& m = root.at("material");
        if (!m.is_object()) fail("'material' must be an object");
        reject_unknown(m, "material", {"lambda", "mu", "mu_c", "beta", "gamma", "epsilon"});
        rc.problem.moduli.lambda = need_number(m, "material", "lambda");
        rc.problem.moduli.mu = need_number(m, "material", "mu");
        rc.problem.moduli.mu_c = need_number(m, "material", "mu_c");
        rc.problem.moduli.beta = need_number(m, "material", "beta");
        rc.problem.moduli.gamma = need_number(m, "material", "gamma");
        rc.problem.moduli.epsilon = need_number(m, "material", "epsilon");
    }

    if (!root.contains("geometry")) fail("missing 'geometry' block");
    {
        const json& g = root.at("geometry");
        if (!g.is_object()) fail("'geometry' must be an object");
        reject_unknown(g, "geometry", {"a", "b", "h", "nx", "ny"});
        rc.problem.a = need_number(g, "geometry", "a");
        rc.problem.b = need_number(g, "geometry", "b");
        rc.problem.h = need_number(g, "geometry", "h");
        rc.problem.nx = need_int(g, "geometry", "nx");
        rc.problem.ny = need_int(g, "geometry", "ny");
    }

    if (root.contains("loads")) {
        const json& l = root.at("loads");
        if (!l.is_object()) fail("'loads' must be an object");
        reject_unknown(l, "loads", {"sigma_top", "sigma_bottom", "mu_top", "mu_bottom"});
        const double a = rc.problem.a, b = rc.problem.b;
        if (l.contains("sigma_top"))
            rc.problem.loads.sigma_top = parse_load(l.at("sigma_top"), "loads.sigma_top", a, b);
        if (l.contains("sigma_bottom"))
            rc.problem.loads.sigma_bottom =
                parse_load(l.at("sigma_bottom"), "loads.sigma_bottom", a, b);
        if (l.contains("mu_top"))
            rc.problem.loads.mu_top = parse_load(l.at("mu_top"), "loads.mu_top", a, b);
        if (l.contains("mu_bottom"))
            rc.problem.loads.mu_bottom = parse_load(l.at("mu_bottom"), "loads.mu_bottom", a, b);
    }

    if (root.contains("bc")) {
        const json& bc = root.at("bc");
        if (!bc.is_object()) fail("'bc' must be an object");
        reject_unknown(bc, "bc", {"left", "right", "bottom", "top"});
        const char* names[4] = {"left", "right", "bottom", "top"};
        for (int e = 0; e < 4; ++e)
            if (bc.contains(names[e]))
                rc.problem.edges[e] = parse_edge(bc.at(names[e]), std::string("bc.") + names[e]);
    }

    if (root.contains("run")) {
        const json& r = root.at("run");
        if (!r.is_object()) fail("'run' must be an object");
        reject_unknown(r, "run", {"model"});
        if (r.contains("model")) {
            if (!r.at("model").is_string()) fail("'run.model' must be a string");
            const std::string m = r.at("model").get<std::string>();
            if (m == "full")
                rc.model = PlateModel::Full;
            else if (m == "decoupled_reissner")
                rc.model = PlateModel::DecoupledReissner;
            else if (m == "symmetric_m")
                rc.model = PlateModel::SymmetricM;
            else
                fail("'run.model' must be 'full', 'decoupled_reissner' or 'symmetric_m'");
        }
    }

    return rc;
}

RunConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("config: cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_config(ss.str());
}

const char* model_name(PlateModel model) {
    switch (model) {
        case PlateModel::Full: return "full";
        case PlateModel::DecoupledReissner: return "decoupled_reissner";
        default: return "symmetric_m";
    }
}

}  // namespace cosserat::io
