// Batch driver for the Cosserat plate library.
//
// Exit codes: 0 success, 1 verification failure, 2 configuration or
// material error, 3 solver failure, 4 file I/O error.

#include <cstdio>
#include <exception>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cosserat/io/config.hpp"
#include "cosserat/io/csv.hpp"
#include "cosserat/io/svg.hpp"
#include "cosserat/material.hpp"
#include "cosserat/solver.hpp"
#include "cosserat/verify.hpp"
#include "json.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kVerifyFailed = 1;
constexpr int kConfigError = 2;
constexpr int kSolverError = 3;
constexpr int kIoError = 4;

const char* kFieldNames[9] = {"Psi1", "Psi2", "W",  "Om01", "Om02",
                              "Om3",  "U1",   "U2", "Om03"};
const char* kResultantNames[20] = {"M11", "M12", "M21", "M22", "Q1",  "Q2",  "Qs1",
                                   "Qs2", "R11", "R12", "R21", "R22", "Ss1", "Ss2",
                                   "N11", "N12", "N21", "N22", "Ms1", "Ms2"};

cosserat::io::RunConfig load_or_exit(const std::string& path) {
    try {
        cosserat::io::RunConfig rc = cosserat::io::load_config(path);
        rc.problem.validate();
        return rc;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        std::exit(kConfigError);
    }
}

int run_validate(const std::string& path) {
    cosserat::io::RunConfig rc = load_or_exit(path);
    const auto& m = rc.problem.moduli;
    cosserat::AdmissibilityReport rep = cosserat::classify_material(m);
    std::cout << "config:    ok\n";
    std::cout << "model:     " << cosserat::io::model_name(rc.model) << "\n";
    std::cout << "grid:      " << rc.problem.nx << " x " << rc.problem.ny << " over "
              << rc.problem.a << " x " << rc.problem.b << ", thickness " << rc.problem.h << "\n";
    std::cout << "material:  " << cosserat::to_string(rep.cls) << "\n";
    cosserat::PrimedModuli p = cosserat::primed_constants(m);
    std::cout << "inverse-law constants: lambda' = " << p.lambda_p << ", mu' = " << p.mu_p
              << ", mu_c' = " << p.mu_c_p << ", beta' = " << p.beta_p << ", gamma' = " << p.gamma_p
              << ", epsilon' = " << p.epsilon_p << "\n";
    return kOk;
}

nlohmann::json field_range(const cosserat::Field& f) {
    double lo = f[0], hi = f[0];
    for (double v : f) {
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    return {{"min", lo}, {"max", hi}};
}

int run_solve(const std::string& path, const std::string& out_dir,
              const std::vector<std::string>& svg_fields) {
    cosserat::io::RunConfig rc = load_or_exit(path);

    cosserat::PlateSolution sol;
    try {
        sol = cosserat::solve_reduced(rc.problem, rc.model);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kConfigError;
    } catch (const std::exception& e) {
        std::cerr << "solver error: " << e.what() << "\n";
        return kSolverError;
    }
    cosserat::EquilibriumResidual res = cosserat::plate_residual(rc.problem, sol);

    std::error_code ec;
    std::filesystem::create_directories(out_dir, ec);
    if (ec) {
        std::cerr << "i/o error: cannot create '" << out_dir << "': " << ec.message() << "\n";
        return kIoError;
    }

    const std::filesystem::path out(out_dir);
    {
        std::ofstream csv(out / "fields.csv");
        if (!csv) {
            std::cerr << "i/o error: cannot open " << (out / "fields.csv") << "\n";
            return kIoError;
        }
        cosserat::io::write_fields_csv(csv, sol);
        if (!csv) {
            std::cerr << "i/o error: short write to " << (out / "fields.csv") << "\n";
            return kIoError;
        }
    }

    nlohmann::json summary;
    summary["model"] = cosserat::io::model_name(rc.model);
    summary["grid"] = {{"nx", rc.problem.nx}, {"ny", rc.problem.ny},
                       {"a", rc.problem.a},   {"b", rc.problem.b},
                       {"h", rc.problem.h}};
    const auto& mo = rc.problem.moduli;
    summary["material"] = {{"lambda", mo.lambda}, {"mu", mo.mu},       {"mu_c", mo.mu_c},
                           {"beta", mo.beta},     {"gamma", mo.gamma}, {"epsilon", mo.epsilon},
                           {"class", cosserat::to_string(cosserat::classify_material(mo).cls)}};
    summary["solver"] = {{"used_iterative", sol.stats.used_iterative},
                         {"iterations", sol.stats.iterations},
                         {"residual", sol.stats.residual},
                         {"bordered_groups", sol.stats.bordered_groups},
                         {"multipliers", sol.stats.multipliers}};
    summary["equilibrium_residual"] = {{"max_interior", res.max_interior},
                                       {"max_global", res.max_global}};
    nlohmann::json ranges;
    for (int f = 0; f < 9; ++f) ranges[kFieldNames[f]] = field_range(sol.fields.comp[f]);
    summary["field_ranges"] = ranges;
    {
        std::ofstream js(out / "summary.json");
        if (!js) {
            std::cerr << "i/o error: cannot open " << (out / "summary.json") << "\n";
            return kIoError;
        }
        js << summary.dump(2) << "\n";
    }

    for (const std::string& name : svg_fields) {
        const cosserat::Field* f = nullptr;
        for (int k = 0; k < 9; ++k)
            if (name == kFieldNames[k]) f = &sol.fields.comp[k];
        for (int k = 0; k < 20; ++k)
            if (name == kResultantNames[k]) f = &sol.resultants.comp[k];
        if (!f) {
            std::cerr << "error: unknown field '" << name << "' for --svg\n";
            return kConfigError;
        }
        std::ofstream sv(out / (name + ".svg"));
        if (!sv) {
            std::cerr << "i/o error: cannot open " << (out / (name + ".svg")) << "\n";
            return kIoError;
        }
        cosserat::io::write_field_svg(sv, sol.grid, *f, name);
    }

    std::cout << "wrote " << (out / "fields.csv").string() << " and "
              << (out / "summary.json").string();
    for (const std::string& name : svg_fields) std::cout << " and " << name << ".svg";
    std::cout << "\n";
    std::cout << "equilibrium residual (interior rms, max over fields): " << res.max_interior
              << "\n";
    return kOk;
}

int run_verify(bool quick) {
    cosserat::VerifyOptions opt;
    opt.quick = quick;
    cosserat::VerificationReport report = cosserat::run_verification(opt);
    for (const auto& c : report.checks) {
        std::printf("%s  %-32s  value=%-12.5g bound=%-10.5g %s\n", c.pass ? "PASS" : "FAIL",
                    c.name.c_str(), c.value, c.threshold, c.detail.c_str());
    }
    std::printf("%zu/%zu checks passed\n",
                static_cast<size_t>(std::count_if(report.checks.begin(), report.checks.end(),
                                                  [](const auto& c) { return c.pass; })),
                report.checks.size());
    return report.all_passed() ? kOk : kVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Cosserat plate batch solver"};
    app.require_subcommand(1);

    std::string config_path;
    std::string out_dir = "out";
    std::vector<std::string> svg_fields;
    bool quick = false;

    CLI::App* validate = app.add_subcommand("validate", "Parse and check a run configuration");
    validate->add_option("config", config_path, "JSON configuration file")->required();

    CLI::App* solve = app.add_subcommand("solve", "Solve a plate problem and write results");
    solve->add_option("config", config_path, "JSON configuration file")->required();
    solve->add_option("-o,--out", out_dir, "Output directory (created if missing)");
    solve->add_option("--svg", svg_fields,
                      "Also render this field (kinematic or resultant name) to <name>.svg");

    CLI::App* verify = app.add_subcommand("verify", "Run the built-in verification suite");
    verify->add_flag("--quick", quick, "Smaller grids and shorter sweeps");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kOk : kConfigError;
    }

    try {
        if (validate->parsed()) return run_validate(config_path);
        if (solve->parsed()) return run_solve(config_path, out_dir, svg_fields);
        return run_verify(quick);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kSolverError;
    }
}
