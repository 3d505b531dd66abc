#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "cosserat/io/config.hpp"
#include "cosserat/io/csv.hpp"
#include "cosserat/io/svg.hpp"
#include "doctest.h"

using namespace cosserat;

namespace {

const char* kGoodConfig = R"({
  "material": {"lambda": 2, "mu": 1.5, "mu_c": 0.8,
               "beta": 0.4, "gamma": 0.9, "epsilon": 0.35},
  "geometry": {"a": 1, "b": 1.2, "h": 0.1, "nx": 9, "ny": 11},
  "loads":    {"sigma_top": {"type": "sinusoid", "amplitude": 0.5, "m": 1, "n": 2},
               "sigma_bottom": -0.25,
               "mu_top": 0},
  "bc":       {"left": "clamped", "right": "free",
               "bottom": "simply_supported",
               "top": {"bending": {"kind": "traction", "data": [0, 0, 1, 0, 0, 0]},
                       "twisting": "clamped"}},
  "run":      {"model": "decoupled_reissner"}
})";

std::string expect_config_error(const std::string& text) {
    try {
        io::parse_config(text);
    } catch (const std::invalid_argument& e) {
        return e.what();
    }
    return {};
}

PlateSolution small_solution() {
    PlateProblem pb;
    pb.moduli = {2.0, 1.5, 0.8, 0.4, 0.9, 0.35};
    pb.a = 1.0;
    pb.b = 1.2;
    pb.h = 0.1;
    pb.nx = 7;
    pb.ny = 9;
    pb.loads.sigma_top = uniform(0.5);
    pb.loads.sigma_bottom = uniform(-0.5);
    pb.edges = all_edges(BCKind::Displacement);
    return solve(pb);
}

}  // namespace

TEST_SUITE("io") {

TEST_CASE("doubles print in shortest round-trip form") {
    for (double v : {0.0, 1.0, -1.5, 0.1, 1.0 / 3.0, M_PI, 12345.678, -2.5e-7, 1e-300}) {
        const std::string s = io::format_double(v);
        CHECK(std::stod(s) == v);
    }
    CHECK(io::format_double(1.0) == "1");
    CHECK(io::format_double(0.5) == "0.5");
    CHECK(io::format_double(0.1) == "0.1");
    CHECK(io::format_double(-2.0) == "-2");
}

TEST_CASE("a full config document parses") {
    const io::RunConfig rc = io::parse_config(kGoodConfig);
    CHECK(rc.problem.moduli.lambda == 2.0);
    CHECK(rc.problem.moduli.epsilon == 0.35);
    CHECK(rc.problem.a == 1.0);
    CHECK(rc.problem.b == 1.2);
    CHECK(rc.problem.h == 0.1);
    CHECK(rc.problem.nx == 9);
    CHECK(rc.problem.ny == 11);
    CHECK(rc.model == PlateModel::DecoupledReissner);

    // loads: sinusoid and uniform forms, zero means "not set"
    REQUIRE(static_cast<bool>(rc.problem.loads.sigma_top));
    const double expect = 0.5 * std::sin(M_PI * 0.3 / 1.0) * std::sin(2.0 * M_PI * 0.4 / 1.2);
    CHECK(rc.problem.loads.sigma_top(0.3, 0.4) == doctest::Approx(expect).epsilon(1e-14));
    REQUIRE(static_cast<bool>(rc.problem.loads.sigma_bottom));
    CHECK(rc.problem.loads.sigma_bottom(0.9, 0.1) == -0.25);
    CHECK(!rc.problem.loads.mu_top);
    CHECK(!rc.problem.loads.mu_bottom);

    // bc: left/right/bottom/top order, string and object forms
    CHECK(rc.problem.edges[0].bending == BCKind::Displacement);
    CHECK(rc.problem.edges[0].twisting == BCKind::Displacement);
    CHECK(rc.problem.edges[1].bending == BCKind::Traction);
    CHECK(rc.problem.edges[2].bending == BCKind::SimplySupported);
    CHECK(rc.problem.edges[3].bending == BCKind::Traction);
    CHECK(rc.problem.edges[3].twisting == BCKind::Displacement);
    REQUIRE(static_cast<bool>(rc.problem.edges[3].bending_data[2]));
    CHECK(rc.problem.edges[3].bending_data[2](0.2, 1.2) == 1.0);
    CHECK(!rc.problem.edges[3].bending_data[0]);

    CHECK_NOTHROW(rc.problem.validate());
}

TEST_CASE("optional blocks default sensibly") {
    const io::RunConfig rc = io::parse_config(R"({
      "material": {"lambda": 1, "mu": 1, "mu_c": 1, "beta": 1, "gamma": 1, "epsilon": 1},
      "geometry": {"a": 1, "b": 1, "h": 0.2, "nx": 5, "ny": 5}
    })");
    CHECK(rc.model == PlateModel::Full);
    for (int e = 0; e < 4; ++e) {
        CHECK(rc.problem.edges[e].bending == BCKind::Displacement);
        CHECK(rc.problem.edges[e].twisting == BCKind::Displacement);
    }
    CHECK(!rc.problem.loads.sigma_top);
}

TEST_CASE("malformed configs are rejected with their path") {
    CHECK(expect_config_error("[]").find("config:") == 0);
    CHECK(expect_config_error("{ not json").find("config:") == 0);

    std::string msg = expect_config_error(R"({
      "material": {"lambda": 1, "mu": 1, "mu_c": 1, "beta": 1, "gamma": 1, "epsilon": 1},
      "geometry": {"a": 1, "b": 1, "h": 0.2, "nx": 5, "ny": 5},
      "geomtry": {}
    })");
    CHECK(msg.find("config:") == 0);
    CHECK(msg.find("geomtry") != std::string::npos);

    msg = expect_config_error(R"({"geometry": {"a":1,"b":1,"h":0.2,"nx":5,"ny":5}})");
    CHECK(msg.find("material") != std::string::npos);

    msg = expect_config_error(R"({
      "material": {"lambda": 1, "mu": 1, "mu_c": 1, "beta": 1, "gamma": 1, "epsilon": 1},
      "geometry": {"a": 1, "b": 1, "h": 0.2, "nx": 5, "ny": 5},
      "run": {"model": "fancy"}
    })");
    CHECK(msg.find("run.model") != std::string::npos);

    msg = expect_config_error(R"({
      "material": {"lambda": 1, "mu": 1, "mu_c": 1, "beta": 1, "gamma": 1, "epsilon": 1},
      "geometry": {"a": 1, "b": 1, "h": 0.2, "nx": 5, "ny": 5},
      "bc": {"left": {"bending": {"kind": "simply_supported", "data": [1,0,0,0,0,0]},
                      "twisting": "free"}}
    })");
    CHECK(msg.find("simply supported") != std::string::npos);
}

TEST_CASE("configs load from disk") {
    const std::string path = "io_test_config.json";
    {
        std::ofstream out(path);
        out << kGoodConfig;
    }
    const io::RunConfig rc = io::load_config(path);
    CHECK(rc.problem.nx == 9);
    std::remove(path.c_str());
    CHECK_THROWS_AS(io::load_config("definitely_missing.json"), std::runtime_error);
}

TEST_CASE("model names are stable") {
    CHECK(std::string(io::model_name(PlateModel::Full)) == "full");
    CHECK(std::string(io::model_name(PlateModel::DecoupledReissner)) == "decoupled_reissner");
    CHECK(std::string(io::model_name(PlateModel::SymmetricM)) == "symmetric_m");
}

TEST_CASE("csv export is deterministic and complete") {
    const PlateSolution sol = small_solution();
    std::ostringstream s1, s2;
    io::write_fields_csv(s1, sol);
    io::write_fields_csv(s2, sol);
    CHECK(s1.str() == s2.str());

    std::istringstream in(s1.str());
    std::string header;
    std::getline(in, header);
    CHECK(header.rfind("x1,x2,Psi1,Psi2,W,Om01,Om02,Om3,U1,U2,Om03,e11,", 0) == 0);
    CHECK(header.find(",M11,") != std::string::npos);
    CHECK(header.find(",Ms2") == header.size() - 4);
    int commas = 0;
    for (char ch : header) commas += ch == ',';
    CHECK(commas == 2 + 9 + 20 + 20 - 1);

    int rows = 0;
    std::string line;
    while (std::getline(in, line)) {
        ++rows;
        int c = 0;
        for (char ch : line) c += ch == ',';
        CHECK(c == commas);
    }
    CHECK(rows == sol.grid.size());
    CHECK(s1.str().substr(header.size() + 1, 4) == "0,0,");
}

TEST_CASE("svg export is deterministic and validates sizes") {
    FieldGrid g(6, 5, 0.2, 0.25);
    Field f = zero_field(g);
    for (int j = 0; j < g.ny; ++j)
        for (int i = 0; i < g.nx; ++i) f[g.idx(i, j)] = std::sin(0.7 * i) + 0.3 * j;

    std::ostringstream s1, s2;
    io::write_field_svg(s1, g, f, "demo field");
    io::write_field_svg(s2, g, f, "demo field");
    CHECK(s1.str() == s2.str());
    CHECK(s1.str().find("<svg") != std::string::npos);
    CHECK(s1.str().find("demo field") != std::string::npos);

    Field wrong(g.size() - 1, 0.0);
    std::ostringstream s3;
    CHECK_THROWS_AS(io::write_field_svg(s3, g, wrong, "bad"), std::invalid_argument);
}

}  // TEST_SUITE
