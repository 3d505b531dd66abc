// Process-level tests of the batch driver: exit codes, emitted files and
// byte determinism. The binary path comes in through the CLI_BIN macro.
#include <sys/wait.h>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "json.hpp"

namespace fs = std::filesystem;

namespace {

int run(const std::string& args) {
    const std::string cmd = std::string(CLI_BIN) + " " + args + " > /dev/null 2>&1";
    const int rc = std::system(cmd.c_str());
    REQUIRE(rc != -1);
    REQUIRE(WIFEXITED(rc));
    return WEXITSTATUS(rc);
}

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() /
               ("cosserat_cli_" + std::to_string(::getpid()) + "_" + std::to_string(counter()++));
        fs::create_directories(path);
    }
    ~TempDir() {
        std::error_code ec;
        fs::remove_all(path, ec);
    }
    static int& counter() {
        static int c = 0;
        return c;
    }
};

const char* kConfig = R"({
  "material": {"lambda": 2, "mu": 1.5, "mu_c": 0.8,
               "beta": 0.4, "gamma": 0.9, "epsilon": 0.35},
  "geometry": {"a": 1, "b": 1.2, "h": 0.1, "nx": 9, "ny": 9},
  "loads":    {"sigma_top": {"type": "sinusoid", "amplitude": 0.5, "m": 1, "n": 1},
               "sigma_bottom": {"type": "sinusoid", "amplitude": -0.5, "m": 1, "n": 1}},
  "bc":       {"left": "simply_supported", "right": "simply_supported",
               "bottom": "simply_supported", "top": "simply_supported"}
})";

fs::path write_config(const TempDir& td, const char* text) {
    const fs::path p = td.path / "run.json";
    std::ofstream out(p);
    out << text;
    return p;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("validate accepts a good configuration") {
    TempDir td;
    const fs::path cfg = write_config(td, kConfig);
    CHECK(run("validate " + cfg.string()) == 0);
}

TEST_CASE("configuration problems exit with code 2") {
    TempDir td;
    CHECK(run("validate " + (td.path / "missing.json").string()) == 2);

    const fs::path broken = td.path / "broken.json";
    {
        std::ofstream out(broken);
        out << "{\"material\": {}}";
    }
    CHECK(run("validate " + broken.string()) == 2);

    // inadmissible material: negative coupling modulus
    const fs::path bad = td.path / "bad_material.json";
    {
        std::ofstream out(bad);
        out << R"({"material": {"lambda": 2, "mu": 1.5, "mu_c": -0.8,
                                "beta": 0.4, "gamma": 0.9, "epsilon": 0.35},
                   "geometry": {"a": 1, "b": 1, "h": 0.1, "nx": 5, "ny": 5}})";
    }
    CHECK(run("validate " + bad.string()) == 2);

    CHECK(run("definitely-not-a-subcommand") == 2);
}

TEST_CASE("solve writes the dataset and a summary") {
    TempDir td;
    const fs::path cfg = write_config(td, kConfig);
    const fs::path out = td.path / "out";
    REQUIRE(run("solve " + cfg.string() + " -o " + out.string()) == 0);

    REQUIRE(fs::exists(out / "fields.csv"));
    REQUIRE(fs::exists(out / "summary.json"));

    const std::string csv = slurp(out / "fields.csv");
    int lines = 0;
    for (char c : csv) lines += c == '\n';
    CHECK(lines == 1 + 9 * 9);

    const nlohmann::json summary = nlohmann::json::parse(slurp(out / "summary.json"));
    CHECK(summary.at("model") == "full");
    CHECK(summary.at("grid").at("nx") == 9);
    CHECK(summary.at("material").at("class") == "PositiveDefinite");
    CHECK(summary.at("equilibrium_residual").at("max_interior").get<double>() < 1e-10);
    CHECK(summary.at("field_ranges").contains("W"));
}

TEST_CASE("repeated solves are byte identical") {
    TempDir td;
    const fs::path cfg = write_config(td, kConfig);
    const fs::path o1 = td.path / "a", o2 = td.path / "b";
    REQUIRE(run("solve " + cfg.string() + " -o " + o1.string()) == 0);
    REQUIRE(run("solve " + cfg.string() + " -o " + o2.string()) == 0);
    CHECK(slurp(o1 / "fields.csv") == slurp(o2 / "fields.csv"));
    CHECK(slurp(o1 / "summary.json") == slurp(o2 / "summary.json"));
}

TEST_CASE("svg rendering is optional and name checked") {
    TempDir td;
    const fs::path cfg = write_config(td, kConfig);
    const fs::path out = td.path / "svg";
    REQUIRE(run("solve " + cfg.string() + " -o " + out.string() + " --svg W --svg M11") == 0);
    CHECK(fs::exists(out / "W.svg"));
    CHECK(fs::exists(out / "M11.svg"));
    CHECK(slurp(out / "W.svg").find("<svg") != std::string::npos);

    CHECK(run("solve " + cfg.string() + " -o " + out.string() + " --svg Bogus") == 2);
}

TEST_CASE("unwritable output paths exit with code 4") {
    TempDir td;
    const fs::path cfg = write_config(td, kConfig);
    const fs::path blocker = td.path / "blocker";
    {
        std::ofstream out(blocker);
        out << "x";
    }
    CHECK(run("solve " + cfg.string() + " -o " + (blocker / "sub").string()) == 4);
}

TEST_CASE("quick verification pipeline passes end to end") {
    CHECK(run("verify --quick") == 0);
}

}  // TEST_SUITE
