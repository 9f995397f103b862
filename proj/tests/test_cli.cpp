#include "airyevolve/scenario.hpp"

#include <doctest.h>

#include <cstdlib>
#include <unistd.h>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace sc = airyevolve::scenario;
namespace fs = std::filesystem;

namespace {

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() /
               ("airyevolve-test-" + std::to_string(::getpid()) + "-" +
                std::to_string(counter()));
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
    static int counter() {
        static int c = 0;
        return ++c;
    }
};

} // namespace

TEST_CASE("config parsing") {
    const char* text = R"(# comment
[first]
kind = heat
beta = 0.5
t = 0.25

; another comment
[second]
kind = poly
family = airy
n-max = 6
)";
    auto scenarios = sc::parse_config_text(text);
    REQUIRE(scenarios.size() == 2);
    CHECK(scenarios[0].name == "first");
    CHECK(scenarios[0].kind == "heat");
    CHECK(scenarios[0].params.at("beta") == "0.5");
    CHECK(scenarios[1].kind == "poly");
    CHECK(scenarios[1].params.at("n-max") == "6");
}

TEST_CASE("malformed configs are rejected") {
    CHECK_THROWS_AS(sc::parse_config_text("[x]\nkind heat\n"), std::runtime_error);
    CHECK_THROWS_AS(sc::parse_config_text("key = 1\n"), std::runtime_error);
    CHECK_THROWS_AS(sc::parse_config_text("[x\nkind = heat\n"), std::runtime_error);
    CHECK_THROWS_AS(sc::parse_config_text("[x]\nbeta = 1\n"), std::runtime_error);
}

TEST_CASE("empty scenario list: exit 0 and an empty manifest") {
    TempDir tmp;
    int code = sc::run_scenarios({}, tmp.path.string(), false);
    CHECK(code == 0);
    auto manifest = slurp(tmp.path / "manifest.json");
    CHECK(manifest.find("\"ok\": true") != std::string::npos);
    CHECK(manifest.find("\"scenarios\": []") != std::string::npos);
}

TEST_CASE("heat scenario emits a deterministic field CSV and passes its check") {
    TempDir tmp;
    sc::Scenario s{"demo", "heat", {{"beta", "0.5"}, {"t", "0.25"}, {"n", "1201"}}};
    int code = sc::run_scenarios({s}, tmp.path.string(), false);
    CHECK(code == 0);

    auto csv1 = slurp(tmp.path / "demo_field.csv");
    CHECK(csv1.substr(0, 15) == "x,re,im,abs2\n-2");
    CHECK(csv1.find("\r") == std::string::npos);

    // byte-identical rerun
    int code2 = sc::run_scenarios({s}, tmp.path.string(), false);
    CHECK(code2 == 0);
    CHECK(slurp(tmp.path / "demo_field.csv") == csv1);

    auto manifest = slurp(tmp.path / "manifest.json");
    CHECK(manifest.find("gaussian-closed-form-linf") != std::string::npos);
    CHECK(manifest.find("\"ok\": true") != std::string::npos);
}

TEST_CASE("poly scenario emits exact rational coefficient rows") {
    TempDir tmp;
    sc::Scenario s{"airy-polys", "poly",
                   {{"family", "airy"}, {"n-max", "4"}, {"lambda", "0.5"}}};
    int code = sc::run_scenarios({s}, tmp.path.string(), false);
    CHECK(code == 0);
    auto csv = slurp(tmp.path / "airy-polys_coeffs.csv");
    CHECK(csv.find("n,degree,coefficient-numerator,coefficient-denominator\n") == 0);
    // ai_3(x, 1/2) = x^3 + 3: rows "3,0,3,1" and "3,3,1,1"
    CHECK(csv.find("3,0,3,1\n") != std::string::npos);
    CHECK(csv.find("3,3,1,1\n") != std::string::npos);
}

TEST_CASE("unknown scenario kinds and bad parameters give exit code 2") {
    TempDir tmp;
    CHECK(sc::run_scenarios({{"x", "nope", {}}}, tmp.path.string(), false) == 2);
    sc::Scenario bad{"x", "heat", {{"t", "-1"}}};
    CHECK(sc::run_scenarios({bad}, tmp.path.string(), false) == 2);
    sc::Scenario unknown_check{"x", "validate", {{"check", "bogus"}}};
    CHECK(sc::run_scenarios({unknown_check}, tmp.path.string(), false) == 2);
}

TEST_CASE("validate scenario runs a named check and reports it in the manifest") {
    TempDir tmp;
    sc::Scenario s{"check-centroid", "validate", {{"check", "centroid"}}};
    int code = sc::run_scenarios({s}, tmp.path.string(), false);
    CHECK(code == 0);
    auto manifest = slurp(tmp.path / "manifest.json");
    CHECK(manifest.find("centroid: acceleration law phi=sin") != std::string::npos);
}

TEST_CASE("parallel execution produces the same outputs") {
    TempDir tmp1, tmp2;
    std::vector<sc::Scenario> list = {
        {"a", "centroid", {{"phi", "sin"}}},
        {"b", "poly", {{"family", "heat"}, {"n-max", "5"}}},
        {"c", "wei-norman", {{"beta", "sin:1.0"}, {"samples", "11"}}},
    };
    CHECK(sc::run_scenarios(list, tmp1.path.string(), false) == 0);
    CHECK(sc::run_scenarios(list, tmp2.path.string(), true) == 0);
    CHECK(slurp(tmp1.path / "a_trajectory.csv") == slurp(tmp2.path / "a_trajectory.csv"));
    CHECK(slurp(tmp1.path / "b_coeffs.csv") == slurp(tmp2.path / "b_coeffs.csv"));
    CHECK(slurp(tmp1.path / "c_coeffs.csv") == slurp(tmp2.path / "c_coeffs.csv"));

    // manifests agree once the differing output directories are normalized
    auto normalized = [](std::string text, const std::string& dir) {
        for (std::size_t pos = text.find(dir); pos != std::string::npos;
             pos = text.find(dir))
            text.replace(pos, dir.size(), "DIR");
        return text;
    };
    CHECK(normalized(slurp(tmp1.path / "manifest.json"), tmp1.path.string()) ==
          normalized(slurp(tmp2.path / "manifest.json"), tmp2.path.string()));
}

TEST_CASE("output directory resolution honors the environment override") {
    ::setenv("AIRY_EVOLVE_OUT", "/tmp/airy-evolve-env-test", 1);
    CHECK(sc::resolve_output_dir("somewhere") == "/tmp/airy-evolve-env-test");
    ::unsetenv("AIRY_EVOLVE_OUT");
    CHECK(sc::resolve_output_dir("somewhere") == "somewhere");
    CHECK(sc::resolve_output_dir("") == ".");
}
