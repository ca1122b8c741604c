#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "esst/scenario.hpp"

using namespace esst;
namespace fs = std::filesystem;

namespace {

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

fs::path fresh_dir(const std::string& name) {
    const fs::path dir = fs::temp_directory_path() / ("esst_scenario_" + name);
    fs::remove_all(dir);
    return dir;
}

void check_rejected(const std::string& text, const std::string& field) {
    try {
        parse_config(text);
        FAIL("accepted: " << text);
    } catch (const ConfigError& e) {
        CHECK(e.field() == field);
    }
}

} // namespace

TEST_CASE("defaults") {
    const ScenarioConfig c = parse_config(R"({"mode":"reproduce-fig2"})");
    CHECK(c.mode == Mode::ReproduceFig2);
    CHECK(c.tau == 0.5);
    CHECK(c.tau_unit == "us");
    CHECK(c.eta == 0.02);
    CHECK(c.steps == 4000);
    CHECK(c.chirality == ChiralitySelection::Both);
    CHECK(c.etas.size() == 20);
    CHECK(c.etas.front() == 0.005);
    CHECK(c.etas.back() == 0.1);
    CHECK(c.workers == 0);
}

TEST_CASE("invalid configurations are rejected") {
    try {
        parse_config(R"({"mode":"sweep","eta":0})");
        FAIL("zero eta accepted");
    } catch (const ConfigError& e) {
        CHECK(e.field() == "eta");
        CHECK(std::string(e.what()).find("nonzero") != std::string::npos);
    }
    check_rejected(R"({"mode":"sweep","colour":1})", "colour");
    check_rejected(R"({"mode":"sweep","etas":[]})", "etas");
    check_rejected(R"({"mode":"sweep","etas":[0.02,0.5]})", "etas");
    check_rejected(R"({"mode":"sweep","eta":0.3})", "eta");
    check_rejected(R"({"mode":"sweep","steps":50})", "steps");
    check_rejected(R"({"mode":"sweep","steps":"many"})", "steps");
    check_rejected(R"({"mode":"sweep","tau":-1})", "tau");
    check_rejected(R"({"mode":"sweep","tau_unit":"fortnight"})", "tau_unit");
    check_rejected(R"({"mode":"sweep","chirality":"up"})", "chirality");
    check_rejected(R"({"mode":"dance"})", "mode");
    check_rejected(R"({"eta":0.02})", "mode");
    CHECK_THROWS_AS(parse_config(R"({"mode":)"), ConfigError);
    CHECK_THROWS_AS(parse_config("[1,2]"), ConfigError);
}

TEST_CASE("serialize and parse round trip") {
    ScenarioConfig c;
    c.mode = Mode::Propagate;
    c.tau = 750.0;
    c.tau_unit = "ns";
    c.eta = -0.013;
    c.steps = 1234;
    c.chirality = ChiralitySelection::Right;
    c.etas = {0.01, 0.02, 0.0312345678901234};
    c.workers = 3;
    c.output_dir = "some/where";
    CHECK(parse_config(serialize_config(c)) == c);
    const ScenarioConfig d = parse_config(R"({"mode":"design"})");
    CHECK(parse_config(serialize_config(d)) == d);
}

TEST_CASE("sha256") {
    CHECK(sha256_hex("abc") == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
    CHECK(sha256_hex("") == "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
}

TEST_CASE("reproduce-fig2 and fig3 runs") {
    for (const auto& [mode, key, pop] : {std::tuple{"reproduce-fig2", "left", "P3"},
                                         std::tuple{"reproduce-fig3", "right", "P2"}}) {
        const fs::path dir = fresh_dir(mode);
        ScenarioConfig c = parse_config(std::string(R"({"mode":")") + mode + "\"}");
        c.output_dir = dir.string();
        const RunResult r = run_scenario(c);
        REQUIRE(r.exit_code == 0);
        REQUIRE(r.files.size() == 3);
        CHECK(fs::path(r.files.back()).filename() == "run_manifest.json");
        const auto m = nlohmann::json::parse(slurp(dir / "run_manifest.json"));
        const double p = m["results"]["final_populations"][key][pop].get<double>();
        CHECK(p >= 0.9986);
        CHECK(p <= 0.9996);
        CHECK(m["results"]["final_populations"][key]["convergence"].get<double>() <= 1e-8);
        CHECK(m["results"]["feasibility"]["within_reference"].get<bool>());
        for (const auto& f : m["files"]) {
            const std::string content = slurp(dir / f["name"].get<std::string>());
            CHECK(f["sha256"].get<std::string>() == sha256_hex(content));
            CHECK(f["bytes"].get<std::size_t>() == content.size());
        }
        fs::remove_all(dir);
    }
}

TEST_CASE("reruns are bitwise identical") {
    const fs::path a = fresh_dir("rerun_a"), b = fresh_dir("rerun_b");
    ScenarioConfig c = parse_config(R"({"mode":"sweep","etas":[0.01,0.02,0.04],"steps":1000})");
    c.output_dir = a.string();
    c.workers = 1;
    REQUIRE(run_scenario(c).exit_code == 0);
    c.output_dir = b.string();
    c.workers = 3;
    REQUIRE(run_scenario(c).exit_code == 0);
    for (const char* name : {"sweep.csv", "run_manifest.json"}) CHECK(slurp(a / name) == slurp(b / name));
    fs::remove_all(a);
    fs::remove_all(b);
}

TEST_CASE("invalid configs write nothing") {
    const fs::path dir = fresh_dir("invalid");
    ScenarioConfig c;
    c.mode = Mode::Sweep;
    c.etas = {};
    c.output_dir = dir.string();
    const RunResult r = run_scenario(c);
    CHECK(r.exit_code == 2);
    CHECK(r.files.empty());
    CHECK_FALSE(fs::exists(dir));
}

TEST_CASE("propagate mode reports the excess") {
    const fs::path dir = fresh_dir("propagate");
    ScenarioConfig c = parse_config(R"({"mode":"propagate","steps":2000})");
    c.output_dir = dir.string();
    REQUIRE(run_scenario(c).exit_code == 0);
    CHECK(fs::exists(dir / "trajectory_left.csv"));
    CHECK(fs::exists(dir / "trajectory_right.csv"));
    const auto m = nlohmann::json::parse(slurp(dir / "run_manifest.json"));
    CHECK(m["results"]["enantiomeric_excess"].get<double>() > 0.998);
    fs::remove_all(dir);
}
