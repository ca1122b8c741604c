#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

namespace fs = std::filesystem;

namespace {

struct Run {
    int code;
    std::string out;
};

Run run(const std::string& args) {
    const fs::path log = fs::temp_directory_path() / "esst_cli_log.txt";
    const std::string cmd = std::string(ESST_CLI_PATH) + " " + args + " > " + log.string() + " 2>&1";
    const int status = std::system(cmd.c_str());
    std::ifstream in(log);
    std::stringstream ss;
    ss << in.rdbuf();
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, ss.str()};
}

fs::path fresh_dir(const std::string& name) {
    const fs::path dir = fs::temp_directory_path() / ("esst_cli_" + name);
    fs::remove_all(dir);
    return dir;
}

} // namespace

TEST_CASE("design writes pulses and a manifest") {
    const fs::path dir = fresh_dir("design");
    const Run r = run("design --out " + dir.string() + " --steps 200");
    CHECK(r.code == 0);
    CHECK(r.out.find("pulses.csv") != std::string::npos);
    CHECK(fs::exists(dir / "pulses.csv"));
    CHECK(fs::exists(dir / "run_manifest.json"));
    fs::remove_all(dir);
}

TEST_CASE("reproduce-fig2 writes the left trajectory") {
    const fs::path dir = fresh_dir("fig2");
    CHECK(run("reproduce-fig2 --out " + dir.string()).code == 0);
    CHECK(fs::exists(dir / "trajectory_left.csv"));
    fs::remove_all(dir);
}

TEST_CASE("sweep flags and config files") {
    const fs::path dir = fresh_dir("sweep");
    fs::create_directories(dir);
    {
        std::ofstream cfg(dir / "cfg.json");
        cfg << R"({"steps": 500, "workers": 2})";
    }
    const Run r = run("sweep --config " + (dir / "cfg.json").string() + " --etas 0.01,0.03 --out " +
                      (dir / "out").string());
    CHECK(r.code == 0);
    std::ifstream in(dir / "out" / "sweep.csv");
    std::string line;
    int rows = -1;
    while (std::getline(in, line)) ++rows;
    CHECK(rows == 2);
    fs::remove_all(dir);
}

TEST_CASE("invalid input exits with code 2 and writes nothing") {
    const fs::path dir = fresh_dir("bad");
    const Run r = run("sweep --eta 0 --out " + dir.string());
    CHECK(r.code == 2);
    CHECK(r.out.find("nonzero") != std::string::npos);
    CHECK_FALSE(fs::exists(dir));

    fs::create_directories(dir);
    {
        std::ofstream cfg(dir / "cfg.json");
        cfg << R"({"stepz": 500})";
    }
    CHECK(run("design --config " + (dir / "cfg.json").string()).code == 2);
    {
        std::ofstream cfg(dir / "cfg.json");
        cfg << "{ not json";
    }
    CHECK(run("design --config " + (dir / "cfg.json").string()).code == 2);
    fs::remove_all(dir);
}

TEST_CASE("usage errors") {
    CHECK(run("").code != 0);
    CHECK(run("launch").code != 0);
    const Run v = run("--version");
    CHECK(v.code == 0);
    CHECK(v.out.find("1.0.0") != std::string::npos);
}
