// scenario.hpp — configuration and execution of the design / propagate / sweep pipelines
//
// Config documents are strict JSON objects. Keys and defaults:
//   mode        required; design | propagate | sweep | reproduce-fig2 | reproduce-fig3 | reproduce-fig4
//   tau         0.5        total duration, in tau_unit
//   tau_unit    "us"       ns | us | ms | s; Rabi frequencies are reported in rad per tau_unit
//   eta         0.02       left-branch offset; the right branch uses -eta. 0 < |eta| <= 0.2
//   steps       4000       propagation steps (>= 100); waveforms are sampled on steps + 1 points
//   chirality   "both"     left | right | both (propagate mode)
//   etas        20 log-spaced values in [0.005, 0.1] (sweep modes); each in (0, 0.2]
//   workers     0          sweep threads, 0 = hardware concurrency; never affects output
//   output_dir  "."

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace esst {

enum class Mode { Design, Propagate, Sweep, ReproduceFig2, ReproduceFig3, ReproduceFig4 };
enum class ChiralitySelection { Left, Right, Both };

std::string_view to_string(Mode m) noexcept;
std::string_view to_string(ChiralitySelection c) noexcept;

struct ScenarioConfig {
    Mode mode = Mode::ReproduceFig2;
    double tau = 0.5;
    std::string tau_unit = "us";
    double eta = 0.02;
    std::size_t steps = 4000;
    ChiralitySelection chirality = ChiralitySelection::Both;
    std::vector<double> etas = default_sweep_etas();
    unsigned workers = 0;
    std::string output_dir = ".";

    static std::vector<double> default_sweep_etas();

    // Throws ConfigError naming the offending field.
    void validate() const;

    friend bool operator==(const ScenarioConfig&, const ScenarioConfig&) = default;
};

class ConfigError : public std::invalid_argument {
public:
    ConfigError(std::string field, const std::string& message);
    const std::string& field() const noexcept { return field_; }

private:
    std::string field_;
};

// Strict parse: malformed JSON, unknown keys, wrong types and out-of-range
// values raise ConfigError. Missing keys take the defaults above.
ScenarioConfig parse_config(std::string_view text);

// Canonical JSON of a resolved config; parse_config(serialize_config(c)) == c.
std::string serialize_config(const ScenarioConfig& config);

inline constexpr std::string_view kToolVersion = "1.0.0";

struct RunResult {
    int exit_code = 0;           // 0 ok, 2 invalid config, 3 numerical failure, 4 I/O failure
    std::string message;         // diagnostic on failure
    std::vector<std::string> files;  // written paths, manifest last
};

// Validates, computes every output in memory, then writes the CSVs and
// run_manifest.json into output_dir. Nothing is written when validation fails.
RunResult run_scenario(const ScenarioConfig& config);

// Lowercase hex SHA-256 digest.
std::string sha256_hex(std::string_view data);

} // namespace esst
