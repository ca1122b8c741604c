// scenario.cpp

#include "esst/scenario.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <numbers>
#include <sstream>
#include <utility>

#include <json.hpp>

#include "esst/csv.hpp"
#include "esst/design.hpp"
#include "esst/metrics.hpp"
#include "esst/propagate.hpp"

namespace esst {

using json = nlohmann::ordered_json;

namespace {

constexpr std::array<std::pair<Mode, std::string_view>, 6> kModes{{
    {Mode::Design, "design"},
    {Mode::Propagate, "propagate"},
    {Mode::Sweep, "sweep"},
    {Mode::ReproduceFig2, "reproduce-fig2"},
    {Mode::ReproduceFig3, "reproduce-fig3"},
    {Mode::ReproduceFig4, "reproduce-fig4"},
}};

constexpr std::array<std::pair<ChiralitySelection, std::string_view>, 3> kChiralities{{
    {ChiralitySelection::Left, "left"},
    {ChiralitySelection::Right, "right"},
    {ChiralitySelection::Both, "both"},
}};

// microseconds per unit
constexpr std::array<std::pair<std::string_view, double>, 4> kUnits{{
    {"ns", 1e-3}, {"us", 1.0}, {"ms", 1e3}, {"s", 1e6}}};

// 2 pi x 10 MHz in rad/us
constexpr double kReferenceRabi = 2.0 * std::numbers::pi * 10.0;

double unit_in_us(const std::string& unit) {
    for (const auto& [name, us] : kUnits)
        if (name == unit) return us;
    throw ConfigError("tau_unit", "must be one of ns, us, ms, s (got \"" + unit + "\")");
}

template <typename T>
T get_checked(const json& doc, const char* key, bool (json::*is)() const noexcept,
              const char* type_name) {
    const json& v = doc.at(key);
    if (!(v.*is)()) throw ConfigError(key, std::string("expected ") + type_name);
    return v.get<T>();
}

std::string format_number(double v) {
    std::ostringstream os;
    os << std::setprecision(17) << v;
    return os.str();
}

} // namespace

std::string_view to_string(Mode m) noexcept {
    for (const auto& [mode, name] : kModes)
        if (mode == m) return name;
    return "unknown";
}

std::string_view to_string(ChiralitySelection c) noexcept {
    for (const auto& [sel, name] : kChiralities)
        if (sel == c) return name;
    return "unknown";
}

std::vector<double> ScenarioConfig::default_sweep_etas() {
    return log_spaced(0.005, 0.1, 20);
}

ConfigError::ConfigError(std::string field, const std::string& message)
    : std::invalid_argument("config field '" + field + "': " + message), field_(std::move(field)) {}

void ScenarioConfig::validate() const {
    if (!(tau > 0.0) || !std::isfinite(tau)) throw ConfigError("tau", "must be positive and finite");
    unit_in_us(tau_unit);
    if (!std::isfinite(eta)) throw ConfigError("eta", "must be finite");
    if (eta == 0.0)
        throw ConfigError("eta", "must be nonzero (eta = 0 makes Omega_y diverge at t = 0)");
    if (std::abs(eta) > kMaxEta) throw ConfigError("eta", "|eta| must not exceed 0.2");
    if (steps < kMinSteps) throw ConfigError("steps", "must be at least 100");
    if (etas.empty()) throw ConfigError("etas", "sweep eta list must not be empty");
    for (double e : etas)
        if (!(e > 0.0 && e <= kMaxEta))
            throw ConfigError("etas", "every eta must lie in (0, 0.2] (got " + format_number(e) + ")");
    if (output_dir.empty()) throw ConfigError("output_dir", "must not be empty");
}

ScenarioConfig parse_config(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ConfigError("<document>", std::string("malformed JSON: ") + e.what());
    }
    if (!doc.is_object()) throw ConfigError("<document>", "expected a JSON object");

    static const std::array<std::string_view, 9> kKeys{
        "mode", "tau", "tau_unit", "eta", "steps", "chirality", "etas", "workers", "output_dir"};
    for (const auto& item : doc.items()) {
        if (std::find(kKeys.begin(), kKeys.end(), item.key()) == kKeys.end())
            throw ConfigError(item.key(), "unknown key");
    }

    ScenarioConfig c;
    if (!doc.contains("mode")) throw ConfigError("mode", "missing required key");
    {
        const auto name = get_checked<std::string>(doc, "mode", &json::is_string, "a string");
        auto it = std::find_if(kModes.begin(), kModes.end(), [&](auto& m) { return m.second == name; });
        if (it == kModes.end()) throw ConfigError("mode", "unknown mode \"" + name + "\"");
        c.mode = it->first;
    }
    if (doc.contains("tau")) c.tau = get_checked<double>(doc, "tau", &json::is_number, "a number");
    if (doc.contains("tau_unit"))
        c.tau_unit = get_checked<std::string>(doc, "tau_unit", &json::is_string, "a string");
    if (doc.contains("eta")) c.eta = get_checked<double>(doc, "eta", &json::is_number, "a number");
    if (doc.contains("steps")) {
        const json& v = doc.at("steps");
        if (!v.is_number_integer() || v.get<long long>() < 0)
            throw ConfigError("steps", "expected a non-negative integer");
        c.steps = v.get<std::size_t>();
    }
    if (doc.contains("chirality")) {
        const auto name = get_checked<std::string>(doc, "chirality", &json::is_string, "a string");
        auto it = std::find_if(kChiralities.begin(), kChiralities.end(),
                               [&](auto& m) { return m.second == name; });
        if (it == kChiralities.end())
            throw ConfigError("chirality", "must be left, right or both (got \"" + name + "\")");
        c.chirality = it->first;
    }
    if (doc.contains("etas")) {
        const json& v = doc.at("etas");
        if (!v.is_array()) throw ConfigError("etas", "expected an array of numbers");
        c.etas.clear();
        for (const auto& e : v) {
            if (!e.is_number()) throw ConfigError("etas", "expected an array of numbers");
            c.etas.push_back(e.get<double>());
        }
    }
    if (doc.contains("workers")) {
        const json& v = doc.at("workers");
        if (!v.is_number_integer() || v.get<long long>() < 0)
            throw ConfigError("workers", "expected a non-negative integer");
        c.workers = v.get<unsigned>();
    }
    if (doc.contains("output_dir"))
        c.output_dir = get_checked<std::string>(doc, "output_dir", &json::is_string, "a string");

    c.validate();
    return c;
}

namespace {

json config_json(const ScenarioConfig& c) {
    json j;
    j["mode"] = to_string(c.mode);
    j["tau"] = c.tau;
    j["tau_unit"] = c.tau_unit;
    j["eta"] = c.eta;
    j["steps"] = c.steps;
    j["chirality"] = to_string(c.chirality);
    j["etas"] = c.etas;
    j["workers"] = c.workers;
    j["output_dir"] = c.output_dir;
    return j;
}

} // namespace

std::string serialize_config(const ScenarioConfig& config) {
    return config_json(config).dump(2) + "\n";
}

std::string sha256_hex(std::string_view data) {
    std::array<unsigned char, EVP_MAX_MD_SIZE> digest{};
    unsigned int len = 0;
    if (EVP_Digest(data.data(), data.size(), digest.data(), &len, EVP_sha256(), nullptr) != 1)
        throw std::runtime_error("sha256: digest failed");
    std::string hex;
    hex.reserve(2 * len);
    char buf[3];
    for (unsigned int i = 0; i < len; ++i) {
        std::snprintf(buf, sizeof buf, "%02x", digest[i]);
        hex += buf;
    }
    return hex;
}

namespace {

struct Output {
    std::string name;
    std::string content;
};

std::string pulses_csv(const PulseSet& pulses) {
    std::ostringstream os;
    write_pulses_csv(os, pulses);
    return os.str();
}

// Designed trajectory from |1> with the invariance residual attached.
std::string trajectory_csv(const DesignParams& params, Chirality c, std::size_t steps,
                           json& results) {
    const DesignParams branch{params.tau, c == Chirality::Left ? params.eta : -params.eta,
                              params.grid_points};
    const PulseSet pulses = designed_pulses(branch, c);
    Trajectory tr = propagate(pulses, c, QuantumState::basis(0), steps);
    tr.invariant_residual = designed_invariance_residuals(branch, c, tr.times);

    double max_residual = 0.0, max_norm = 0.0;
    for (double r : tr.invariant_residual)
        if (std::isfinite(r)) max_residual = std::max(max_residual, r);
    for (double n : tr.norm_error) max_norm = std::max(max_norm, n);
    const auto& p = tr.final_populations();
    results[std::string(to_string(c))] = {
        {"P1", p[0]}, {"P2", p[1]}, {"P3", p[2]},
        {"max_norm_error", max_norm},
        {"max_invariant_residual", max_residual},
        {"convergence", convergence_check(pulses, c, QuantumState::basis(0), steps)}};

    std::ostringstream os;
    write_trajectory_csv(os, tr);
    return os.str();
}

json feasibility(double omega_max_per_unit, double unit_us) {
    const double per_us = omega_max_per_unit / unit_us;
    return {{"omega_max_rad_per_us", per_us},
            {"reference_rad_per_us", kReferenceRabi},
            {"within_reference", per_us <= kReferenceRabi}};
}

std::vector<Output> compute(const ScenarioConfig& c, json& results, std::string& failure) {
    std::vector<Output> out;
    const double unit_us = unit_in_us(c.tau_unit);
    const DesignParams params{c.tau, c.eta, c.steps + 1};
    const PulseSet field = designed_pulses(params, Chirality::Left);

    auto add_field = [&] {
        out.push_back({"pulses.csv", pulses_csv(field)});
        const double om = omega_max(field);
        results["omega_max"] = om;
        results["feasibility"] = feasibility(om, unit_us);
    };
    auto add_trajectory = [&](Chirality ch) {
        out.push_back({"trajectory_" + std::string(to_string(ch)) + ".csv",
                       trajectory_csv(params, ch, c.steps, results["final_populations"])});
    };

    switch (c.mode) {
    case Mode::Design: add_field(); break;
    case Mode::Propagate:
        add_field();
        if (c.chirality != ChiralitySelection::Right) add_trajectory(Chirality::Left);
        if (c.chirality != ChiralitySelection::Left) add_trajectory(Chirality::Right);
        if (c.chirality == ChiralitySelection::Both) {
            const auto& fp = results["final_populations"];
            results["enantiomeric_excess"] = enantiomeric_excess(
                std::clamp(fp["left"]["P3"].get<double>(), 0.0, 1.0),
                std::clamp(fp["right"]["P3"].get<double>(), 0.0, 1.0));
        }
        break;
    case Mode::ReproduceFig2:
        add_field();
        add_trajectory(Chirality::Left);
        break;
    case Mode::ReproduceFig3:
        add_field();
        add_trajectory(Chirality::Right);
        break;
    case Mode::Sweep:
    case Mode::ReproduceFig4: {
        const auto rows = sweep_eta(c.etas, c.tau, {c.steps, c.workers, Integrator::Magnus4});
        std::ostringstream os;
        write_sweep_csv(os, rows);
        out.push_back({"sweep.csv", os.str()});
        std::string failures;
        for (const auto& r : rows)
            if (r.failed) failures += " eta=" + format_number(r.eta) + ": " + r.error + ";";
        if (!failures.empty()) {
            results["failed_rows"] = failures;
            failure = "sweep:" + failures;
            break;
        }
        bool p3l_dec = true, p3r_inc = true, om_dec = true;
        for (std::size_t i = 1; i < rows.size(); ++i) {
            p3l_dec = p3l_dec && rows[i].p3_left < rows[i - 1].p3_left;
            p3r_inc = p3r_inc && rows[i].p3_right > rows[i - 1].p3_right;
            om_dec = om_dec && rows[i].omega_max < rows[i - 1].omega_max;
        }
        results["trends"] = {{"P3_L_decreasing", p3l_dec},
                             {"P3_R_increasing", p3r_inc},
                             {"omega_max_decreasing", om_dec}};
        double om_max = 0.0;
        for (const auto& r : rows) om_max = std::max(om_max, r.omega_max);
        results["feasibility"] = feasibility(om_max, unit_us);
        break;
    }
    }
    return out;
}

} // namespace

RunResult run_scenario(const ScenarioConfig& config) {
    RunResult result;
    try {
        config.validate();
    } catch (const ConfigError& e) {
        return {2, e.what(), {}};
    }

    json results = json::object();
    std::vector<Output> outputs;
    std::string failure;
    try {
        outputs = compute(config, results, failure);
    } catch (const std::exception& e) {
        return {3, std::string("numerical failure: ") + e.what(), {}};
    }
    // failed sweep rows are still written (as nan) before reporting
    if (!failure.empty()) result = {3, "numerical failure: " + failure, {}};

    namespace fs = std::filesystem;
    try {
        const fs::path dir(config.output_dir);
        fs::create_directories(dir);
        json files = json::array();
        for (const auto& o : outputs) {
            const fs::path path = dir / o.name;
            std::ofstream f(path, std::ios::binary);
            f << o.content;
            if (!f) throw std::runtime_error("cannot write " + path.string());
            files.push_back({{"name", o.name}, {"bytes", o.content.size()},
                             {"sha256", sha256_hex(o.content)}});
            result.files.push_back(path.string());
        }
        json manifest;
        manifest["tool"] = "esst";
        manifest["version"] = kToolVersion;
        // workers and output_dir never influence file contents
        json recorded = config_json(config);
        recorded.erase("workers");
        recorded.erase("output_dir");
        manifest["config"] = recorded;
        manifest["integrator"] = "magnus4";
        manifest["units"] = {{"time", config.tau_unit}, {"rabi", "rad/" + config.tau_unit}};
        manifest["files"] = files;
        manifest["results"] = results;
        const fs::path mpath = dir / "run_manifest.json";
        std::ofstream mf(mpath, std::ios::binary);
        mf << manifest.dump(2) << '\n';
        if (!mf) throw std::runtime_error("cannot write " + mpath.string());
        result.files.push_back(mpath.string());
    } catch (const std::exception& e) {
        return {4, std::string("I/O failure: ") + e.what(), result.files};
    }
    return result;
}

} // namespace esst
