#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace momenta::scenario {

/// One named verification check. `criterion` ties the check to the numbered
/// acceptance criterion it certifies (0 = supporting check only).
struct Check {
    std::string name;
    std::string anchor;  // theorem / construction the check certifies
    double residual = 0.0;
    double tolerance = 0.0;
    bool pass = false;
    int criterion = 0;
};

struct Report {
    std::string scenario_id;
    std::vector<Check> checks;
    double wall_time = 0.0;

    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

struct Config {
    std::string scenario;
    double T = 10.0;
    double dt = 1e-3;
    std::uint64_t seed = 42;
    int samples = 100;
    int parallel = 1;
};

std::vector<std::string> verify_scenario_ids();

/// Run one scenario's check battery. Unknown id throws UnsupportedOperation.
Report run_verify(const Config& config);

/// Round to 15 significant digits (report determinism).
double round15(double x);

nlohmann::json report_json(const Report& report);

/// Simulation scenarios ("rigid-body", "harmonic-oscillator", "central-force"):
/// trajectory plus conserved-quantity columns.
std::vector<std::string> simulate_scenario_ids();
struct SimulationOutput {
    std::string csv;
    nlohmann::json json;
};
SimulationOutput run_simulate(const Config& config);

/// JSON report for `roots --algebra <name>`.
nlohmann::json roots_report(const std::string& algebra_name);

/// JSON report for `transversal --scenario r5|s2xs2|so3dual`.
nlohmann::json transversal_report(const std::string& scenario_id);

}  // namespace momenta::scenario
