// Command-line front end: scenario verification, simulation, root-system and
// Poisson-transversal reports.

#include <CLI11.hpp>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>

#include "momenta/errors.hpp"
#include "momenta/scenarios.hpp"

namespace {

namespace fs = std::filesystem;
using momenta::scenario::Config;

std::string output_dir(const std::string& flag_value) {
    if (const char* env = std::getenv("MOMENTA_OUT"); env && *env) return env;
    return flag_value;
}

void write_file(const fs::path& path, const std::string& text) {
    fs::create_directories(path.parent_path().empty() ? "." : path.parent_path());
    std::ofstream out(path);
    out << text;
}

/// Flags win over the JSON config file; the file fills in whatever the user
/// did not pass explicitly.
void apply_config_file(const std::string& path, const CLI::App* cmd, Config& config) {
    std::ifstream in(path);
    if (!in) throw momenta::UnsupportedOperation("cannot read config file: " + path);
    const nlohmann::json j = nlohmann::json::parse(in);
    auto unset = [&](const std::string& flag) {
        const CLI::Option* opt = cmd->get_option_no_throw(flag);
        return opt == nullptr || opt->count() == 0;
    };
    if (j.contains("T") && unset("--T")) config.T = j["T"].get<double>();
    if (j.contains("dt") && unset("--dt")) config.dt = j["dt"].get<double>();
    if (j.contains("seed") && unset("--seed")) config.seed = j["seed"].get<std::uint64_t>();
    if (j.contains("samples") && unset("--samples")) config.samples = j["samples"].get<int>();
    if (j.contains("parallel") && unset("--parallel")) config.parallel = j["parallel"].get<int>();
    if (j.contains("scenario") && unset("--scenario")) config.scenario = j["scenario"].get<std::string>();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"momenta: geometric mechanics verification at desk scale"};
    app.require_subcommand(1);

    Config config;
    std::string out_flag = ".";
    std::string format = "json";
    std::string algebra = "su3";
    std::string config_file;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--scenario", config.scenario, "scenario id");
        cmd->add_option("--T", config.T, "integration horizon (s)");
        cmd->add_option("--dt", config.dt, "integration step (s)");
        cmd->add_option("--seed", config.seed, "random seed");
        cmd->add_option("--samples", config.samples, "sample count");
        cmd->add_option("--parallel", config.parallel, "point-batch workers");
        cmd->add_option("--out", out_flag, "output directory");
        cmd->add_option("--format", format, "json or csv");
        cmd->add_option("--config", config_file, "JSON config file (flags win)");
    };

    CLI::App* verify = app.add_subcommand("verify", "run a scenario's verification battery");
    add_common(verify);
    CLI::App* simulate = app.add_subcommand("simulate", "integrate a scenario and export the trajectory");
    add_common(simulate);
    CLI::App* roots = app.add_subcommand("roots", "root decomposition / Weyl chamber report");
    roots->add_option("--algebra", algebra, "algebra name (so3, su2, su3, u2, t2, su2xsu2)");
    roots->add_option("--out", out_flag, "output directory");
    CLI::App* transversal = app.add_subcommand("transversal", "Poisson transversal reports");
    transversal->add_option("--scenario", config.scenario, "r5 | s2xs2 | so3dual");
    transversal->add_option("--out", out_flag, "output directory");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    const fs::path out_dir = output_dir(out_flag);

    try {
        if (verify->parsed()) {
            if (!config_file.empty()) apply_config_file(config_file, verify, config);
            if (config.scenario.empty()) throw momenta::UnsupportedOperation("missing --scenario");
            const auto report = momenta::scenario::run_verify(config);
            const auto j = momenta::scenario::report_json(report);
            const std::string text = j.dump(2) + "\n";
            write_file(out_dir / (config.scenario + ".verify.json"), text);
            std::cout << text;
            return report.all_pass() ? 0 : 1;
        }
        if (simulate->parsed()) {
            if (!config_file.empty()) apply_config_file(config_file, simulate, config);
            if (config.scenario.empty()) throw momenta::UnsupportedOperation("missing --scenario");
            try {
                const auto sim = momenta::scenario::run_simulate(config);
                if (format == "csv") {
                    write_file(out_dir / (config.scenario + ".csv"), sim.csv);
                    std::cout << out_dir / (config.scenario + ".csv") << "\n";
                } else {
                    const std::string text = sim.json.dump(2) + "\n";
                    write_file(out_dir / (config.scenario + ".json"), text);
                    std::cout << text;
                }
                return 0;
            } catch (const momenta::IntegrationFailure& e) {
                const nlohmann::json j = {{"schema", 1},
                                          {"scenario", config.scenario},
                                          {"error", e.what()},
                                          {"partial", true}};
                write_file(out_dir / (config.scenario + ".json"), j.dump(2) + "\n");
                std::cerr << "integration failure: " << e.what() << "\n";
                return 1;
            }
        }
        if (roots->parsed()) {
            const auto j = momenta::scenario::roots_report(algebra);
            const std::string text = j.dump(2) + "\n";
            write_file(out_dir / ("roots-" + algebra + ".json"), text);
            std::cout << text;
            return 0;
        }
        if (transversal->parsed()) {
            if (config.scenario.empty()) throw momenta::UnsupportedOperation("missing --scenario");
            const auto j = momenta::scenario::transversal_report(config.scenario);
            const std::string text = j.dump(2) + "\n";
            write_file(out_dir / ("transversal-" + config.scenario + ".json"), text);
            std::cout << text;
            return 0;
        }
    } catch (const momenta::UnsupportedOperation& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
