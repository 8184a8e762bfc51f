#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <fstream>
#include <json.hpp>
#include <sstream>
#include <string>

namespace {

struct RunResult {
    int exit_code;
    std::string stdout_text;
};

RunResult run_cli(const std::string& args) {
    const std::string out_path = "cli_stdout.tmp";
    const std::string cmd = std::string(MOMENTA_CLI_PATH) + " " + args + " > " + out_path + " 2>cli_stderr.tmp";
    const int status = std::system(cmd.c_str());
    std::ifstream in(out_path);
    std::stringstream buffer;
    buffer << in.rdbuf();
    return {WEXITSTATUS(status), buffer.str()};
}

nlohmann::json parse(const std::string& text) { return nlohmann::json::parse(text); }

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("verify runs a scenario and exits zero on success") {
    const auto result = run_cli("verify --scenario kks-so3 --out cli_out");
    CHECK(result.exit_code == 0);
    const auto j = parse(result.stdout_text);
    CHECK(j["schema"] == 1);
    CHECK(j["scenario"] == "kks-so3");
    CHECK(j["checks"].size() >= 3);
    for (const auto& check : j["checks"]) {
        CHECK(check.contains("name"));
        CHECK(check.contains("residual"));
        CHECK(check.contains("tolerance"));
        CHECK(check.contains("pass"));
        CHECK(check["pass"].get<bool>());
    }
    // The report file is written as well.
    std::ifstream file("cli_out/kks-so3.verify.json");
    CHECK(file.good());
}

TEST_CASE("unknown scenario is a usage error with exit code 2") {
    CHECK(run_cli("verify --scenario nonexistent").exit_code == 2);
    CHECK(run_cli("transversal --scenario nonsense").exit_code == 2);
    CHECK(run_cli("roots --algebra e8").exit_code == 2);
    CHECK(run_cli("verify").exit_code == 2);
}

TEST_CASE("point-batch workers do not change the report") {
    const auto serial = run_cli("verify --scenario jacobi-identity --samples 24 --out cli_out");
    const auto threaded =
        run_cli("verify --scenario jacobi-identity --samples 24 --parallel 3 --out cli_out");
    CHECK(serial.exit_code == 0);
    CHECK(threaded.exit_code == 0);
    auto a = parse(serial.stdout_text);
    auto b = parse(threaded.stdout_text);
    a.erase("wall_time");
    b.erase("wall_time");
    CHECK(a.dump() == b.dump());
}

TEST_CASE("reports are byte-identical for identical config and seed") {
    const auto first = run_cli("verify --scenario marsden-ratiu-r5 --seed 7 --out cli_out");
    const auto second = run_cli("verify --scenario marsden-ratiu-r5 --seed 7 --out cli_out");
    CHECK(first.exit_code == 0);
    CHECK(second.exit_code == 0);
    auto a = parse(first.stdout_text);
    auto b = parse(second.stdout_text);
    // wall_time is the one measured (non-deterministic) field.
    a.erase("wall_time");
    b.erase("wall_time");
    CHECK(a.dump() == b.dump());
}

TEST_CASE("roots report for su(3) and the abelian torus") {
    const auto su3 = run_cli("roots --algebra su3 --out cli_out");
    CHECK(su3.exit_code == 0);
    const auto j = parse(su3.stdout_text);
    CHECK(j["roots"].size() == 6);
    CHECK(j["simple"].size() == 2);
    CHECK(j["faces"].size() == 4);
    for (const auto& face : j["faces"]) {
        const int zeros = static_cast<int>(face["zero_set"].size());
        const int expected_iso = zeros == 0 ? 2 : (zeros == 1 ? 4 : 8);
        CHECK(face["isotropy_dim"].get<int>() == expected_iso);
    }

    const auto t2 = run_cli("roots --algebra t2 --out cli_out");
    CHECK(t2.exit_code == 0);
    CHECK(parse(t2.stdout_text)["roots"].empty());
}

TEST_CASE("transversal report classifies the R^5 catalogue like the worked example") {
    const auto result = run_cli("transversal --scenario r5 --out cli_out");
    CHECK(result.exit_code == 0);
    const auto j = parse(result.stdout_text);
    for (const auto& point : j["points"]) {
        const std::string name = point["submanifold"];
        if (name == "hyperplane") {
            CHECK(point["is_poisson_sub"].get<bool>());
            CHECK_FALSE(point["is_transversal"].get<bool>());
        } else {
            CHECK(point["is_transversal"].get<bool>());
        }
        CHECK(point["charac_agree"].get<bool>());
    }
}

TEST_CASE("simulation CSV carries conserved-quantity columns") {
    const auto result = run_cli("simulate --scenario rigid-body --T 1 --format csv --out cli_out");
    CHECK(result.exit_code == 0);
    std::ifstream csv("cli_out/rigid-body.csv");
    REQUIRE(csv.good());
    std::string header;
    std::getline(csv, header);
    CHECK(header == "t,x1,x2,x3,H,alpha_sq");
    // Casimir column is constant through the file.
    std::string line;
    double first_casimir = -1.0;
    while (std::getline(csv, line)) {
        const auto pos = line.rfind(',');
        const double casimir = std::stod(line.substr(pos + 1));
        if (first_casimir < 0) first_casimir = casimir;
        CHECK(std::abs(casimir - first_casimir) < 1e-6);
    }
}

TEST_CASE("zero-horizon simulation emits a single row") {
    const auto result = run_cli("simulate --scenario harmonic-oscillator --T 0 --format csv --out cli_out");
    CHECK(result.exit_code == 0);
    std::ifstream csv("cli_out/harmonic-oscillator.csv");
    REQUIRE(csv.good());
    int rows = 0;
    std::string line;
    std::getline(csv, line);  // header
    while (std::getline(csv, line)) ++rows;
    CHECK(rows == 1);
}

TEST_CASE("harmonic oscillator conserves |q|^2 + |p|^2 along the exported run") {
    const auto result =
        run_cli("simulate --scenario harmonic-oscillator --T 2 --format csv --out cli_out");
    CHECK(result.exit_code == 0);
    std::ifstream csv("cli_out/harmonic-oscillator.csv");
    std::string line;
    std::getline(csv, line);
    double first = -1.0;
    while (std::getline(csv, line)) {
        const auto pos = line.rfind(',');
        const double norm_sq = std::stod(line.substr(pos + 1));
        if (first < 0) first = norm_sq;
        CHECK(std::abs(norm_sq - first) < 1e-6);
    }
}

TEST_CASE("reconstruction residual grows by roughly the square of the step") {
    const auto coarse =
        run_cli("verify --scenario rigid-body-reconstruction --dt 1e-2 --out cli_out_coarse");
    const auto fine =
        run_cli("verify --scenario rigid-body-reconstruction --dt 1e-3 --out cli_out_fine");
    CHECK(fine.exit_code == 0);
    auto residual_of = [](const nlohmann::json& j) {
        for (const auto& check : j["checks"])
            if (check["name"] == "reconstruction-residual") return check["residual"].get<double>();
        return -1.0;
    };
    const double coarse_res = residual_of(parse(coarse.stdout_text));
    const double fine_res = residual_of(parse(fine.stdout_text));
    REQUIRE(coarse_res > 0);
    REQUIRE(fine_res > 0);
    CHECK(coarse_res / fine_res > 20.0);  // order-2 behaviour: ~100x at 10x the step
}

TEST_CASE("config file fills defaults and flags win") {
    {
        std::ofstream cfg("cli_config.json");
        cfg << R"({"scenario": "kks-so3", "seed": 11, "samples": 30})";
    }
    const auto from_file = run_cli("verify --config cli_config.json --out cli_out");
    CHECK(from_file.exit_code == 0);
    CHECK(parse(from_file.stdout_text)["scenario"] == "kks-so3");

    const auto overridden =
        run_cli("verify --config cli_config.json --scenario marsden-ratiu-r5 --out cli_out");
    CHECK(overridden.exit_code == 0);
    CHECK(parse(overridden.stdout_text)["scenario"] == "marsden-ratiu-r5");
}

TEST_CASE("MOMENTA_OUT environment variable overrides --out") {
    const std::string cmd = std::string("MOMENTA_OUT=cli_env_out ") + MOMENTA_CLI_PATH +
                            " roots --algebra su2 --out cli_ignored > cli_stdout.tmp 2>&1";
    CHECK(WEXITSTATUS(std::system(cmd.c_str())) == 0);
    std::ifstream file("cli_env_out/roots-su2.json");
    CHECK(file.good());
}

}  // TEST_SUITE
