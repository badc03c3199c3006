// Command-line front end: `drtool build` prints a summary of the configured
// space; `drtool verify` runs the verification suites and writes a
// deterministic report.
#include <fstream>
#include <iostream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "drtk/report.hpp"

namespace {

int load_config(const std::string& path, drtk::RunConfig& cfg) {
    std::ifstream in(path);
    if (!in) {
        std::cerr << "error: cannot open config file: " << path << "\n";
        return 2;
    }
    nlohmann::json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        std::cerr << "error: config is not valid JSON: " << e.what() << "\n";
        return 2;
    }
    try {
        if (j.contains("type")) cfg.type = j.at("type").get<std::string>();
        if (j.contains("m")) cfg.m = j.at("m").get<int>();
        if (j.contains("mult_plus")) cfg.mult_plus = j.at("mult_plus").get<int>();
        if (j.contains("mult_minus")) cfg.mult_minus = j.at("mult_minus").get<int>();
        if (j.contains("class")) cfg.cls = j.at("class").get<int>();
        if (j.contains("epsilon")) cfg.epsilon = j.at("epsilon").get<int>();
    } catch (const std::exception& e) {
        std::cerr << "error: bad config field: " << e.what() << "\n";
        return 2;
    }
    return 0;
}

int validate_config(const drtk::RunConfig& cfg) {
    if (cfg.type != "damek_ricci" && cfg.type != "cayley") {
        std::cerr << "error: type must be \"damek_ricci\" or \"cayley\"\n";
        return 2;
    }
    if (cfg.type == "damek_ricci") {
        if (cfg.m < 1 || cfg.m > 8) {
            std::cerr << "error: m must be in 1..8\n";
            return 2;
        }
        if (cfg.mult_plus < 0 || cfg.mult_minus < 0 || cfg.mult_plus + cfg.mult_minus < 1) {
            std::cerr << "error: multiplicities must be nonnegative with positive sum\n";
            return 2;
        }
        if (cfg.mult_minus > 0 && cfg.m % 4 != 3) {
            std::cerr << "error: mult_minus > 0 requires m = 3 (mod 4)\n";
            return 2;
        }
        if (cfg.cls != 1 && cfg.cls != -1) {
            std::cerr << "error: class must be +1 or -1\n";
            return 2;
        }
    }
    if (cfg.epsilon != 1 && cfg.epsilon != -1) {
        std::cerr << "error: epsilon must be +1 or -1\n";
        return 2;
    }
    if (!drtk::is_known_suite(cfg.suite)) {
        std::cerr << "error: unknown suite \"" << cfg.suite << "\"\n";
        return 2;
    }
    if (cfg.mode != "exact" && cfg.mode != "float") {
        std::cerr << "error: mode must be \"exact\" or \"float\"\n";
        return 2;
    }
    if (!(cfg.tol > 0)) {
        std::cerr << "error: tol must be positive\n";
        return 2;
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"verification toolkit for the solvable and rank-one model spaces"};
    app.require_subcommand(1);

    std::string config_path, suite = "all", mode = "exact", out_path;
    std::size_t samples = 100;
    std::uint64_t seed = 1;
    double tol = 1e-9;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--config", config_path, "JSON space description");
        sub->add_option("--suite", suite, "suite name or \"all\"");
        sub->add_option("--samples", samples, "random samples per check");
        sub->add_option("--seed", seed, "deterministic RNG seed");
        sub->add_option("--mode", mode, "\"exact\" or \"float\"");
        sub->add_option("--tol", tol, "floating-point tolerance");
        sub->add_option("--out", out_path, "report output path (default stdout)");
    };

    CLI::App* build = app.add_subcommand("build", "construct the space and print a summary");
    build->add_option("--config", config_path, "JSON space description");
    CLI::App* verify = app.add_subcommand("verify", "run verification suites");
    add_common(verify);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    drtk::RunConfig cfg;
    if (!config_path.empty()) {
        if (const int rc = load_config(config_path, cfg); rc != 0) return rc;
    }
    cfg.suite = suite;
    cfg.samples = samples;
    cfg.seed = seed;
    cfg.mode = mode;
    cfg.tol = tol;
    if (const int rc = validate_config(cfg); rc != 0) return rc;

    try {
        if (build->parsed()) {
            std::cout << drtk::describe_space(cfg);
            return 0;
        }
        const auto results = drtk::run_suites(cfg);
        const std::string report = drtk::format_report(results, cfg);
        if (out_path.empty()) {
            std::cout << report;
        } else {
            std::ofstream out(out_path);
            if (!out) {
                std::cerr << "error: cannot open output file: " << out_path << "\n";
                return 2;
            }
            out << report;
        }
        for (const auto& s : results)
            if (!s.all_pass()) return 1;
        return 0;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
