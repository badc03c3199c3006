#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "drtk/einstein.hpp"

namespace drtk {

/// One verification record: the identity checked (ref), pass/fail, the worst
/// residual observed, and an optional exact/approximate value string.
struct CheckRecord {
    std::string name;
    bool pass = false;
    double residual = 0.0;
    std::string ref;   // the mathematical identity or property under test
    std::string value; // optional computed value, exact where available
};

struct SuiteResult {
    std::string suite;
    std::vector<CheckRecord> checks;
    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

struct RunConfig {
    std::string type = "damek_ricci"; // "damek_ricci" | "cayley"
    int m = 6;
    int mult_plus = 1;
    int mult_minus = 0;
    int cls = 1;     // class flag for m = 3 mod 4
    int epsilon = 1; // curvature sign for the cayley selector
    std::string suite = "all";
    std::size_t samples = 100;
    std::uint64_t seed = 1;
    std::string mode = "exact"; // "exact" | "float"
    double tol = 1e-9;
};

extern const std::vector<std::string> kSuiteNames; // without "all"

bool is_known_suite(const std::string& name);

/// Runs one named suite ("all" expands to every suite in fixed order).
std::vector<SuiteResult> run_suites(const RunConfig& cfg);

/// Line-delimited structured records plus a human summary; deterministic for
/// a fixed (config, seed).
std::string format_report(const std::vector<SuiteResult>& results, const RunConfig& cfg);

/// Deterministic 17-significant-digit decimal rendering.
std::string fmt_double(double x);

/// Exact algebraic number as a (rational, radical, coefficient) triple plus a
/// decimal approximation.
std::string fmt_alg(const AlgNum& x);

/// One-paragraph space summary for the build command.
std::string describe_space(const RunConfig& cfg);

} // namespace drtk
