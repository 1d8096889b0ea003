#pragma once

// Command-line surface: `dist`, `order-check`, `examples`, `schur-scan`,
// `mc-verify`. Configuration comes from flags, from a JSON file via
// --config, or both (flags override the file). Exit codes: 0 for any
// conclusive result, 2 for Neither/Indeterminate verdicts, 1 for errors.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace ecd::cli {

// Component vectors for one system; scalars broadcast against the longest
// vector when the system is built.
struct SystemConfig {
    std::vector<double> alpha{};
    std::vector<double> beta{};
    std::vector<double> lambda{};
};

struct GridConfig {
    double min = 0.0;
    double max = 0.0;
    std::size_t count = 400;
    std::string spacing = "log";  // log | linear
};

struct RunConfig {
    std::string command;  // dist | order-check | examples | schur-scan | mc-verify

    // dist
    double alpha = 1.0;
    double beta = 1.0;
    double lambda = 1.0;
    std::vector<double> xs{};

    // order-check / mc-verify
    std::string relation = "st";  // st | hr | rh | lr
    std::string kind = "series";  // series | parallel
    SystemConfig a{};
    SystemConfig b{};
    std::optional<GridConfig> grid{};  // absent = default grid (400 log points)

    // examples
    std::string which;  // 1 | 2 | 3 | 4 | fig1 | fig2

    // schur-scan
    std::string target;  // series-sf-lambda | parallel-cdf-lambda |
                         // parallel-cdf-beta | series-sf-alpha
    std::vector<double> vec{};

    // mc-verify
    std::size_t mc_n = 100000;

    // io
    std::string format = "table";  // table | csv | json
    std::string out_dir;           // empty = $ECD_OUT_DIR or "."
    std::uint64_t seed = 20250819;
};

// Strict parser: unknown fields at any level are rejected.
RunConfig config_from_json(const nlohmann::json& j);
nlohmann::json config_to_json(const RunConfig& c);

// Full CLI entry point; all output goes to the supplied streams so tests can
// run commands in-process. Returns the process exit code.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace ecd::cli
