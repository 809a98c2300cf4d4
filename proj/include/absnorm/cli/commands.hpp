#pragma once

// Subcommands of the `absnorm` tool. Each run_* function is a pure
// orchestration step: it resolves its options, delegates to the library and
// returns a RunReport whose embedded config reproduces the results.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "absnorm/cli/report.hpp"

namespace absnorm::cli {

/// Thresholds for the pass/fail lines of a report.
struct Tolerances {
    double ineq = 1e-9;        // theorem bounds, relative to max(1, bound)
    double agreement = 1e-8;   // closed form vs numerics, scan vs root solver (relative)
    double exact = 1e-12;      // closed-form identities such as c_2(m)
    double residual = 1e-10;   // root residual, relative
    double ceiling = 1e-6;     // search ratios against (√m)^{1−1/p}
    double witness = 1e-10;    // re-evaluation of a saved witness

    /// Applies "name=value".
    void set(const std::string& assignment);
};

struct AbsOptions {
    std::string input;
    std::string output;
};

struct RatioOptions {
    std::vector<std::string> files;
    std::string p = "2";
    Tolerances tol;
};

struct ExtremalOptions {
    std::size_t m = 2;
    std::optional<double> s;
    bool optimal = false;
    std::string p = "2";
    long dimension = 0;  // 0: same as m
    std::string emit_dir;
    Tolerances tol;
};

struct ConjectureOptions {
    std::optional<double> p;
    std::size_t m = 2;
    bool table = false;
    bool limit = false;
    std::vector<double> p_grid{1.5, 2.0, 3.0, 4.0, 8.0};
    std::vector<std::size_t> m_grid{2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15, 16};
    std::string csv;
    Tolerances tol;
};

struct CheckOptions {
    std::string suite = "all";
    std::size_t samples = 1000;
    std::uint64_t seed = 1;
    unsigned threads = 1;
};

struct SearchOptions {
    std::size_t m = 2;
    long n = 4;
    std::string p = "2";
    std::size_t restarts = 32;
    std::size_t iters = 3000;
    double step = 0.1;
    double shrink = 0.5;
    std::uint64_t seed = 1;
    unsigned threads = 1;
    std::string emit_dir;
    Tolerances tol;
};

RunReport run_abs(const AbsOptions& opt);
RunReport run_ratio(const RatioOptions& opt);
RunReport run_extremal(const ExtremalOptions& opt);
RunReport run_conjecture(const ConjectureOptions& opt);
RunReport run_check(const CheckOptions& opt);
RunReport run_search(const SearchOptions& opt);

/// Re-executes the command recorded in a report and diffs the results.
RunReport run_replay(const nlohmann::json& recorded);

/// CSV rows for a conjecture table (header included).
std::string conjecture_csv(const nlohmann::json& rows);

/// Entry point behind main(); returns the process exit code.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace absnorm::cli
