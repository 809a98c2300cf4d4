#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace absnorm::cli {

/// Exit-code contract of the command-line tool.
enum ExitCode : int {
    exit_ok = 0,
    exit_usage = 1,
    exit_theorem_failed = 2,
    exit_conjecture_failed = 3,
};

/// theorem: a proven inequality or an internal consistency contract; a
/// failure signals a bug. conjecture: a comparison against the conjectured
/// constant; a failure is informational.
enum class CheckLevel { theorem, conjecture };

struct CheckLine {
    std::string name;
    CheckLevel level = CheckLevel::theorem;
    bool passed = false;
    double value = 0.0;
    double bound = 0.0;
};

struct RunReport {
    std::string command;
    nlohmann::json config = nlohmann::json::object();
    nlohmann::json results = nlohmann::json::object();
    std::vector<CheckLine> checks;
    double wall_time_s = 0.0;

    /// value ≤ bound + tolerance.
    void check_le(std::string name, CheckLevel level, double value, double bound, double tolerance);
    void check_true(std::string name, CheckLevel level, bool ok);

    int exit_code() const noexcept;
    nlohmann::json to_json() const;
};

/// Finite doubles as numbers; ±inf and NaN as the strings "inf", "-inf", "nan".
nlohmann::json number(double v);

}  // namespace absnorm::cli
