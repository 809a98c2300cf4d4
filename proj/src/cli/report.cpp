#include "absnorm/cli/report.hpp"

#include <cmath>

namespace absnorm::cli {

nlohmann::json number(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    return v;
}

void RunReport::check_le(std::string name, CheckLevel level, double value, double bound, double tolerance) {
    checks.push_back({std::move(name), level, value <= bound + tolerance, value, bound});
}

void RunReport::check_true(std::string name, CheckLevel level, bool ok) {
    checks.push_back({std::move(name), level, ok, ok ? 1.0 : 0.0, 1.0});
}

int RunReport::exit_code() const noexcept {
    bool conjecture_failed = false;
    for (const auto& c : checks) {
        if (c.passed) continue;
        if (c.level == CheckLevel::theorem) return exit_theorem_failed;
        conjecture_failed = true;
    }
    return conjecture_failed ? exit_conjecture_failed : exit_ok;
}

nlohmann::json RunReport::to_json() const {
    nlohmann::json checks_json = nlohmann::json::array();
    for (const auto& c : checks) {
        checks_json.push_back({{"name", c.name},
                               {"level", c.level == CheckLevel::theorem ? "theorem" : "conjecture"},
                               {"passed", c.passed},
                               {"value", number(c.value)},
                               {"bound", number(c.bound)}});
    }
    return {{"command", command},          {"config", config},
            {"results", results},          {"checks", checks_json},
            {"exit_code", exit_code()},    {"wall_time_s", wall_time_s}};
}

}  // namespace absnorm::cli
