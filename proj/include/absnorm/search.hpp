#pragma once

// Empirical lower bounds on c_p(m). A derivative-free pattern search climbs
// the ratio ‖ΣA_k‖_p / ‖Σ|A_k|‖_p from random starts; scan_family is the
// exact one-parameter search over the equiangular rank-one family.

#include <cstdint>
#include <optional>
#include <vector>

#include "absnorm/schatten.hpp"

namespace absnorm {

struct SearchConfig {
    std::size_t m = 2;
    Eigen::Index n = 4;
    PExponent p = PExponent::finite(2.0);
    std::size_t restarts = 32;
    std::size_t max_iters = 3000;  // ratio evaluations per restart
    double initial_step = 0.1;
    double shrink = 0.5;
    std::uint64_t seed = 1;
    unsigned threads = 1;  // wall time only; results do not depend on it
};

void validate(const SearchConfig& cfg);

struct LocalResult {
    MatrixTuple tuple;
    double ratio = 0.0;
    double initial_ratio = 0.0;
    std::size_t iters = 0;
    double final_step = 0.0;
    /// Ratio after each accepted move, starting with the initial ratio.
    std::vector<double> trace;
    /// Largest ratio evaluated, including rejected proposals.
    double max_evaluated = 0.0;
};

/// Pattern search over the 2·m·n² real coordinates. Proposals cycle two
/// coordinate directions per random unit direction; a full sweep without
/// improvement shrinks the step. `direction_seed` drives the random
/// directions.
LocalResult local_maximize(const MatrixTuple& start, PExponent p, const SearchConfig& cfg,
                           std::uint64_t direction_seed = 0);

struct FamilyScan {
    double s_best = 0.0;
    double ratio_best = 0.0;
};

/// Coarse grid over s ∈ [0, 1], golden-section refinement, and for finite p a
/// final bisection on the sign of the analytic log-derivative.
FamilyScan scan_family(std::size_t m, PExponent p, std::size_t grid_points = 201);

struct RestartTrace {
    std::size_t index = 0;
    std::uint64_t seed = 0;
    double initial_ratio = 0.0;
    double final_ratio = 0.0;
    std::size_t iters = 0;
    double max_evaluated = 0.0;
};

struct SearchReport {
    double best_ratio = 0.0;
    std::size_t best_restart = 0;
    MatrixTuple best_tuple;
    std::optional<double> conjectured;  // finite p > 1 only
    double universal = 0.0;
    std::optional<double> gap_to_conjecture;  // conjectured − best
    double gap_to_universal = 0.0;            // universal − best
    double max_evaluated = 0.0;
    std::vector<RestartTrace> restarts;
};

SearchReport search(const SearchConfig& cfg);

}  // namespace absnorm
