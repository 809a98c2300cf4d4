#pragma once

// Closed-form candidate for the optimal constant c_p(m), built from the unique
// positive root x of x^p − 2x − (m−1) = 0. Everything runs on u = log x: the
// root grows like 2^{1/(p−1)} and leaves double range as p → 1⁺.

#include <cstddef>
#include <vector>

namespace absnorm {

struct RootResult {
    double x = 0.0;      // exp(log_x); +inf once it overflows
    double log_x = 0.0;  // contractual output
    int iterations = 0;
};

struct ConjectureResult {
    double p = 0.0;
    std::size_t m = 0;
    double x = 0.0;
    double log_x = 0.0;
    double c = 0.0;
    /// |x^p − 2x − (m−1)| / (2x + m − 1), evaluated in the log domain.
    double residual = 0.0;
    /// (√m)^{1−1/p}.
    double universal = 0.0;
};

inline constexpr double root_tolerance = 1e-12;
inline constexpr int root_iteration_cap = 200;

RootResult solve_x(double p, std::size_t m);

ConjectureResult c_conjectured(double p, std::size_t m);

struct LimitReport {
    std::size_t m = 0;
    std::vector<double> epsilons;         // p = 1 + ε
    std::vector<double> near_one;         // c at p = 1 + ε
    std::vector<double> large_p;          // P
    std::vector<double> near_sqrt_m;      // c at p = P
    bool monotone_to_one = false;         // c decreases as ε shrinks
    bool monotone_to_sqrt_m = false;      // c increases with P
    double gap_to_one = 0.0;              // |c(1 + ε_last) − 1|
    double gap_to_sqrt_m = 0.0;           // |c(P_last) − √m|
    double p2_value = 0.0;
    double p2_error = 0.0;                // |c(2, m) − √((1+√m)/2)|
};

LimitReport limit_checks(std::size_t m);

/// Maximum of R_p(y) over y ≥ 1 by golden-section search, independent of the
/// root solver.
double cross_check_scan(double p, std::size_t m);

}  // namespace absnorm
