#pragma once

// Seeded property suites over the theorem-backed inequalities. Each sample
// draws from its own RNG stream, so tallies are identical for any thread
// count.

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

namespace absnorm {

struct CheckTally {
    std::string name;
    std::size_t samples = 0;
    std::size_t failures = 0;
    /// Smallest slack seen, relative to max(1, bound) where a bound exists.
    double min_slack = std::numeric_limits<double>::infinity();
};

struct SuiteResult {
    std::string suite;
    std::vector<CheckTally> checks;

    bool passed() const noexcept;
    std::size_t failures() const noexcept;
};

struct SuiteOptions {
    std::size_t samples = 1000;
    std::uint64_t seed = 1;
    unsigned threads = 1;
};

/// Random tuples for m ∈ {2,3,5} × n ∈ {2,4,6} (samples per cell) against
/// √((1+√m)/2), plus saturation of the extremal family for m ∈ [2, 16].
SuiteResult frobenius_suite(const SuiteOptions& opt);

/// Matrix Cauchy–Schwarz with random PSD X, Y, contraction Q and
/// t ∈ {0.1, 1/(1+√m), 1, 10}; planted equality X = Y = Q = I, t = 1.
SuiteResult lemma_suite(const SuiteOptions& opt);

/// Power-family bound for a ∈ {0.25, 0.5, 1} × q ∈ {1, 2, 3, ∞}.
SuiteResult prop31_suite(const SuiteOptions& opt);

/// Intermediate steps: block positivity, weak log-majorization, the
/// geometric-mean bound, concave subadditivity and the direct-sum inequalities.
SuiteResult majorization_suite(const SuiteOptions& opt);

/// Scale, left/right unitary invariance of the ratio and ratio ≡ 1 on PSD tuples.
SuiteResult invariance_suite(const SuiteOptions& opt);

}  // namespace absnorm
