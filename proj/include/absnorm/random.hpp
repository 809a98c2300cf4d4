#pragma once

// Seeded sampling. Every sample draws from its own stream derived from
// (master seed, index), so results never depend on evaluation order.

#include <cstdint>
#include <random>

#include "absnorm/matlin.hpp"
#include "absnorm/schatten.hpp"

namespace absnorm {

using Rng = std::mt19937_64;

/// SplitMix64 finalizer.
std::uint64_t splitmix64(std::uint64_t x) noexcept;
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) noexcept;

/// Entries with independent N(0, 1/2) real and imaginary parts (E|z|² = 1).
ComplexMatrix complex_gaussian(Eigen::Index rows, Eigen::Index cols, Rng& rng);
/// Haar-distributed unitary (QR of a Gaussian with the phases of R removed).
ComplexMatrix random_unitary(Eigen::Index n, Rng& rng);
/// G·G* for Gaussian G with a random rank in [1, n].
ComplexMatrix random_psd(Eigen::Index n, Rng& rng);
/// Gaussian divided by its operator norm times a factor in [1, 2].
ComplexMatrix random_contraction(Eigen::Index n, Rng& rng);

/// Gaussian members rescaled so the concatenated Frobenius norm is 1.
MatrixTuple random_tuple(std::size_t m, Eigen::Index n, std::uint64_t seed);

/// Test-suite mix: Gaussian tuples, rank-one tuples sharing an anchor, and
/// perturbed equiangular families (the near-extremal regime).
MatrixTuple random_stress_tuple(std::size_t m, Eigen::Index n, Rng& rng);

/// Scales every member so the concatenated Frobenius norm is 1.
MatrixTuple normalized(const MatrixTuple& t);

}  // namespace absnorm
