#pragma once

// Equiangular rank-one families A_k = u·x_k* with ⟨x_j, x_k⟩ = s (j ≠ k),
// the construction that attains the sharp Frobenius constant, plus the
// closed forms used to cross-check their numerics.

#include <optional>

#include "absnorm/matlin.hpp"
#include "absnorm/schatten.hpp"

namespace absnorm {

struct EquiangularFamily {
    std::size_t m = 0;
    double s = 0.0;
    ComplexMatrix vectors;  // n×m, unit columns x_k
    ComplexMatrix anchor;   // n×1 unit vector u
    MatrixTuple tuple;      // A_k = u·x_k*
};

/// (1−s)I_m + sJ_m.
ComplexMatrix build_gram(std::size_t m, double s);

/// Family in C^n (n = m by default; n > m pads the vectors with zeros).
/// The anchor defaults to the first standard basis vector.
EquiangularFamily build_family(std::size_t m, double s,
                               const std::optional<ComplexMatrix>& anchor = std::nullopt,
                               std::optional<Eigen::Index> dimension = std::nullopt);

/// m + m(m−1)s, the squared Frobenius norm of ΣA_k.
double lhs_sq_frobenius(std::size_t m, double s);
/// m + m(m−1)s², the squared Frobenius norm of Σ|A_k|.
double rhs_sq_frobenius(std::size_t m, double s);
/// (1+(m−1)s)/(1+(m−1)s²).
double f_ratio(std::size_t m, double s);
/// 1/(1+√m), the maximizer of f_ratio.
double s_star(std::size_t m);

/// Closed-form ratio of the family in Schatten p:
/// √(m+m(m−1)s) / ((1+(m−1)s)^p + (m−1)(1−s)^p)^{1/p}.
double family_ratio_p(std::size_t m, double s, PExponent p);
/// d/ds log family_ratio_p for finite p.
double family_log_ratio_derivative(std::size_t m, double s, double p);

/// R_p(y) = √(y(y+m−1)) / (y^p+m−1)^{1/p}, y ≥ 1.
double r_p(double y, std::size_t m, PExponent p);
/// log R_p evaluated from u = log y, valid where y itself overflows.
double log_r_p(double log_y, std::size_t m, PExponent p);
/// y = (1+(m−1)s)/(1−s), s ∈ [0, 1).
double y_of_s(double s, std::size_t m);
/// Inverse of y_of_s: s = (y−1)/(y+m−1).
double s_of_y(double y, std::size_t m);

}  // namespace absnorm
