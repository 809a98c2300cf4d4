#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "absnorm/matlin.hpp"

namespace absnorm {

/// Schatten exponent p ∈ [1, ∞]. Infinity is a tag, never a large float.
class PExponent {
public:
    static PExponent finite(double p);
    static PExponent infinity() noexcept { return PExponent(); }
    /// Accepts a decimal number ≥ 1 or the literal "inf".
    static PExponent parse(std::string_view text);

    bool is_infinite() const noexcept { return infinite_; }
    /// Finite exponent value; throws DomainError for infinity.
    double value() const;
    /// 1/p, which is 0 for p = ∞.
    double reciprocal() const noexcept { return infinite_ ? 0.0 : 1.0 / p_; }
    std::string to_string() const;

    friend bool operator==(const PExponent&, const PExponent&) = default;

private:
    PExponent() = default;
    explicit PExponent(double p) : p_(p), infinite_(false) {}

    double p_ = 0.0;
    bool infinite_ = true;
};

/// Ordered, non-empty list of same-shape finite matrices.
class MatrixTuple {
public:
    explicit MatrixTuple(std::vector<ComplexMatrix> matrices);

    std::size_t size() const noexcept { return matrices_.size(); }
    Eigen::Index rows() const noexcept { return matrices_.front().rows(); }
    Eigen::Index cols() const noexcept { return matrices_.front().cols(); }
    bool square() const noexcept { return rows() == cols(); }
    const ComplexMatrix& operator[](std::size_t k) const { return matrices_[k]; }
    const std::vector<ComplexMatrix>& matrices() const noexcept { return matrices_; }

    auto begin() const noexcept { return matrices_.begin(); }
    auto end() const noexcept { return matrices_.end(); }

    ComplexMatrix sum() const;
    /// Σ|A_k|.
    ComplexMatrix abs_sum() const;
    /// Σ|A_k*|.
    ComplexMatrix abs_adjoint_sum() const;
    /// Root of the sum of all squared entries, i.e. the norm of the concatenation.
    double concatenated_frobenius() const;

private:
    std::vector<ComplexMatrix> matrices_;
};

/// ℓ_p aggregate of nonnegative values, computed as s_max·(Σ(s/s_max)^p)^{1/p}.
double lp_norm(std::span<const double> values, PExponent p);

double schatten_norm(const ComplexMatrix& a, PExponent p);

/// Entrywise root-sum-of-squares; equals the Schatten 2-norm.
double frobenius(const ComplexMatrix& a);

ComplexMatrix direct_sum(const MatrixTuple& t);

inline constexpr double tol_maj = 1e-9;

/// Σ_{j≤k} a_j ≤ Σ_{j≤k} b_j (relative slack tol_maj) for every k.
bool weak_majorization_holds(std::span<const double> a, std::span<const double> b);

/// Π_{j≤k} a_j ≤ Π_{j≤k} b_j·(1 + tol_maj) for every k, compared through
/// logarithms. Values ≤ 1e-300 count as exact zeros.
bool weak_log_majorization_holds(std::span<const double> a, std::span<const double> b);

inline std::span<const double> as_span(const RealVector& v) {
    return {v.data(), static_cast<std::size_t>(v.size())};
}

}  // namespace absnorm
