#pragma once

#include "absnorm/matlin.hpp"
#include "absnorm/schatten.hpp"

namespace absnorm {

/// ‖ΣA_k‖_p against ‖Σ|A_k|‖_p for one tuple.
struct RatioReport {
    double lhs = 0.0;
    double rhs = 0.0;
    double ratio = 0.0;
    PExponent p = PExponent::infinity();
    std::size_t m = 0;
};

/// value ≤ bound, with slack = bound − value and roundoff allowance tol_ineq.
struct BoundCheck {
    double value = 0.0;
    double bound = 0.0;
    bool satisfied = false;
    double slack = 0.0;
};

/// 1e-9·max(1, bound).
double tol_ineq(double bound) noexcept;
BoundCheck make_bound_check(double value, double bound) noexcept;

inline constexpr double tol_contraction = 1e-10;

RatioReport ratio(const MatrixTuple& t, PExponent p);

/// √((1+√m)/2); equals 1 at m = 1.
double frobenius_constant(std::size_t m);
BoundCheck frobenius_bound_check(const MatrixTuple& t);

/// (√m)^{1−1/p}.
double universal_bound(PExponent p, std::size_t m);

/// 4|Tr(QXY)| ≤ t·Tr(X²+Y²) + Tr(XY+YX)/t for PSD X, Y and contraction Q.
BoundCheck lemma_mcs_check(const ComplexMatrix& x, const ComplexMatrix& y, const ComplexMatrix& q,
                           double t);

/// −λ_min of [[|A*|, A], [A*, |A|]] against tol::psd times its spectral radius.
BoundCheck block_positivity_check(const ComplexMatrix& a);

/// ‖f(|S|)‖_q ≤ ‖f(P)‖_q^{1/2}‖f(Q)‖_q^{1/2} with S = ΣA_i, P = Σ|A_i*|,
/// Q = Σ|A_i| and f(x) = x^a.
BoundCheck geomean_bound_check(const MatrixTuple& t, PExponent q, double a);

/// ‖f(|ΣA_i|)‖_q ≤ (√m)^{1−1/q}‖Σf(|A_i|)‖_q with f(x) = x^a, a ∈ (0, 1].
BoundCheck prop31_check(const MatrixTuple& t, PExponent q, double a);

/// Concave subadditivity for f(x) = x^a:
/// ‖f(Σ|A_i*|)‖_q ≤ ‖Σf(|A_i*|)‖_q and ‖f(Σ|A_i|)‖_q ≤ ‖Σf(|A_i|)‖_q.
struct SubadditivityChecks {
    BoundCheck adjoint_side;
    BoundCheck direct_side;
};
SubadditivityChecks subadditivity_check(const MatrixTuple& t, PExponent q, double a);

/// Singular values of S = ΣA_i are weakly log-majorized by √(λ_j(P)λ_j(Q)),
/// and λ(f(|S|)) is weakly majorized by f(√(λ_j(P)λ_j(Q))) for f(x) = x^a.
struct MajorizationChecks {
    bool log_majorized = false;
    bool power_majorized = false;
};
MajorizationChecks majorization_check(const MatrixTuple& t, double a);

/// Direct-sum inequalities for a PSD tuple X_1..X_m:
/// ‖ΣX_i‖_q ≤ Σ‖X_i‖_q, Σ‖X_i‖_q ≤ m^{1−1/q}‖⊕X_i‖_q and ‖⊕X_i‖_q ≤ ‖ΣX_i‖_q.
struct DirectSumChecks {
    BoundCheck triangle;
    BoundCheck power_mean;
    BoundCheck direct_vs_sum;
};
DirectSumChecks direct_sum_checks(const MatrixTuple& psd_tuple, PExponent q);

}  // namespace absnorm
