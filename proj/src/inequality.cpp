#include "absnorm/inequality.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "absnorm/error.hpp"

namespace absnorm {

namespace {

void require_psd(const ComplexMatrix& x, const char* what) {
    const HermitianSpectrum spec = hermitian_eig(x);
    const auto& ev = spec.eigenvalues;
    if (ev.size() == 0) return;
    const double scale = std::max(std::abs(ev(0)), std::abs(ev(ev.size() - 1)));
    if (ev(ev.size() - 1) < -tol::psd * scale)
        throw Error(ErrorKind::NotPSD, std::string(what) + " is not positive semidefinite");
}

void require_power(double a) {
    if (!(a > 0.0 && a <= 1.0))
        throw Error(ErrorKind::DomainError, "power family needs a in (0, 1]");
}

void require_nonzero(const MatrixTuple& t) {
    for (const auto& a : t)
        if (a.cwiseAbs().maxCoeff() > 0.0) return;
    throw Error(ErrorKind::AllZeroTuple, "every tuple member is zero");
}

// ‖X^a‖_q for PSD X.
double power_norm(const ComplexMatrix& x, double a, PExponent q) {
    return schatten_norm(psd_power(x, a), q);
}

}  // namespace

double tol_ineq(double bound) noexcept { return 1e-9 * std::max(1.0, bound); }

BoundCheck make_bound_check(double value, double bound) noexcept {
    const double slack = bound - value;
    return {value, bound, slack >= -tol_ineq(bound), slack};
}

RatioReport ratio(const MatrixTuple& t, PExponent p) {
    require_square(t[0], "tuple member");
    RatioReport r;
    r.p = p;
    r.m = t.size();
    r.rhs = schatten_norm(t.abs_sum(), p);
    if (r.rhs == 0.0) throw Error(ErrorKind::AllZeroTuple, "sum of absolute values vanishes");
    r.lhs = schatten_norm(t.sum(), p);
    r.ratio = r.lhs / r.rhs;
    return r;
}

double frobenius_constant(std::size_t m) {
    if (m < 1) throw Error(ErrorKind::DomainError, "m must be positive");
    return std::sqrt((1.0 + std::sqrt(static_cast<double>(m))) / 2.0);
}

BoundCheck frobenius_bound_check(const MatrixTuple& t) {
    return make_bound_check(ratio(t, PExponent::finite(2.0)).ratio, frobenius_constant(t.size()));
}

double universal_bound(PExponent p, std::size_t m) {
    if (m < 2) throw Error(ErrorKind::DomainError, "universal bound needs m >= 2");
    return std::pow(std::sqrt(static_cast<double>(m)), 1.0 - p.reciprocal());
}

BoundCheck lemma_mcs_check(const ComplexMatrix& x, const ComplexMatrix& y, const ComplexMatrix& q,
                           double t) {
    if (!(t > 0.0) || !std::isfinite(t)) throw Error(ErrorKind::DomainError, "t must be positive");
    if (x.rows() != y.rows() || x.rows() != q.rows() || q.rows() != q.cols())
        throw Error(ErrorKind::ShapeMismatch, "X, Y, Q must share one square shape");
    require_psd(x, "X");
    require_psd(y, "Y");
    if (operator_norm(q) > 1.0 + tol_contraction)
        throw Error(ErrorKind::NotContraction, "operator norm of Q exceeds 1");
    const ComplexMatrix xy = x * y;
    const ComplexMatrix yx = y * x;
    const double value = 4.0 * std::abs((q * xy).trace());
    const double bound = t * (x * x + y * y).trace().real() + (xy + yx).trace().real() / t;
    return make_bound_check(value, bound);
}

BoundCheck block_positivity_check(const ComplexMatrix& a) {
    require_square(a);
    const Eigen::Index n = a.rows();
    ComplexMatrix block(2 * n, 2 * n);
    block.topLeftCorner(n, n) = abs_value(a.adjoint());
    block.topRightCorner(n, n) = a;
    block.bottomLeftCorner(n, n) = a.adjoint();
    block.bottomRightCorner(n, n) = abs_value(a);
    // Roundoff in |A| and |A*| leaves the block a hair off Hermitian.
    block = 0.5 * (block + block.adjoint()).eval();
    const RealVector ev = hermitian_eig(block).eigenvalues;
    const double scale = std::max(std::abs(ev(0)), std::abs(ev(ev.size() - 1)));
    return make_bound_check(-ev(ev.size() - 1), tol::psd * scale);
}

BoundCheck geomean_bound_check(const MatrixTuple& t, PExponent q, double a) {
    require_power(a);
    require_nonzero(t);
    const double value = power_norm(abs_value(t.sum()), a, q);
    const double bound =
        std::sqrt(power_norm(t.abs_adjoint_sum(), a, q)) * std::sqrt(power_norm(t.abs_sum(), a, q));
    return make_bound_check(value, bound);
}

BoundCheck prop31_check(const MatrixTuple& t, PExponent q, double a) {
    require_power(a);
    require_nonzero(t);
    const double value = power_norm(abs_value(t.sum()), a, q);
    ComplexMatrix powered_sum = ComplexMatrix::Zero(t.rows(), t.cols());
    for (const auto& m : t) powered_sum += psd_power(abs_value(m), a);
    const double constant = std::pow(std::sqrt(static_cast<double>(t.size())), 1.0 - q.reciprocal());
    return make_bound_check(value, constant * schatten_norm(powered_sum, q));
}

SubadditivityChecks subadditivity_check(const MatrixTuple& t, PExponent q, double a) {
    require_power(a);
    require_nonzero(t);
    ComplexMatrix adj = ComplexMatrix::Zero(t.rows(), t.cols());
    ComplexMatrix dir = ComplexMatrix::Zero(t.rows(), t.cols());
    for (const auto& m : t) {
        adj += psd_power(abs_value(m.adjoint()), a);
        dir += psd_power(abs_value(m), a);
    }
    return {make_bound_check(power_norm(t.abs_adjoint_sum(), a, q), schatten_norm(adj, q)),
            make_bound_check(power_norm(t.abs_sum(), a, q), schatten_norm(dir, q))};
}

MajorizationChecks majorization_check(const MatrixTuple& t, double a) {
    require_power(a);
    require_square(t[0], "tuple member");
    const RealVector s = singular_values(t.sum());
    const RealVector lp = hermitian_eig(t.abs_adjoint_sum()).eigenvalues.cwiseMax(0.0);
    const RealVector lq = hermitian_eig(t.abs_sum()).eigenvalues.cwiseMax(0.0);
    const Eigen::Index n = s.size();
    RealVector geo(n);
    for (Eigen::Index j = 0; j < n; ++j) geo(j) = std::sqrt(lp(j) * lq(j));
    // Products of roundoff-level values carry no information: lift both
    // sides to a common floor before comparing logs.
    const double lift = tol::psd * std::max({s(0), geo(0), 1e-300});
    const RealVector s_log = s.cwiseMax(lift);
    const RealVector geo_log = geo.cwiseMax(lift);
    // Powers of |S| have eigenvalues s_j^a; compare against f at the geometric means.
    RealVector fs(n);
    RealVector fgeo(n);
    for (Eigen::Index j = 0; j < n; ++j) {
        fs(j) = std::pow(s(j), a);
        fgeo(j) = std::pow(geo(j), a);
    }
    return {weak_log_majorization_holds(as_span(s_log), as_span(geo_log)),
            weak_majorization_holds(as_span(fs), as_span(fgeo))};
}

DirectSumChecks direct_sum_checks(const MatrixTuple& psd_tuple, PExponent q) {
    for (const auto& x : psd_tuple) require_psd(x, "direct-sum member");
    const double m = static_cast<double>(psd_tuple.size());
    double member_sum = 0.0;
    for (const auto& x : psd_tuple) member_sum += schatten_norm(x, q);
    const double sum_norm = schatten_norm(psd_tuple.sum(), q);
    const double direct_norm = schatten_norm(direct_sum(psd_tuple), q);
    return {make_bound_check(sum_norm, member_sum),
            make_bound_check(member_sum, std::pow(m, 1.0 - q.reciprocal()) * direct_norm),
            make_bound_check(direct_norm, sum_norm)};
}

}  // namespace absnorm
