#include "absnorm/schatten.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>

#include "absnorm/error.hpp"

namespace absnorm {

namespace {

constexpr double log_zero = 1e-300;

void require_sorted(std::span<const double> v, const char* name) {
    for (std::size_t i = 1; i < v.size(); ++i) {
        if (!(v[i] <= v[i - 1]))
            throw Error(ErrorKind::UnsortedInput, std::string(name) + " is not nonincreasing");
    }
}

void require_same_length(std::span<const double> a, std::span<const double> b) {
    if (a.size() != b.size())
        throw Error(ErrorKind::ShapeMismatch, "majorization inputs differ in length");
}

}  // namespace

PExponent PExponent::finite(double p) {
    if (!std::isfinite(p)) throw Error(ErrorKind::DomainError, "finite exponent expected; use infinity()");
    if (!(p >= 1.0)) throw Error(ErrorKind::DomainError, "Schatten exponent must satisfy p >= 1");
    return PExponent(p);
}

PExponent PExponent::parse(std::string_view text) {
    if (text == "inf" || text == "Inf" || text == "INF" || text == "infinity") return infinity();
    double p = 0.0;
    const auto* first = text.data();
    const auto* last = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(first, last, p);
    if (ec != std::errc() || ptr != last)
        throw Error(ErrorKind::DomainError, "cannot parse exponent '" + std::string(text) + "'");
    return finite(p);
}

double PExponent::value() const {
    if (infinite_) throw Error(ErrorKind::DomainError, "exponent is infinite");
    return p_;
}

std::string PExponent::to_string() const {
    if (infinite_) return "inf";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", p_);
    return buf;
}

MatrixTuple::MatrixTuple(std::vector<ComplexMatrix> matrices) : matrices_(std::move(matrices)) {
    if (matrices_.empty()) throw Error(ErrorKind::EmptyTuple, "tuple needs at least one matrix");
    for (const auto& a : matrices_) {
        if (a.rows() != rows() || a.cols() != cols())
            throw Error(ErrorKind::ShapeMismatch, "tuple members differ in shape");
        require_finite(a, "tuple member");
    }
}

ComplexMatrix MatrixTuple::sum() const {
    ComplexMatrix s = ComplexMatrix::Zero(rows(), cols());
    for (const auto& a : matrices_) s += a;
    return s;
}

ComplexMatrix MatrixTuple::abs_sum() const {
    require_square(matrices_.front(), "tuple member");
    ComplexMatrix s = ComplexMatrix::Zero(rows(), cols());
    for (const auto& a : matrices_) s += abs_value(a);
    return s;
}

ComplexMatrix MatrixTuple::abs_adjoint_sum() const {
    require_square(matrices_.front(), "tuple member");
    ComplexMatrix s = ComplexMatrix::Zero(rows(), cols());
    for (const auto& a : matrices_) s += abs_value(a.adjoint());
    return s;
}

double MatrixTuple::concatenated_frobenius() const {
    double scale = 0.0;
    for (const auto& a : matrices_) scale = std::max(scale, a.cwiseAbs().maxCoeff());
    if (scale == 0.0) return 0.0;
    double acc = 0.0;
    for (const auto& a : matrices_) acc += (a / scale).squaredNorm();
    return scale * std::sqrt(acc);
}

double lp_norm(std::span<const double> values, PExponent p) {
    double top = 0.0;
    for (double v : values) top = std::max(top, std::abs(v));
    if (top == 0.0 || p.is_infinite()) return top;
    const double e = p.value();
    double acc = 0.0;
    for (double v : values) acc += std::pow(std::abs(v) / top, e);
    return top * std::pow(acc, 1.0 / e);
}

double schatten_norm(const ComplexMatrix& a, PExponent p) {
    return lp_norm(as_span(singular_values(a)), p);
}

double frobenius(const ComplexMatrix& a) {
    require_finite(a);
    return a.stableNorm();
}

ComplexMatrix direct_sum(const MatrixTuple& t) {
    require_square(t[0], "direct_sum member");
    const Eigen::Index n = t.rows();
    const auto m = static_cast<Eigen::Index>(t.size());
    ComplexMatrix out = ComplexMatrix::Zero(n * m, n * m);
    for (Eigen::Index i = 0; i < m; ++i) out.block(i * n, i * n, n, n) = t[static_cast<std::size_t>(i)];
    return out;
}

bool weak_majorization_holds(std::span<const double> a, std::span<const double> b) {
    require_same_length(a, b);
    require_sorted(a, "a");
    require_sorted(b, "b");
    double sa = 0.0;
    double sb = 0.0;
    for (std::size_t k = 0; k < a.size(); ++k) {
        sa += a[k];
        sb += b[k];
        const double slack = tol_maj * std::max(std::abs(sa), std::abs(sb));
        if (sa > sb + slack) return false;
    }
    return true;
}

bool weak_log_majorization_holds(std::span<const double> a, std::span<const double> b) {
    require_same_length(a, b);
    require_sorted(a, "a");
    require_sorted(b, "b");
    for (std::size_t k = 0; k < a.size(); ++k) {
        if (a[k] < 0.0 || b[k] < 0.0)
            throw Error(ErrorKind::DomainError, "log-majorization needs nonnegative values");
    }
    const double slack = std::log1p(tol_maj);
    double la = 0.0;
    double lb = 0.0;
    bool a_zero = false;
    for (std::size_t k = 0; k < a.size(); ++k) {
        a_zero = a_zero || a[k] <= log_zero;
        const bool b_zero = b[k] <= log_zero;
        // Once the left product is zero every later comparison holds.
        if (a_zero) return true;
        if (b_zero) return false;
        la += std::log(a[k]);
        lb += std::log(b[k]);
        if (la > lb + slack) return false;
    }
    return true;
}

}  // namespace absnorm
