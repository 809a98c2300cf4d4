#include "absnorm/extremal.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "absnorm/error.hpp"

namespace absnorm {

namespace {

void require_m(std::size_t m) {
    if (m < 2) throw Error(ErrorKind::DomainError, "family size m must be at least 2");
}

void require_s(double s) {
    if (!(s >= 0.0 && s <= 1.0))
        throw Error(ErrorKind::SOutOfRange, "s = " + std::to_string(s) + " outside [0, 1]");
}

}  // namespace

ComplexMatrix build_gram(std::size_t m, double s) {
    require_m(m);
    require_s(s);
    const auto n = static_cast<Eigen::Index>(m);
    ComplexMatrix g = ComplexMatrix::Constant(n, n, Complex(s, 0.0));
    g.diagonal().setOnes();
    return g;
}

EquiangularFamily build_family(std::size_t m, double s, const std::optional<ComplexMatrix>& anchor,
                               std::optional<Eigen::Index> dimension) {
    const ComplexMatrix g = build_gram(m, s);
    const auto mi = static_cast<Eigen::Index>(m);
    const Eigen::Index n = dimension.value_or(mi);
    if (n < mi) throw Error(ErrorKind::DomainError, "embedding dimension must be at least m");

    // G is real symmetric, so its PSD square root is real up to roundoff.
    const ComplexMatrix root = gram_factor(g);
    ComplexMatrix vectors = ComplexMatrix::Zero(n, mi);
    vectors.topRows(mi) = root.real().cast<Complex>();

    ComplexMatrix u = ComplexMatrix::Zero(n, 1);
    if (anchor) {
        if (anchor->rows() != n || anchor->cols() != 1)
            throw Error(ErrorKind::ShapeMismatch, "anchor must be an n-vector");
        require_finite(*anchor, "anchor");
        if (std::abs(anchor->norm() - 1.0) > 1e-12)
            throw Error(ErrorKind::DomainError, "anchor must be a unit vector");
        u = *anchor;
    } else {
        u(0, 0) = 1.0;
    }

    std::vector<ComplexMatrix> members;
    members.reserve(m);
    for (Eigen::Index k = 0; k < mi; ++k) members.push_back(u * vectors.col(k).adjoint());
    return {m, s, std::move(vectors), std::move(u), MatrixTuple(std::move(members))};
}

double lhs_sq_frobenius(std::size_t m, double s) {
    require_m(m);
    require_s(s);
    const double md = static_cast<double>(m);
    return md + md * (md - 1.0) * s;
}

double rhs_sq_frobenius(std::size_t m, double s) {
    require_m(m);
    require_s(s);
    const double md = static_cast<double>(m);
    return md + md * (md - 1.0) * s * s;
}

double f_ratio(std::size_t m, double s) {
    require_m(m);
    require_s(s);
    const double k = static_cast<double>(m) - 1.0;
    return (1.0 + k * s) / (1.0 + k * s * s);
}

double s_star(std::size_t m) {
    require_m(m);
    return 1.0 / (1.0 + std::sqrt(static_cast<double>(m)));
}

double family_ratio_p(std::size_t m, double s, PExponent p) {
    require_m(m);
    require_s(s);
    const double k = static_cast<double>(m) - 1.0;
    const double top = 1.0 + k * s;  // dominant eigenvalue of Σ|A_k|
    const double low = 1.0 - s;
    const double numerator = std::sqrt(lhs_sq_frobenius(m, s));
    if (p.is_infinite()) return numerator / top;
    const double e = p.value();
    const double tail = k * std::pow(low / top, e);
    return numerator / (top * std::pow(1.0 + tail, 1.0 / e));
}

double family_log_ratio_derivative(std::size_t m, double s, double p) {
    require_m(m);
    require_s(s);
    if (!(p >= 1.0)) throw Error(ErrorKind::DomainError, "p must be at least 1");
    const double k = static_cast<double>(m) - 1.0;
    const double top = 1.0 + k * s;
    const double q = (1.0 - s) / top;
    const double numerator_term = 0.5 * k / top;
    const double denominator_term = k * (1.0 - std::pow(q, p - 1.0)) / (top * (1.0 + k * std::pow(q, p)));
    return numerator_term - denominator_term;
}

double log_r_p(double log_y, std::size_t m, PExponent p) {
    require_m(m);
    if (!(log_y >= 0.0) || !std::isfinite(log_y)) throw Error(ErrorKind::DomainError, "R_p needs y >= 1");
    const double k = static_cast<double>(m) - 1.0;
    // log(y + m − 1) = log y + log1p((m−1)/y)
    const double log_shift = log_y + std::log1p(k * std::exp(-log_y));
    const double log_numerator = 0.5 * (log_y + log_shift);
    if (p.is_infinite()) return log_numerator - log_y;
    const double e = p.value();
    return log_numerator - log_y - std::log1p(k * std::exp(-e * log_y)) / e;
}

double r_p(double y, std::size_t m, PExponent p) {
    if (!(y >= 1.0) || !std::isfinite(y)) throw Error(ErrorKind::DomainError, "R_p needs finite y >= 1");
    return std::exp(log_r_p(std::log(y), m, p));
}

double y_of_s(double s, std::size_t m) {
    require_m(m);
    if (!(s >= 0.0 && s < 1.0)) throw Error(ErrorKind::DomainError, "y_of_s needs s in [0, 1)");
    return (1.0 + (static_cast<double>(m) - 1.0) * s) / (1.0 - s);
}

double s_of_y(double y, std::size_t m) {
    require_m(m);
    if (!(y >= 1.0) || !std::isfinite(y)) throw Error(ErrorKind::DomainError, "s_of_y needs finite y >= 1");
    return (y - 1.0) / (y + static_cast<double>(m) - 1.0);
}

}  // namespace absnorm
