#include "absnorm/matlin.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include "absnorm/error.hpp"

namespace absnorm {

namespace {

// Eigen returns ascending eigenvalues; the library works nonincreasing.
HermitianSpectrum descending(const Eigen::SelfAdjointEigenSolver<ComplexMatrix>& solver) {
    const Eigen::Index n = solver.eigenvalues().size();
    HermitianSpectrum out{RealVector(n), ComplexMatrix(n, n)};
    for (Eigen::Index i = 0; i < n; ++i) {
        out.eigenvalues(i) = solver.eigenvalues()(n - 1 - i);
        out.vectors.col(i) = solver.eigenvectors().col(n - 1 - i);
    }
    return out;
}

// Eigenvalues clamped to zero within tol::psd of the spectral radius.
HermitianSpectrum psd_spectrum(const ComplexMatrix& p) {
    HermitianSpectrum spec = hermitian_eig(p);
    const auto& ev = spec.eigenvalues;
    if (ev.size() == 0) return spec;
    const double scale = std::max(std::abs(ev(0)), std::abs(ev(ev.size() - 1)));
    const double lowest = ev(ev.size() - 1);
    if (lowest < -tol::psd * scale) {
        throw Error(ErrorKind::NotPSD,
                    "eigenvalue " + std::to_string(lowest) + " below -tol_psd*" +
                        std::to_string(scale));
    }
    spec.eigenvalues = spec.eigenvalues.cwiseMax(0.0);
    return spec;
}

}  // namespace

bool all_finite(const ComplexMatrix& a) noexcept {
    for (Eigen::Index j = 0; j < a.cols(); ++j)
        for (Eigen::Index i = 0; i < a.rows(); ++i)
            if (!std::isfinite(a(i, j).real()) || !std::isfinite(a(i, j).imag())) return false;
    return true;
}

void require_finite(const ComplexMatrix& a, const char* what) {
    if (!all_finite(a)) throw Error(ErrorKind::NonFinite, std::string(what) + " has NaN/Inf entries");
}

void require_square(const ComplexMatrix& a, const char* what) {
    if (a.rows() != a.cols()) {
        throw Error(ErrorKind::NotSquare, std::string(what) + " is " + std::to_string(a.rows()) +
                                              "x" + std::to_string(a.cols()));
    }
}

void require_hermitian(const ComplexMatrix& h, const char* what) {
    require_square(h, what);
    const double asym = (h - h.adjoint()).norm();
    if (asym > tol::herm * h.norm()) {
        throw Error(ErrorKind::NotHermitian,
                    std::string(what) + " asymmetry " + std::to_string(asym) + " exceeds tolerance");
    }
}

HermitianSpectrum hermitian_eig(const ComplexMatrix& h) {
    require_finite(h);
    require_hermitian(h);
    const ComplexMatrix sym = 0.5 * (h + h.adjoint());
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(sym, Eigen::ComputeEigenvectors);
    if (solver.info() != Eigen::Success)
        throw Error(ErrorKind::NoConvergence, "Hermitian eigensolver failed");
    return descending(solver);
}

SingularSpectrum svd(const ComplexMatrix& a) {
    require_finite(a);
    Eigen::JacobiSVD<ComplexMatrix> solver(a, Eigen::ComputeThinU | Eigen::ComputeThinV);
    return {solver.singularValues(), solver.matrixU(), solver.matrixV()};
}

RealVector singular_values(const ComplexMatrix& a) {
    require_finite(a);
    Eigen::JacobiSVD<ComplexMatrix> solver(a);
    return solver.singularValues();
}

ComplexMatrix abs_value(const ComplexMatrix& a) {
    require_square(a);
    const SingularSpectrum s = svd(a);
    return s.right * s.values.cast<Complex>().asDiagonal() * s.right.adjoint();
}

PolarForm polar(const ComplexMatrix& a) {
    require_square(a);
    const SingularSpectrum s = svd(a);
    // Square input: the thin factors are full unitaries, so U·V* is unitary
    // even when A is singular.
    return {s.left * s.right.adjoint(),
            s.right * s.values.cast<Complex>().asDiagonal() * s.right.adjoint()};
}

ComplexMatrix psd_power(const ComplexMatrix& p, double a) {
    if (!(a > 0.0) || !std::isfinite(a))
        throw Error(ErrorKind::DomainError, "psd_power exponent must be a finite positive real");
    const HermitianSpectrum spec = psd_spectrum(p);
    RealVector powered = spec.eigenvalues;
    for (Eigen::Index i = 0; i < powered.size(); ++i) powered(i) = std::pow(powered(i), a);
    return spec.vectors * powered.cast<Complex>().asDiagonal() * spec.vectors.adjoint();
}

ComplexMatrix gram_factor(const ComplexMatrix& g) { return psd_power(g, 0.5); }

double operator_norm(const ComplexMatrix& a) {
    const RealVector s = singular_values(a);
    return s.size() == 0 ? 0.0 : s(0);
}

}  // namespace absnorm
