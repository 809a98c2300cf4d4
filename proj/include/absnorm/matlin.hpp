#pragma once

// Dense complex linear algebra kernel. Eigen does the factorizations; this
// layer enforces the tolerances and orderings the rest of the library relies
// on (nonincreasing spectra, unitary completion of polar factors, PSD
// clamping).

#include <complex>

#include <Eigen/Core>

namespace absnorm {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using RealVector = Eigen::VectorXd;

namespace tol {
/// Relative reconstruction tolerance for factorizations.
inline constexpr double recon = 1e-10;
/// Relative Hermitian symmetry tolerance, ‖H − H*‖_F ≤ herm·‖H‖_F.
inline constexpr double herm = 1e-10;
/// Eigenvalues in [−psd·‖P‖_∞, 0) are clamped to zero; lower is an error.
inline constexpr double psd = 1e-9;
}  // namespace tol

struct HermitianSpectrum {
    RealVector eigenvalues;  // nonincreasing
    ComplexMatrix vectors;   // unitary, eigenvectors in columns
};

struct SingularSpectrum {
    RealVector values;  // nonincreasing, nonnegative
    ComplexMatrix left;
    ComplexMatrix right;
};

struct PolarForm {
    ComplexMatrix isometry;       // unitary (completed over the kernel)
    ComplexMatrix positive_part;  // |A|
};

bool all_finite(const ComplexMatrix& a) noexcept;
/// Throws NonFinite unless every entry is finite.
void require_finite(const ComplexMatrix& a, const char* what = "matrix");
void require_square(const ComplexMatrix& a, const char* what = "matrix");
/// Throws NotHermitian if ‖H − H*‖_F > tol::herm·‖H‖_F.
void require_hermitian(const ComplexMatrix& h, const char* what = "matrix");

HermitianSpectrum hermitian_eig(const ComplexMatrix& h);

/// Thin SVD. For an r×c input the factors are r×k and c×k with k = min(r, c).
SingularSpectrum svd(const ComplexMatrix& a);
RealVector singular_values(const ComplexMatrix& a);

/// |A| = (A*A)^{1/2}, formed as V·diag(s)·V* from the SVD so small singular
/// values keep full relative accuracy.
ComplexMatrix abs_value(const ComplexMatrix& a);

PolarForm polar(const ComplexMatrix& a);

/// P^a for Hermitian PSD P and a > 0.
ComplexMatrix psd_power(const ComplexMatrix& p, double a);

/// Hermitian X with X*X = G (the PSD square root); columns are the Gram vectors.
ComplexMatrix gram_factor(const ComplexMatrix& g);

/// Largest singular value.
double operator_norm(const ComplexMatrix& a);

}  // namespace absnorm
