#include <doctest.h>

#include "absnorm/error.hpp"
#include "absnorm/extremal.hpp"
#include "helpers.hpp"

using namespace absnorm;
using namespace absnorm::testing;

TEST_CASE("hermitian_eig sorts nonincreasing and reconstructs") {
    const HermitianSpectrum d = hermitian_eig(diag({2.0, -1.0}));
    CHECK(d.eigenvalues(0) == doctest::Approx(2.0));
    CHECK(d.eigenvalues(1) == doctest::Approx(-1.0));
    CHECK((d.vectors.cwiseAbs() - ComplexMatrix::Identity(2, 2).cwiseAbs()).norm() < 1e-14);

    const HermitianSpectrum x = hermitian_eig(mat2(0, 1, 1, 0));
    CHECK(x.eigenvalues(0) == doctest::Approx(1.0));
    CHECK(x.eigenvalues(1) == doctest::Approx(-1.0));

    // (1−s)I + sJ at s = 1/2: 1+(m−1)s once, 1−s twice.
    const HermitianSpectrum g = hermitian_eig(build_gram(3, 0.5));
    CHECK(g.eigenvalues(0) == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(g.eigenvalues(1) == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(g.eigenvalues(2) == doctest::Approx(0.5).epsilon(1e-14));

    Rng rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        const ComplexMatrix a = complex_gaussian(5, 5, rng);
        const ComplexMatrix h = a + a.adjoint();
        const HermitianSpectrum spec = hermitian_eig(h);
        const ComplexMatrix back =
            spec.vectors * spec.eigenvalues.cast<Complex>().asDiagonal() * spec.vectors.adjoint();
        CHECK((back - h).norm() <= tol::recon * h.norm());
        CHECK((spec.vectors.adjoint() * spec.vectors - ComplexMatrix::Identity(5, 5)).norm() <= tol::recon);
        for (Eigen::Index i = 1; i < 5; ++i) CHECK(spec.eigenvalues(i) <= spec.eigenvalues(i - 1));
    }
}

TEST_CASE("hermitian_eig rejects asymmetric and non-finite input") {
    CHECK_THROWS_AS(hermitian_eig(mat2(0, 1, 0, 0)), Error);
    try {
        hermitian_eig(mat2(0, 1, 0, 0));
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NotHermitian);
    }
    ComplexMatrix bad = diag({1.0, 2.0});
    bad(0, 0) = std::nan("");
    try {
        hermitian_eig(bad);
        FAIL("expected NonFinite");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NonFinite);
    }
}

TEST_CASE("svd values and reconstruction") {
    const SingularSpectrum d = svd(diag({3.0, -4.0}));
    CHECK(d.values(0) == doctest::Approx(4.0));
    CHECK(d.values(1) == doctest::Approx(3.0));

    // Rank one u x* with unit vectors has the single singular value 1.
    ComplexMatrix u(3, 1), x(3, 1);
    u << Complex(0.6, 0), Complex(0, 0.8), 0;
    x << Complex(0, 1), 0, 0;
    const RealVector r1 = singular_values(u * x.adjoint());
    CHECK(r1(0) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(r1(1) == doctest::Approx(0.0));
    CHECK(r1(2) == doctest::Approx(0.0));

    CHECK(singular_values(ComplexMatrix::Zero(3, 3)).norm() == 0.0);

    Rng rng(11);
    const ComplexMatrix rect = complex_gaussian(4, 2, rng);
    const SingularSpectrum s = svd(rect);
    CHECK(s.values.size() == 2);
    const ComplexMatrix back = s.left * s.values.cast<Complex>().asDiagonal() * s.right.adjoint();
    CHECK((back - rect).norm() <= tol::recon * s.values(0));
}

TEST_CASE("svd is unitarily invariant") {
    Rng rng(12);
    for (int trial = 0; trial < 100; ++trial) {
        const ComplexMatrix a = complex_gaussian(4, 4, rng);
        const ComplexMatrix w = random_unitary(4, rng);
        const ComplexMatrix v = random_unitary(4, rng);
        const RealVector s = singular_values(a);
        const RealVector t = singular_values(w * a * v);
        CHECK((s - t).cwiseAbs().maxCoeff() <= 1e-9 * s(0));
    }
}

TEST_CASE("abs_value examples") {
    CHECK((abs_value(mat2(0, 1, 0, 0)) - diag({0.0, 1.0})).norm() < 1e-15);
    CHECK((abs_value(diag({-3.0, 2.0})) - diag({3.0, 2.0})).norm() < 1e-14);

    Rng rng(3);
    const ComplexMatrix p = random_psd(4, rng);
    CHECK((abs_value(p) - p).norm() <= 1e-12 * p.norm());
}

TEST_CASE("abs_value spectrum equals singular values; square gives A*A") {
    Rng rng(5);
    for (int trial = 0; trial < 200; ++trial) {
        const Eigen::Index n = 1 + trial % 6;
        const ComplexMatrix a = complex_gaussian(n, n, rng);
        const ComplexMatrix abs = abs_value(a);
        const RealVector ev = hermitian_eig(abs).eigenvalues;
        const RealVector s = singular_values(a);
        CHECK((ev - s).cwiseAbs().maxCoeff() <= 1e-9 * s(0));
        CHECK((abs * abs - a.adjoint() * a).norm() <= tol::recon * std::max(1.0, s(0) * s(0)) * n);
        CHECK(ev(n - 1) >= -tol::psd * s(0));
    }
}

TEST_CASE("polar decomposition") {
    Rng rng(9);
    const ComplexMatrix w = random_unitary(3, rng);
    const PolarForm pw = polar(w);
    CHECK((pw.isometry - w).norm() < 1e-12);
    CHECK((pw.positive_part - ComplexMatrix::Identity(3, 3)).norm() < 1e-12);

    const PolarForm pd = polar(diag({-3.0, 2.0}));
    CHECK((pd.isometry - diag({-1.0, 1.0})).norm() < 1e-14);
    CHECK((pd.positive_part - diag({3.0, 2.0})).norm() < 1e-14);

    // Singular input: only U·P = A and unitarity are contractual.
    const ComplexMatrix nil = mat2(0, 1, 0, 0);
    const PolarForm pn = polar(nil);
    CHECK((pn.isometry * pn.positive_part - nil).norm() < 1e-15);
    CHECK((pn.isometry.adjoint() * pn.isometry - ComplexMatrix::Identity(2, 2)).norm() < 1e-14);
    CHECK((pn.positive_part - diag({0.0, 1.0})).norm() < 1e-15);

    for (int trial = 0; trial < 100; ++trial) {
        const Eigen::Index n = 1 + trial % 5;
        ComplexMatrix a = complex_gaussian(n, n, rng);
        if (trial % 3 == 0 && n > 1) a.col(0) = a.col(1);  // force a kernel
        const PolarForm pf = polar(a);
        CHECK((pf.isometry * pf.positive_part - a).norm() <= 1e-9 * a.norm());
        CHECK((pf.isometry.adjoint() * pf.isometry - ComplexMatrix::Identity(n, n)).norm() <= 1e-9);
        CHECK((pf.positive_part - abs_value(a)).norm() <= 1e-12 * a.norm());
    }
}

TEST_CASE("psd_power") {
    CHECK((psd_power(diag({4.0, 9.0}), 0.5) - diag({2.0, 3.0})).norm() < 1e-14);
    CHECK((psd_power(diag({8.0}), 1.0 / 3.0) - diag({2.0})).norm() < 1e-14);
    Rng rng(21);
    const ComplexMatrix p = random_psd(5, rng);
    CHECK((psd_power(p, 1.0) - p).norm() <= 1e-12 * p.norm());

    for (int trial = 0; trial < 50; ++trial) {
        // Full rank keeps the inverse power well conditioned.
        const ComplexMatrix g = complex_gaussian(4, 4, rng);
        const ComplexMatrix q = g * g.adjoint() + 0.1 * ComplexMatrix::Identity(4, 4);
        for (double a : {0.25, 0.5, 2.0}) CHECK((psd_power(psd_power(q, a), 1.0 / a) - q).norm() <= 1e-8 * q.norm());
    }

    // Roundoff-level negative eigenvalues are clamped; real negatives are rejected.
    CHECK_NOTHROW(psd_power(diag({1.0, -1e-12}), 0.5));
    try {
        psd_power(diag({1.0, -1e-3}), 0.5);
        FAIL("expected NotPSD");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NotPSD);
    }
    CHECK_THROWS_AS(psd_power(diag({1.0}), 0.0), Error);
    CHECK_THROWS_AS(psd_power(mat2(1, 1, 0, 1), 0.5), Error);
}

TEST_CASE("gram_factor") {
    const ComplexMatrix id = ComplexMatrix::Identity(4, 4);
    CHECK((gram_factor(id) - id).norm() < 1e-14);

    const double s = 1.0 / (1.0 + std::sqrt(2.0));
    const ComplexMatrix x = gram_factor(build_gram(2, s));
    CHECK(x.col(0).norm() == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(x.col(1).norm() == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(x.col(0).dot(x.col(1)).real() == doctest::Approx(s).epsilon(1e-14));

    // Rank-deficient Gram matrix (s = 1): all columns the same unit vector, up
    // to the square root of the roundoff in the null eigenvalues.
    const ComplexMatrix j = gram_factor(build_gram(3, 1.0));
    for (Eigen::Index k = 0; k < 3; ++k) {
        CHECK(j.col(k).norm() == doctest::Approx(1.0).epsilon(1e-12));
        CHECK((j.col(k) - j.col(0)).norm() < 1e-7);
    }

    Rng rng(31);
    for (int trial = 0; trial < 50; ++trial) {
        const ComplexMatrix g = random_psd(1 + trial % 6, rng);
        const ComplexMatrix f = gram_factor(g);
        CHECK((f.adjoint() * f - g).norm() <= 1e-9 * g.norm());
    }
}
