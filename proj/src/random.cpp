#include "absnorm/random.hpp"

#include <cmath>
#include <vector>

#include <Eigen/QR>

#include "absnorm/extremal.hpp"

namespace absnorm {

std::uint64_t splitmix64(std::uint64_t x) noexcept {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) noexcept {
    return splitmix64(splitmix64(master) ^ splitmix64(index + 0x632be59bd9b4e019ULL));
}

ComplexMatrix complex_gaussian(Eigen::Index rows, Eigen::Index cols, Rng& rng) {
    std::normal_distribution<double> normal(0.0, std::sqrt(0.5));
    ComplexMatrix a(rows, cols);
    for (Eigen::Index j = 0; j < cols; ++j)
        for (Eigen::Index i = 0; i < rows; ++i) {
            const double re = normal(rng);
            const double im = normal(rng);
            a(i, j) = Complex(re, im);
        }
    return a;
}

ComplexMatrix random_unitary(Eigen::Index n, Rng& rng) {
    const Eigen::HouseholderQR<ComplexMatrix> qr(complex_gaussian(n, n, rng));
    ComplexMatrix q = qr.householderQ();
    const ComplexMatrix r = qr.matrixQR();
    for (Eigen::Index j = 0; j < n; ++j) {
        const double mag = std::abs(r(j, j));
        if (mag > 0.0) q.col(j) *= r(j, j) / mag;
    }
    return q;
}

ComplexMatrix random_psd(Eigen::Index n, Rng& rng) {
    std::uniform_int_distribution<Eigen::Index> rank_dist(1, n);
    const ComplexMatrix g = complex_gaussian(n, rank_dist(rng), rng);
    return g * g.adjoint();
}

ComplexMatrix random_contraction(Eigen::Index n, Rng& rng) {
    std::uniform_real_distribution<double> factor(1.0, 2.0);
    const ComplexMatrix g = complex_gaussian(n, n, rng);
    const double f = factor(rng);
    return g / (operator_norm(g) * f);
}

MatrixTuple normalized(const MatrixTuple& t) {
    const double scale = t.concatenated_frobenius();
    if (scale == 0.0) return t;
    std::vector<ComplexMatrix> members;
    members.reserve(t.size());
    for (const auto& a : t) members.push_back(a / scale);
    return MatrixTuple(std::move(members));
}

MatrixTuple random_tuple(std::size_t m, Eigen::Index n, std::uint64_t seed) {
    Rng rng(seed);
    std::vector<ComplexMatrix> members;
    members.reserve(m);
    for (std::size_t k = 0; k < m; ++k) members.push_back(complex_gaussian(n, n, rng));
    return normalized(MatrixTuple(std::move(members)));
}

MatrixTuple random_stress_tuple(std::size_t m, Eigen::Index n, Rng& rng) {
    std::uniform_int_distribution<int> kind(0, 2);
    std::vector<ComplexMatrix> members;
    members.reserve(m);
    switch (kind(rng)) {
    case 0:
        for (std::size_t k = 0; k < m; ++k) members.push_back(complex_gaussian(n, n, rng));
        break;
    case 1: {
        const ComplexMatrix u = complex_gaussian(n, 1, rng);
        for (std::size_t k = 0; k < m; ++k) members.push_back(u * complex_gaussian(n, 1, rng).adjoint());
        break;
    }
    default: {
        // Equiangular family in a random frame, plus a small Gaussian kick.
        if (n < static_cast<Eigen::Index>(m)) {
            for (std::size_t k = 0; k < m; ++k) members.push_back(complex_gaussian(n, n, rng));
            break;
        }
        std::uniform_real_distribution<double> jitter(0.8, 1.2);
        std::uniform_real_distribution<double> noise(0.0, 0.05);
        const double s = std::min(1.0, s_star(m) * jitter(rng));
        const EquiangularFamily fam = build_family(m, s, std::nullopt, n);
        const ComplexMatrix w = random_unitary(n, rng);
        const ComplexMatrix v = random_unitary(n, rng);
        const double eps = noise(rng);
        for (const auto& a : fam.tuple) members.push_back(w * a * v + eps * complex_gaussian(n, n, rng));
        break;
    }
    }
    return normalized(MatrixTuple(std::move(members)));
}

}  // namespace absnorm
