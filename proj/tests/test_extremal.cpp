#include <array>
#include <cmath>

#include <doctest.h>

#include "absnorm/error.hpp"
#include "absnorm/extremal.hpp"
#include "absnorm/inequality.hpp"
#include "absnorm/random.hpp"
#include "helpers.hpp"

using namespace absnorm;
using namespace absnorm::testing;

namespace {
const PExponent p2 = PExponent::finite(2.0);
}

TEST_CASE("build_gram") {
    CHECK((build_gram(2, 0.0) - ComplexMatrix::Identity(2, 2)).norm() == 0.0);
    CHECK((build_gram(2, 1.0) - ComplexMatrix::Ones(2, 2)).norm() == 0.0);
    CHECK(singular_values(build_gram(2, 1.0))(1) == doctest::Approx(0.0));
    const RealVector ev = hermitian_eig(build_gram(3, 0.5)).eigenvalues;
    CHECK(ev(0) == doctest::Approx(2.0));
    CHECK(ev(2) == doctest::Approx(0.5));
    try {
        build_gram(3, 1.5);
        FAIL("expected SOutOfRange");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::SOutOfRange);
    }
    CHECK_THROWS_AS(build_gram(3, -0.1), Error);
    CHECK_THROWS_AS(build_gram(1, 0.5), Error);
}

TEST_CASE("build_family invariants") {
    for (std::size_t m = 2; m <= 8; ++m) {
        for (double s : {0.0, 0.2, s_star(m), 0.7, 1.0}) {
            const EquiangularFamily fam = build_family(m, s);
            CHECK(fam.tuple.size() == m);
            for (Eigen::Index j = 0; j < static_cast<Eigen::Index>(m); ++j) {
                CHECK(std::abs(fam.vectors.col(j).norm() - 1.0) <= 1e-9);
                for (Eigen::Index k = 0; k < static_cast<Eigen::Index>(m); ++k)
                    if (j != k) CHECK(std::abs(fam.vectors.col(j).dot(fam.vectors.col(k)) - s) <= 1e-9);
                const ComplexMatrix& a = fam.tuple[static_cast<std::size_t>(j)];
                CHECK(singular_values(a)(std::min<Eigen::Index>(1, a.rows() - 1)) <= 1e-12);
                const ComplexMatrix proj = fam.vectors.col(j) * fam.vectors.col(j).adjoint();
                CHECK((abs_value(a) - proj).norm() <= 1e-9);
            }
        }
    }
}

TEST_CASE("family ratios match closed forms") {
    CHECK(ratio(build_family(2, s_star(2)).tuple, p2).ratio ==
          doctest::Approx(std::sqrt((1.0 + std::sqrt(2.0)) / 2.0)).epsilon(1e-9));
    CHECK(ratio(build_family(5, 0.0).tuple, p2).ratio == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(ratio(build_family(9, 0.25).tuple, p2).ratio == doctest::Approx(std::sqrt(2.0)).epsilon(1e-9));

    for (std::size_t m = 2; m <= 16; ++m) {
        const double fmax = f_ratio(m, s_star(m));
        CHECK(fmax == doctest::Approx((1.0 + std::sqrt(static_cast<double>(m))) / 2.0).epsilon(1e-14));
        for (int i = 0; i <= 100; ++i) {
            const double s = i / 100.0;
            const EquiangularFamily fam = build_family(m, s);
            const double r = ratio(fam.tuple, p2).ratio;
            CHECK(rel(r * r, f_ratio(m, s)) <= 1e-8);
            CHECK(f_ratio(m, s) <= fmax + 1e-15);
            if (i % 20 == 0) {
                CHECK(rel(std::pow(frobenius(fam.tuple.sum()), 2), lhs_sq_frobenius(m, s)) <= 1e-8);
                CHECK(rel(std::pow(frobenius(fam.tuple.abs_sum()), 2), rhs_sq_frobenius(m, s)) <= 1e-8);
            }
        }
    }
}

TEST_CASE("closed forms") {
    CHECK(lhs_sq_frobenius(2, 0.0) == 2.0);
    CHECK(rhs_sq_frobenius(2, 0.0) == 2.0);
    const double s = s_star(2);
    CHECK(lhs_sq_frobenius(2, s) / rhs_sq_frobenius(2, s) == doctest::Approx((1.0 + std::sqrt(2.0)) / 2.0));
    CHECK(f_ratio(4, 0.0) == 1.0);
    CHECK(f_ratio(4, 1.0) == 1.0);
    CHECK(s_star(2) == doctest::Approx(0.41421356237309503));
    CHECK(s_star(4) == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
    CHECK(s_star(9) == 0.25);
    for (std::size_t m = 2; m <= 100; ++m) {
        const double st = s_star(m);
        CHECK(std::abs((m - 1.0) * st * st + 2.0 * st - 1.0) <= 1e-12);
    }
}

TEST_CASE("family_ratio_p against numerics and R_p") {
    const std::array<PExponent, 5> ps{PExponent::finite(1.0), PExponent::finite(1.5), p2, PExponent::finite(3.0),
                                      PExponent::infinity()};
    for (std::size_t m = 2; m <= 6; ++m) {
        for (double s : {0.0, 0.1, 0.33, 0.5, 0.9}) {
            const EquiangularFamily fam = build_family(m, s);
            for (const PExponent& p : ps)
                CHECK(rel(ratio(fam.tuple, p).ratio, family_ratio_p(m, s, p)) <= 1e-8);
            CHECK(family_ratio_p(m, s, p2) == doctest::Approx(std::sqrt(f_ratio(m, s))).epsilon(1e-14));
            const double one = family_ratio_p(m, s, PExponent::finite(1.0));
            CHECK(one == doctest::Approx(std::sqrt(m + m * (m - 1.0) * s) / m).epsilon(1e-14));
            CHECK(one <= 1.0 + 1e-15);
        }
    }
    CHECK(family_ratio_p(3, 1.0, PExponent::finite(1.0)) == doctest::Approx(1.0));

    for (std::size_t m = 2; m <= 16; ++m)
        for (int i = 0; i < 100; ++i) {
            const double s = i / 100.0;
            for (const PExponent& p : ps)
                CHECK(rel(family_ratio_p(m, s, p), r_p(y_of_s(s, m), m, p)) <= 1e-10);
        }
}

TEST_CASE("log-derivative matches central differences") {
    for (std::size_t m : {2u, 5u, 11u})
        for (double p : {1.5, 2.0, 4.0})
            for (double s : {0.1, 0.3, 0.6, 0.85}) {
                const PExponent pe = PExponent::finite(p);
                const double h = 1e-6;
                const double fd = (std::log(family_ratio_p(m, s + h, pe)) - std::log(family_ratio_p(m, s - h, pe))) / (2 * h);
                CHECK(family_log_ratio_derivative(m, s, p) == doctest::Approx(fd).epsilon(1e-6));
            }
    CHECK(std::abs(family_log_ratio_derivative(7, s_star(7), 2.0)) <= 1e-14);
}

TEST_CASE("y parametrization") {
    CHECK(y_of_s(0.0, 4) == 1.0);
    CHECK(s_of_y(1.0, 4) == 0.0);
    for (std::size_t m = 2; m <= 16; ++m) {
        const double y = y_of_s(s_star(m), m);
        CHECK(y == doctest::Approx(1.0 + std::sqrt(static_cast<double>(m))).epsilon(1e-13));
        CHECK(y * y == doctest::Approx(2.0 * y + (m - 1.0)).epsilon(1e-13));
        CHECK(r_p(y, m, p2) == doctest::Approx(std::sqrt((1.0 + std::sqrt(double(m))) / 2.0)).epsilon(1e-13));
        for (double s : {0.0, 0.2, 0.7, 0.999}) CHECK(s_of_y(y_of_s(s, m), m) == doctest::Approx(s).epsilon(1e-12));
    }
    CHECK_THROWS_AS(y_of_s(1.0, 3), Error);
    CHECK_THROWS_AS(s_of_y(0.5, 3), Error);
    CHECK_THROWS_AS(r_p(0.5, 3, p2), Error);
    // R_p in the log domain stays finite where y overflows.
    CHECK(std::isfinite(log_r_p(5000.0, 3, PExponent::finite(1.0001))));
}

TEST_CASE("anchor gauge and embedding dimension") {
    Rng rng(1);
    for (int trial = 0; trial < 10; ++trial) {
        const std::size_t m = 3;
        const double s = 0.3;
        const ComplexMatrix g = complex_gaussian(5, 1, rng);
        const ComplexMatrix u = g / g.norm();
        const EquiangularFamily base = build_family(m, s, std::nullopt, 5);
        const EquiangularFamily moved = build_family(m, s, u, 5);
        for (const PExponent& p : {PExponent::finite(1.0), p2, PExponent::finite(3.0), PExponent::infinity()})
            CHECK(rel(ratio(moved.tuple, p).ratio, ratio(base.tuple, p).ratio) <= 1e-10);
        CHECK(rel(ratio(base.tuple, p2).ratio, ratio(build_family(m, s).tuple, p2).ratio) <= 1e-12);
    }
    CHECK_THROWS_AS(build_family(3, 0.3, std::nullopt, 2), Error);
    CHECK_THROWS_AS(build_family(3, 0.3, ComplexMatrix::Ones(3, 1)), Error);
}
