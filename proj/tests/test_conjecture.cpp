#include <cmath>

#include <doctest.h>

#include "absnorm/conjecture.hpp"
#include "absnorm/error.hpp"
#include "absnorm/extremal.hpp"
#include "helpers.hpp"

using namespace absnorm;
using namespace absnorm::testing;

namespace {

// Plain bisection on x^p − 2x − (m−1), long double, for moderate p only.
long double bisect_root(long double p, long double m) {
    long double lo = 1.0L, hi = 2.0L;
    auto g = [&](long double x) { return std::pow(x, p) - 2.0L * x - (m - 1.0L); };
    while (g(hi) < 0) hi *= 2.0L;
    for (int i = 0; i < 200; ++i) {
        const long double mid = 0.5L * (lo + hi);
        (g(mid) < 0 ? lo : hi) = mid;
    }
    return 0.5L * (lo + hi);
}

long double c_from_root(long double x, long double p, long double m) {
    return std::sqrt(x * (x + m - 1.0L)) / std::pow(std::pow(x, p) + m - 1.0L, 1.0L / p);
}

}  // namespace

TEST_CASE("frozen values") {
    struct Row {
        double p;
        std::size_t m;
        double x;
        double c;
    };
    const Row rows[] = {
        {4.0, 2, 1.39533699446707301879, 1.23573034353664082128},
        {3.0, 2, 1.61803398874989484820, 1.18525838120451264906},
        {1.5, 2, 4.86453651231758439104, 1.03465395185143416117},
        {2.0, 4, 3.0, 1.22474487139158904910},
    };
    for (const Row& r : rows) {
        const ConjectureResult res = c_conjectured(r.p, r.m);
        CHECK(rel(res.x, r.x) <= 1e-13);
        CHECK(rel(res.c, r.c) <= 1e-13);
        CHECK(res.residual <= 1e-10);
    }
    CHECK(rel(c_conjectured(4.0, 3).c, 1.40553623012949850429) <= 1e-13);
    CHECK(rel(c_conjectured(8.0, 16).c, 3.13709736414435365282) <= 1e-13);
}

TEST_CASE("agrees with bisection oracle") {
    for (double p : {1.2, 1.5, 2.0, 2.5, 3.0, 4.0, 8.0, 20.0})
        for (std::size_t m = 2; m <= 16; ++m) {
            const long double x = bisect_root(p, m);
            const ConjectureResult res = c_conjectured(p, m);
            CHECK(rel(res.x, static_cast<double>(x)) <= 1e-12);
            CHECK(rel(res.c, static_cast<double>(c_from_root(x, p, m))) <= 1e-12);
        }
}

TEST_CASE("p = 2 closed form") {
    for (std::size_t m = 2; m <= 100; ++m) {
        const double sm = std::sqrt(static_cast<double>(m));
        const RootResult r = solve_x(2.0, m);
        CHECK(rel(r.x, 1.0 + sm) <= 1e-12);
        CHECK(rel(c_conjectured(2.0, m).c, std::sqrt((1.0 + sm) / 2.0)) <= 1e-12);
    }
}

TEST_CASE("bounds and monotonicity in m") {
    for (double p : {1.5, 2.0, 3.0, 4.0, 8.0}) {
        double prev = 0.0;
        for (std::size_t m = 2; m <= 16; ++m) {
            const ConjectureResult r = c_conjectured(p, m);
            CHECK(r.c >= 1.0);
            CHECK(r.c <= r.universal + 1e-9);
            CHECK(r.universal == doctest::Approx(std::pow(std::sqrt(double(m)), 1.0 - 1.0 / p)));
            CHECK(r.c > prev);
            prev = r.c;
        }
    }
}

TEST_CASE("near p = 1 the root stays in the log domain") {
    const RootResult r = solve_x(1.0001, 2);
    CHECK(r.log_x == doctest::Approx(6931.47180559945309417).epsilon(1e-12));
    CHECK(std::isinf(r.x));
    for (std::size_t m : {2u, 4u, 9u}) {
        const ConjectureResult c = c_conjectured(1.0001, m);
        CHECK(std::isfinite(c.c));
        CHECK(c.c == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(c.residual <= 1e-10);
    }
}

TEST_CASE("large p approaches sqrt(m)") {
    CHECK(rel(c_conjectured(1000.0, 2).c, 1.41341863063633756957) <= 1e-12);
    CHECK(rel(c_conjectured(1000.0, 3).c, 1.73054898050477172426) <= 1e-12);
    CHECK(rel(c_conjectured(1000.0, 4).c, 1.99785430913051625444) <= 1e-12);
    CHECK(rel(c_conjectured(1000.0, 9).c, 2.99517081061562626455) <= 1e-12);
}

TEST_CASE("domain errors") {
    for (double p : {1.0, 0.5, -2.0}) {
        try {
            solve_x(p, 2);
            FAIL("expected PTooSmall");
        } catch (const Error& e) {
            CHECK(e.kind() == ErrorKind::PTooSmall);
        }
    }
    CHECK_THROWS_AS(solve_x(std::numeric_limits<double>::infinity(), 2), Error);
    CHECK_THROWS_AS(solve_x(std::nan(""), 2), Error);
    CHECK_THROWS_AS(c_conjectured(2.0, 1), Error);
}

TEST_CASE("limit report") {
    for (std::size_t m : {2u, 4u, 9u}) {
        const LimitReport lr = limit_checks(m);
        CHECK(lr.gap_to_one <= 0.01);
        CHECK(lr.gap_to_sqrt_m <= 0.01);
        CHECK(lr.monotone_to_one);
        CHECK(lr.monotone_to_sqrt_m);
        CHECK(lr.p2_error <= 1e-12);
        for (double v : lr.near_one) CHECK(std::isfinite(v));
        for (double v : lr.near_sqrt_m) CHECK(std::isfinite(v));
    }
}

TEST_CASE("independent scan agrees with the root") {
    CHECK(cross_check_scan(2.0, 9) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
    for (double p : {1.5, 2.0, 3.0, 4.0, 8.0})
        for (std::size_t m : {2u, 3u, 7u, 16u})
            CHECK(rel(cross_check_scan(p, m), c_conjectured(p, m).c) <= 1e-8);
}

TEST_CASE("the root maximizes R_p") {
    for (double p : {1.5, 3.0, 6.0})
        for (std::size_t m : {2u, 5u}) {
            const PExponent pe = PExponent::finite(p);
            const ConjectureResult c = c_conjectured(p, m);
            CHECK(rel(r_p(c.x, m, pe), c.c) <= 1e-13);
            CHECK(r_p(c.x * 1.01, m, pe) < c.c);
            CHECK(r_p(c.x / 1.01, m, pe) < c.c);
        }
}
