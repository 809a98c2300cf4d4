#include "absnorm/conjecture.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "absnorm/error.hpp"
#include "absnorm/extremal.hpp"
#include "absnorm/schatten.hpp"

namespace absnorm {

namespace {

void require_p(double p) {
    if (!(p > 1.0) || std::isnan(p))
        throw Error(ErrorKind::PTooSmall, "conjectured constant needs p > 1, got " + std::to_string(p));
}

void require_m(std::size_t m) {
    if (m < 2) throw Error(ErrorKind::DomainError, "m must be at least 2");
}

// g(u)/(2e^u + m − 1) = e^{h(u)} − 1 with
//   h(u) = (p−1)u − log(2 + (m−1)e^{−u}),
// strictly increasing in u with h(0) = −log(m+1) < 0.
double h_of_u(double u, double p, double k) { return (p - 1.0) * u - std::log(2.0 + k * std::exp(-u)); }

double h_prime(double u, double p, double k) {
    const double w = k * std::exp(-u);
    return (p - 1.0) + w / (2.0 + w);
}

// log(e^u + m − 1)
double log_shift(double u, double k) { return u + std::log1p(k * std::exp(-u)); }

}  // namespace

RootResult solve_x(double p, std::size_t m) {
    require_p(p);
    require_m(m);
    if (!std::isfinite(p)) throw Error(ErrorKind::DomainError, "p must be finite");
    const double k = static_cast<double>(m) - 1.0;

    double lo = 0.0;
    double hi = std::max(1.0, std::log(2.0) / (p - 1.0)) + std::log(static_cast<double>(m) + 1.0);
    int expansions = 0;
    while (h_of_u(hi, p, k) <= 0.0) {
        if (++expansions > 64) throw Error(ErrorKind::NoConvergence, "failed to bracket root");
        lo = hi;
        hi *= 2.0;
    }

    double u = 0.5 * (lo + hi);
    for (int it = 1; it <= root_iteration_cap; ++it) {
        const double h = h_of_u(u, p, k);
        if (std::abs(std::expm1(h)) <= root_tolerance) return {std::exp(u), u, it};
        if (h < 0.0)
            lo = u;
        else
            hi = u;
        double next = u - h / h_prime(u, p, k);
        // Fall back to bisection when Newton leaves the bracket.
        if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
        if (next == u) return {std::exp(u), u, it};
        u = next;
    }
    throw Error(ErrorKind::NoConvergence, "root iteration cap reached");
}

ConjectureResult c_conjectured(double p, std::size_t m) {
    const RootResult root = solve_x(p, m);
    const double k = static_cast<double>(m) - 1.0;
    const double u = root.log_x;
    const double ls = log_shift(u, k);
    // At the root x^p + m − 1 = 2(x + m − 1).
    const double log_c = 0.5 * (u + ls) - (std::log(2.0) + ls) / p;

    ConjectureResult r;
    r.p = p;
    r.m = m;
    r.x = root.x;
    r.log_x = u;
    r.c = std::exp(log_c);
    r.residual = std::abs(std::expm1(h_of_u(u, p, k)));
    r.universal = std::pow(std::sqrt(static_cast<double>(m)), 1.0 - 1.0 / p);
    return r;
}

LimitReport limit_checks(std::size_t m) {
    require_m(m);
    LimitReport rep;
    rep.m = m;
    rep.epsilons = {1e-1, 1e-2, 1e-3, 1e-4};
    rep.large_p = {10.0, 50.0, 200.0, 1000.0};
    for (double eps : rep.epsilons) rep.near_one.push_back(c_conjectured(1.0 + eps, m).c);
    for (double big : rep.large_p) rep.near_sqrt_m.push_back(c_conjectured(big, m).c);

    // Near p = 1 the values reach 1 to double precision; allow roundoff ties.
    const auto nondecreasing = [](const std::vector<double>& v) {
        for (std::size_t i = 1; i < v.size(); ++i)
            if (v[i] < v[i - 1] - 1e-12) return false;
        return true;
    };
    rep.monotone_to_one = nondecreasing({rep.near_one.rbegin(), rep.near_one.rend()});
    rep.monotone_to_sqrt_m = nondecreasing(rep.near_sqrt_m);
    rep.gap_to_one = std::abs(rep.near_one.back() - 1.0);
    rep.gap_to_sqrt_m = std::abs(rep.near_sqrt_m.back() - std::sqrt(static_cast<double>(m)));
    rep.p2_value = c_conjectured(2.0, m).c;
    rep.p2_error = std::abs(rep.p2_value - std::sqrt((1.0 + std::sqrt(static_cast<double>(m))) / 2.0));
    return rep;
}

double cross_check_scan(double p, std::size_t m) {
    require_p(p);
    require_m(m);
    const PExponent pe = PExponent::finite(p);
    const auto objective = [&](double u) { return log_r_p(u, m, pe); };

    // Doubling y is a unit step of ln 2 in u = log y.
    const double step = std::log(2.0);
    double hi = step;
    double prev = objective(0.0);
    double cur = objective(hi);
    int doublings = 0;
    while (cur >= prev) {
        if (++doublings > 1 << 20) throw Error(ErrorKind::NoConvergence, "R_p kept increasing");
        hi += step;
        prev = cur;
        cur = objective(hi);
    }
    double a = std::max(0.0, hi - 2.0 * step);
    double b = hi;

    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double c = b - inv_phi * (b - a);
    double d = a + inv_phi * (b - a);
    double fc = objective(c);
    double fd = objective(d);
    for (int it = 0; it < 200 && (b - a) > 1e-13 * std::max(1.0, b); ++it) {
        if (fc > fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = objective(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = objective(d);
        }
    }
    return std::exp(std::max({fc, fd, objective(0.5 * (a + b))}));
}

}  // namespace absnorm
