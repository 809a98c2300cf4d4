#include "absnorm/search.hpp"

#include <cmath>
#include <string>

#include "absnorm/conjecture.hpp"
#include "absnorm/error.hpp"
#include "absnorm/extremal.hpp"
#include "absnorm/inequality.hpp"
#include "absnorm/parallel.hpp"
#include "absnorm/random.hpp"

namespace absnorm {

namespace {

constexpr double min_step = 1e-10;

std::vector<double> to_params(const MatrixTuple& t) {
    std::vector<double> theta;
    theta.reserve(2 * t.size() * static_cast<std::size_t>(t.rows() * t.cols()));
    for (const auto& a : t)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            for (Eigen::Index i = 0; i < a.rows(); ++i) {
                theta.push_back(a(i, j).real());
                theta.push_back(a(i, j).imag());
            }
    return theta;
}

MatrixTuple from_params(const std::vector<double>& theta, std::size_t m, Eigen::Index rows,
                        Eigen::Index cols) {
    std::vector<ComplexMatrix> members;
    members.reserve(m);
    std::size_t pos = 0;
    for (std::size_t k = 0; k < m; ++k) {
        ComplexMatrix a(rows, cols);
        for (Eigen::Index j = 0; j < cols; ++j)
            for (Eigen::Index i = 0; i < rows; ++i) {
                a(i, j) = Complex(theta[pos], theta[pos + 1]);
                pos += 2;
            }
        members.push_back(std::move(a));
    }
    return MatrixTuple(std::move(members));
}

void normalize(std::vector<double>& theta) {
    double norm = 0.0;
    for (double v : theta) norm = std::hypot(norm, v);
    if (norm > 0.0)
        for (double& v : theta) v /= norm;
}

double golden_max(const auto& f, double a, double b, int iters) {
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double c = b - inv_phi * (b - a);
    double d = a + inv_phi * (b - a);
    double fc = f(c);
    double fd = f(d);
    for (int it = 0; it < iters; ++it) {
        if (fc > fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = f(d);
        }
    }
    return 0.5 * (a + b);
}

}  // namespace

void validate(const SearchConfig& cfg) {
    if (cfg.m < 2) throw Error(ErrorKind::DomainError, "search needs m >= 2");
    if (cfg.n < 1) throw Error(ErrorKind::DomainError, "search needs n >= 1");
    if (cfg.restarts < 1) throw Error(ErrorKind::DomainError, "restarts must be >= 1");
    if (cfg.max_iters < 1) throw Error(ErrorKind::DomainError, "max_iters must be >= 1");
    if (!(cfg.initial_step > 0.0) || !std::isfinite(cfg.initial_step))
        throw Error(ErrorKind::DomainError, "initial step must be positive");
    if (!(cfg.shrink > 0.0 && cfg.shrink < 1.0))
        throw Error(ErrorKind::DomainError, "shrink factor must lie in (0, 1)");
}

LocalResult local_maximize(const MatrixTuple& start, PExponent p, const SearchConfig& cfg,
                           std::uint64_t direction_seed) {
    const std::size_t m = start.size();
    const Eigen::Index rows = start.rows();
    const Eigen::Index cols = start.cols();

    std::vector<double> theta = to_params(start);
    normalize(theta);
    const std::size_t dim = theta.size();
    const auto evaluate = [&](const std::vector<double>& x) {
        return ratio(from_params(x, m, rows, cols), p).ratio;
    };

    LocalResult out{from_params(theta, m, rows, cols), 0.0, 0.0, 0, cfg.initial_step, {}, 0.0};
    double current = evaluate(theta);
    out.initial_ratio = current;
    out.max_evaluated = current;
    out.trace.push_back(current);

    Rng rng(direction_seed);
    std::normal_distribution<double> normal(0.0, 1.0);
    std::vector<double> direction(dim);
    std::vector<double> candidate(dim);
    double step = cfg.initial_step;
    std::size_t coordinate = 0;
    std::size_t proposal = 0;
    std::size_t failed_directions = 0;

    while (out.iters < cfg.max_iters && step >= min_step) {
        // Two coordinate directions per random direction.
        std::fill(direction.begin(), direction.end(), 0.0);
        if (proposal++ % 3 == 2) {
            double norm = 0.0;
            for (double& v : direction) {
                v = normal(rng);
                norm = std::hypot(norm, v);
            }
            for (double& v : direction) v /= norm;
        } else {
            direction[coordinate++ % dim] = 1.0;
        }

        bool improved = false;
        for (const double sign : {1.0, -1.0}) {
            if (out.iters >= cfg.max_iters) break;
            for (std::size_t i = 0; i < dim; ++i) candidate[i] = theta[i] + sign * step * direction[i];
            normalize(candidate);
            ++out.iters;
            double value = 0.0;
            try {
                value = evaluate(candidate);
            } catch (const Error& e) {
                if (e.kind() != ErrorKind::AllZeroTuple) throw;
                continue;
            }
            out.max_evaluated = std::max(out.max_evaluated, value);
            if (value > current) {
                theta.swap(candidate);
                current = value;
                out.trace.push_back(current);
                improved = true;
                break;
            }
        }

        if (improved) {
            failed_directions = 0;
        } else if (++failed_directions >= dim) {
            step *= cfg.shrink;
            failed_directions = 0;
        }
    }

    out.tuple = from_params(theta, m, rows, cols);
    out.ratio = current;
    out.final_step = step;
    return out;
}

FamilyScan scan_family(std::size_t m, PExponent p, std::size_t grid_points) {
    if (m < 2) throw Error(ErrorKind::DomainError, "scan_family needs m >= 2");
    if (grid_points < 3) throw Error(ErrorKind::DomainError, "scan_family needs at least 3 grid points");
    const auto f = [&](double s) { return family_ratio_p(m, s, p); };

    std::size_t best = 0;
    double best_value = f(0.0);
    const double h = 1.0 / static_cast<double>(grid_points - 1);
    for (std::size_t i = 1; i < grid_points; ++i) {
        const double v = f(static_cast<double>(i) * h);
        if (v > best_value) {
            best_value = v;
            best = i;
        }
    }
    double lo = best == 0 ? 0.0 : static_cast<double>(best - 1) * h;
    double hi = best + 1 >= grid_points ? 1.0 : static_cast<double>(best + 1) * h;

    double s = golden_max(f, lo, hi, 120);
    if (!p.is_infinite()) {
        const double e = p.value();
        const auto slope = [&](double x) { return family_log_ratio_derivative(m, x, e); };
        if (slope(lo) > 0.0 && slope(hi) < 0.0) {
            // Golden section pins the maximizer only to ~sqrt(eps); the
            // derivative's sign pins it to roundoff.
            for (int it = 0; it < 200 && hi - lo > 0.0; ++it) {
                const double mid = 0.5 * (lo + hi);
                if (mid <= lo || mid >= hi) break;
                (slope(mid) > 0.0 ? lo : hi) = mid;
            }
            s = 0.5 * (lo + hi);
        }
    }
    // Endpoints are admissible maximizers (p = 1 peaks at s = 1, p = ∞ at s = 0).
    FamilyScan out{s, f(s)};
    for (const double edge : {0.0, 1.0}) {
        const double v = f(edge);
        if (v > out.ratio_best) out = {edge, v};
    }
    return out;
}

SearchReport search(const SearchConfig& cfg) {
    validate(cfg);
    std::vector<std::optional<LocalResult>> slots(cfg.restarts);
    std::vector<std::uint64_t> seeds(cfg.restarts);
    for (std::size_t i = 0; i < cfg.restarts; ++i) seeds[i] = derive_seed(cfg.seed, i);

    parallel_for(cfg.restarts, cfg.threads, [&](std::size_t i) {
        const MatrixTuple start = random_tuple(cfg.m, cfg.n, seeds[i]);
        slots[i] = local_maximize(start, cfg.p, cfg, splitmix64(seeds[i]));
    });

    SearchReport rep{0.0, 0, slots.front()->tuple, std::nullopt, universal_bound(cfg.p, cfg.m),
                     std::nullopt, 0.0, 0.0, {}};
    rep.best_ratio = -1.0;
    for (std::size_t i = 0; i < cfg.restarts; ++i) {
        const LocalResult& r = *slots[i];
        rep.restarts.push_back({i, seeds[i], r.initial_ratio, r.ratio, r.iters, r.max_evaluated});
        rep.max_evaluated = std::max(rep.max_evaluated, r.max_evaluated);
        // Strict comparison keeps the lowest index on ties.
        if (r.ratio > rep.best_ratio) {
            rep.best_ratio = r.ratio;
            rep.best_restart = i;
            rep.best_tuple = r.tuple;
        }
    }
    if (!cfg.p.is_infinite() && cfg.p.value() > 1.0) {
        rep.conjectured = c_conjectured(cfg.p.value(), cfg.m).c;
        rep.gap_to_conjecture = *rep.conjectured - rep.best_ratio;
    }
    rep.gap_to_universal = rep.universal - rep.best_ratio;
    return rep;
}

}  // namespace absnorm
