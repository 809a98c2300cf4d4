#include "absnorm/suites.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "absnorm/extremal.hpp"
#include "absnorm/inequality.hpp"
#include "absnorm/parallel.hpp"
#include "absnorm/random.hpp"

namespace absnorm {

namespace {

struct Outcome {
    std::size_t check;
    bool ok;
    double slack;
};

using Sample = std::vector<Outcome>;

Outcome from_bound(std::size_t check, const BoundCheck& b) {
    return {check, b.satisfied, b.slack / std::max(1.0, b.bound)};
}

// ok iff err ≤ tolerance; slack is tolerance − err.
Outcome within(std::size_t check, double err, double tolerance) {
    return {check, err <= tolerance, tolerance - err};
}

double rel_err(double a, double b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }

template <class Fn>
SuiteResult run_suite(std::string name, std::vector<std::string> checks, std::size_t count,
                      unsigned threads, Fn&& sample) {
    std::vector<Sample> outcomes(count);
    parallel_for(count, threads, [&](std::size_t i) { outcomes[i] = sample(i); });
    SuiteResult out{std::move(name), {}};
    for (auto& c : checks) out.checks.push_back({std::move(c), 0, 0});
    for (const Sample& s : outcomes)
        for (const Outcome& o : s) {
            CheckTally& t = out.checks[o.check];
            ++t.samples;
            if (!o.ok) ++t.failures;
            t.min_slack = std::min(t.min_slack, o.slack);
        }
    return out;
}

Rng sample_rng(std::uint64_t seed, std::uint64_t suite_tag, std::size_t i) {
    return Rng(derive_seed(seed ^ splitmix64(suite_tag), i));
}

const std::array<PExponent, 4>& q_grid() {
    static const std::array<PExponent, 4> grid{PExponent::finite(1.0), PExponent::finite(2.0),
                                               PExponent::finite(3.0), PExponent::infinity()};
    return grid;
}

constexpr std::array<double, 3> a_grid{0.25, 0.5, 1.0};

}  // namespace

bool SuiteResult::passed() const noexcept { return failures() == 0; }

std::size_t SuiteResult::failures() const noexcept {
    std::size_t total = 0;
    for (const auto& c : checks) total += c.failures;
    return total;
}

SuiteResult frobenius_suite(const SuiteOptions& opt) {
    constexpr std::array<std::size_t, 3> ms{2, 3, 5};
    constexpr std::array<Eigen::Index, 3> ns{2, 4, 6};
    const std::size_t cells = ms.size() * ns.size();
    // 15 extra samples for the extremal family, m = 2..16.
    const std::size_t count = opt.samples * cells + 15;
    return run_suite(
        "frobenius", {"frobenius_bound", "extremal_saturation"}, count, opt.threads,
        [&](std::size_t i) -> Sample {
            if (i >= opt.samples * cells) {
                const std::size_t m = 2 + (i - opt.samples * cells);
                const EquiangularFamily fam = build_family(m, s_star(m));
                const BoundCheck b = frobenius_bound_check(fam.tuple);
                return {within(1, std::abs(b.slack), 1e-9)};
            }
            const std::size_t cell = i % cells;
            Rng rng = sample_rng(opt.seed, 1, i);
            const MatrixTuple t = random_stress_tuple(ms[cell / ns.size()], ns[cell % ns.size()], rng);
            return {from_bound(0, frobenius_bound_check(t))};
        });
}

SuiteResult lemma_suite(const SuiteOptions& opt) {
    constexpr std::array<std::size_t, 4> ms{2, 3, 5, 9};
    return run_suite(
        "lemma", {"lemma_random", "lemma_planted_equality"}, opt.samples + 6, opt.threads,
        [&](std::size_t i) -> Sample {
            if (i >= opt.samples) {
                const auto n = static_cast<Eigen::Index>(i - opt.samples + 1);
                const ComplexMatrix id = ComplexMatrix::Identity(n, n);
                const BoundCheck b = lemma_mcs_check(id, id, id, 1.0);
                return {within(1, std::abs(b.slack), 1e-12)};
            }
            Rng rng = sample_rng(opt.seed, 2, i);
            std::uniform_int_distribution<Eigen::Index> dim(1, 6);
            std::uniform_int_distribution<int> pick(0, 3);
            const Eigen::Index n = dim(rng);
            const std::size_t m = ms[static_cast<std::size_t>(pick(rng))];
            const std::array<double, 4> ts{0.1, 1.0 / (1.0 + std::sqrt(static_cast<double>(m))), 1.0, 10.0};
            const double t = ts[static_cast<std::size_t>(pick(rng))];
            const ComplexMatrix x = random_psd(n, rng);
            // A quarter of the samples use X = Y and a unitary Q, where the
            // bound is tightest.
            const bool tight = pick(rng) == 0;
            const ComplexMatrix y = tight ? x : random_psd(n, rng);
            const ComplexMatrix q = tight ? random_unitary(n, rng) : random_contraction(n, rng);
            return {from_bound(0, lemma_mcs_check(x, y, q, t))};
        });
}

SuiteResult prop31_suite(const SuiteOptions& opt) {
    constexpr std::array<std::size_t, 3> ms{2, 3, 5};
    return run_suite(
        "prop31", {"prop31[a=0.25]", "prop31[a=0.5]", "prop31[a=1]"}, opt.samples, opt.threads,
        [&](std::size_t i) -> Sample {
            Rng rng = sample_rng(opt.seed, 3, i);
            std::uniform_int_distribution<Eigen::Index> dim(2, 5);
            const MatrixTuple t = random_stress_tuple(ms[i % ms.size()], dim(rng), rng);
            Sample s;
            for (std::size_t ai = 0; ai < a_grid.size(); ++ai)
                for (const PExponent& q : q_grid()) s.push_back(from_bound(ai, prop31_check(t, q, a_grid[ai])));
            return s;
        });
}

SuiteResult majorization_suite(const SuiteOptions& opt) {
    constexpr std::array<std::size_t, 3> ms{2, 3, 5};
    return run_suite(
        "majorization",
        {"block_positivity", "log_majorization", "power_majorization", "geomean_bound",
         "concave_subadditivity", "direct_sum_triangle", "direct_sum_power_mean", "direct_sum_vs_sum"},
        opt.samples, opt.threads, [&](std::size_t i) -> Sample {
            Rng rng = sample_rng(opt.seed, 4, i);
            std::uniform_int_distribution<Eigen::Index> dim(2, 5);
            const std::size_t m = ms[i % ms.size()];
            const Eigen::Index n = dim(rng);
            const MatrixTuple t = random_stress_tuple(m, n, rng);
            Sample s;
            for (const auto& a : t) s.push_back(from_bound(0, block_positivity_check(a)));
            for (double a : a_grid) {
                const MajorizationChecks mc = majorization_check(t, a);
                s.push_back({1, mc.log_majorized, 0.0});
                s.push_back({2, mc.power_majorized, 0.0});
                for (const PExponent& q : q_grid()) {
                    s.push_back(from_bound(3, geomean_bound_check(t, q, a)));
                    const SubadditivityChecks sub = subadditivity_check(t, q, a);
                    s.push_back(from_bound(4, sub.adjoint_side));
                    s.push_back(from_bound(4, sub.direct_side));
                }
            }
            std::vector<ComplexMatrix> psd;
            for (std::size_t k = 0; k < m; ++k) psd.push_back(random_psd(n, rng));
            const MatrixTuple psd_tuple(std::move(psd));
            for (const PExponent& q : q_grid()) {
                const DirectSumChecks d = direct_sum_checks(psd_tuple, q);
                s.push_back(from_bound(5, d.triangle));
                s.push_back(from_bound(6, d.power_mean));
                s.push_back(from_bound(7, d.direct_vs_sum));
            }
            return s;
        });
}

SuiteResult invariance_suite(const SuiteOptions& opt) {
    const std::array<PExponent, 5> ps{PExponent::finite(1.0), PExponent::finite(1.5), PExponent::finite(2.0),
                                      PExponent::finite(3.0), PExponent::infinity()};
    return run_suite(
        "invariance", {"scale", "left_unitary", "right_unitary", "psd_ratio_one"}, opt.samples, opt.threads,
        [&](std::size_t i) -> Sample {
            Rng rng = sample_rng(opt.seed, 5, i);
            std::uniform_int_distribution<std::size_t> msz(2, 5);
            std::uniform_int_distribution<Eigen::Index> dim(2, 5);
            std::uniform_real_distribution<double> log_scale(-3.0, 3.0);
            const std::size_t m = msz(rng);
            const Eigen::Index n = dim(rng);
            const PExponent p = ps[i % ps.size()];
            const MatrixTuple t = random_stress_tuple(m, n, rng);
            const double base = ratio(t, p).ratio;

            const double c = std::pow(10.0, log_scale(rng));
            const ComplexMatrix w = random_unitary(n, rng);
            const ComplexMatrix v = random_unitary(n, rng);
            std::vector<ComplexMatrix> scaled, left, right, psd;
            for (const auto& a : t) {
                scaled.push_back(c * a);
                left.push_back(w * a);
                right.push_back(a * v);
                psd.push_back(random_psd(n, rng));
            }
            return {within(0, rel_err(ratio(MatrixTuple(std::move(scaled)), p).ratio, base), 1e-10),
                    within(1, rel_err(ratio(MatrixTuple(std::move(left)), p).ratio, base), 1e-9),
                    within(2, rel_err(ratio(MatrixTuple(std::move(right)), p).ratio, base), 1e-9),
                    within(3, std::abs(ratio(MatrixTuple(std::move(psd)), p).ratio - 1.0), 1e-10)};
        });
}

}  // namespace absnorm
