#include "tdscat/montecarlo.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "tdscat/parallel.hpp"
#include "tdscat/rng.hpp"

namespace tdscat {

namespace {

double pairwise_sum_range(const double* v, std::size_t n) {
    if (n <= 8) {
        double s = 0.0;
        for (std::size_t i = 0; i < n; ++i) s += v[i];
        return s;
    }
    const std::size_t h = n / 2;
    return pairwise_sum_range(v, h) + pairwise_sum_range(v + h, n - h);
}

}  // namespace

double pairwise_sum(const std::vector<double>& values) {
    return pairwise_sum_range(values.data(), values.size());
}

TrialSummary run_trials(const std::function<double(std::uint64_t)>& statistic, long trials,
                        std::uint64_t seed, int threads) {
    if (trials < 2) throw std::invalid_argument("run_trials: need at least 2 trials");
    if (threads <= 0) threads = default_thread_count();
    std::vector<double> values(trials);
    parallel_for(static_cast<std::size_t>(trials), threads, [&](std::size_t t) {
        values[t] = statistic(derive_stream(seed, t, 0x7261696cULL));
    });

    TrialSummary s;
    s.trials = trials;
    s.mean = pairwise_sum(values) / static_cast<double>(trials);
    std::vector<double> sq(trials);
    for (long t = 0; t < trials; ++t) {
        const double d = values[t] - s.mean;
        sq[t] = d * d;
    }
    s.variance = pairwise_sum(sq) / static_cast<double>(trials - 1);
    const double sd = std::sqrt(s.variance);
    s.mean_ci95_halfwidth = 1.96 * sd / std::sqrt(static_cast<double>(trials));
    s.variance_ci95_halfwidth = 1.96 * s.variance * std::sqrt(2.0 / (trials - 1));
    return s;
}

StatsReport make_report(std::string name, double estimate, double analytic, long trials,
                        double ci95_halfwidth, double tolerance) {
    StatsReport r;
    r.name = std::move(name);
    r.estimate = estimate;
    r.analytic = analytic;
    r.trials = trials;
    r.ci95_halfwidth = ci95_halfwidth;
    r.rel_error = std::abs(estimate - analytic) / std::max(std::abs(analytic), 1e-300);
    r.tolerance = tolerance;
    r.pass = tolerance <= 0.0 || r.rel_error <= tolerance;
    return r;
}

}  // namespace tdscat
