#ifndef TDSCAT_MONTECARLO_HPP
#define TDSCAT_MONTECARLO_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace tdscat {

// Deterministic pairwise (tree) summation over a value array; independent of
// the order the values were produced in.
double pairwise_sum(const std::vector<double>& values);

struct TrialSummary {
    long trials = 0;
    double mean = 0.0;
    double variance = 0.0;           // unbiased
    double mean_ci95_halfwidth = 0.0;
    double variance_ci95_halfwidth = 0.0;  // normal-theory approximation
};

// Runs `statistic(trial_seed)` for trials derived deterministically from the
// master seed. Trials may execute in parallel; aggregation is the pairwise
// reduction over the trial-indexed array, so results are bit-identical for
// any thread count.
TrialSummary run_trials(const std::function<double(std::uint64_t)>& statistic, long trials,
                        std::uint64_t seed, int threads = 0);

struct StatsReport {
    std::string name;
    double estimate = 0.0;
    double analytic = 0.0;
    long trials = 0;
    double rel_error = 0.0;
    double ci95_halfwidth = 0.0;
    double tolerance = 0.0;  // acceptance threshold on rel_error, 0 = none
    bool pass = true;
};

StatsReport make_report(std::string name, double estimate, double analytic, long trials,
                        double ci95_halfwidth, double tolerance = 0.0);

}  // namespace tdscat

#endif
