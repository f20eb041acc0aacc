// Monte Carlo and multilevel Monte Carlo estimators, the two weak-error
// estimators built on them, sample-size schedules, replication averaging and
// pilot variance estimation.
//
// A Sampler is an index-addressable source: sampler(i) is the i-th draw of
// the estimated quantity (or of a coupled level difference). Distinct indices
// are independent, the same index always returns the same value, and samplers
// are safe to call from concurrent workers. All reductions accumulate into an
// indexed buffer and fold sequentially, so estimates do not depend on the
// worker count.

#ifndef MLMC_ESTIMATORS_HPP
#define MLMC_ESTIMATORS_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace mlmc {

using Sampler = std::function<double(std::uint64_t)>;

/// Sample mean together with the sample count and the unbiased (n-1 denominator)
/// sample variance of the summands. For multilevel estimates the variance slot
/// is scaled so that sample_variance / n still estimates Var[estimator].
struct MonteCarloEstimate {
    double value = 0.0;
    std::size_t n = 0;
    double sample_variance = 0.0;
};

/// Per-level sample counts N_0..N_L. Length L+1 >= 1, every count >= 1.
struct LevelSchedule {
    std::vector<std::size_t> counts;

    std::size_t levels() const { return counts.size() - 1; }  // L
    std::size_t total() const;
};

/// Plain Monte Carlo mean of n draws. Rejects n == 0.
MonteCarloEstimate mc_estimate(const Sampler& src, std::size_t n, unsigned threads = 1);

/// Multilevel estimator: E_{N_0}[Y_0] + sum_l E_{N_l}[Y_l - Y_{l-1}].
/// level_samplers[0] draws Y_0; level_samplers[l] draws the coupled difference
/// Y_l - Y_{l-1}. Sizes must match the schedule.
MonteCarloEstimate mlmc_estimate(const std::vector<Sampler>& level_samplers,
                                 const LevelSchedule& schedule, unsigned threads = 1);

/// |exact_mean - E_N[Y_n]|: weak-error estimate against a known expectation.
double weak_error_type1(double exact_mean, const Sampler& approx, std::size_t n,
                        unsigned threads = 1);

/// |E_N[Y - Y_n]|: weak-error estimate from coupled differences.
double weak_error_type2(const Sampler& diff, std::size_t n, unsigned threads = 1);

/// |exact_mean - (multilevel estimate)|.
double mlmc_weak_error_type1(double exact_mean, const std::vector<Sampler>& level_samplers,
                             const LevelSchedule& schedule, unsigned threads = 1);

/// Multilevel estimate of |E[Y - Y_L]|. The level-0 sampler draws the coupled
/// difference Y - Y_0; samplers for l >= 1 draw Y_l - Y_{l-1} exactly as in
/// mlmc_estimate and enter the telescoping sum with a minus sign, so the
/// estimated expectation is E[Y - Y_0] + sum_l E[Y_{l-1} - Y_l] = E[Y - Y_L].
double mlmc_weak_error_type2(const std::vector<Sampler>& level_samplers,
                             const LevelSchedule& schedule, unsigned threads = 1);

/// Sample sizes that make the multilevel sampling error track the bias:
/// N_0 = ceil(bias^-2), N_l = ceil(bias^-2 * level_variances[l-1] * l^(1+eps)),
/// each floored at one sample. Rejects bias <= 0 and eps <= 0.
LevelSchedule corollary_schedule(double bias, const std::vector<double>& level_variances,
                                 double eps);

/// Mean and sample standard deviation of m independent realizations of a
/// replicate-indexed error estimator. stddev is 0 when m == 1.
std::pair<double, double> replicate_average(const std::function<double(std::uint64_t)>& error_fn,
                                            std::size_t m, unsigned threads = 1);

/// Unbiased sample variance from n_pilot draws. Rejects n_pilot < 2.
double pilot_variance(const Sampler& src, std::size_t n_pilot, unsigned threads = 1);

}  // namespace mlmc

#endif  // MLMC_ESTIMATORS_HPP
