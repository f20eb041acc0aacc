#include "mlmc/estimators.hpp"

#include <cmath>
#include <stdexcept>

#include "mlmc/parallel.hpp"

namespace mlmc {

namespace {

// Two-pass mean/variance over an index-ordered buffer. Deterministic: the
// buffer may be filled in parallel, the folds here are sequential.
MonteCarloEstimate reduce_buffer(const std::vector<double>& buf) {
    const std::size_t n = buf.size();
    double sum = 0.0;
    for (double v : buf) sum += v;
    const double mean = sum / static_cast<double>(n);
    double ss = 0.0;
    for (double v : buf) {
        const double d = v - mean;
        ss += d * d;
    }
    MonteCarloEstimate est;
    est.value = mean;
    est.n = n;
    est.sample_variance = n > 1 ? ss / static_cast<double>(n - 1) : 0.0;
    return est;
}

std::vector<double> draw(const Sampler& src, std::size_t n, unsigned threads) {
    std::vector<double> buf(n);
    parallel_for_index(n, threads, [&](std::size_t i) { buf[i] = src(i); });
    return buf;
}

}  // namespace

std::size_t LevelSchedule::total() const {
    std::size_t t = 0;
    for (std::size_t c : counts) t += c;
    return t;
}

MonteCarloEstimate mc_estimate(const Sampler& src, std::size_t n, unsigned threads) {
    if (n == 0) throw std::invalid_argument("mc_estimate: n must be >= 1");
    return reduce_buffer(draw(src, n, threads));
}

MonteCarloEstimate mlmc_estimate(const std::vector<Sampler>& level_samplers,
                                 const LevelSchedule& schedule, unsigned threads) {
    if (level_samplers.empty() || level_samplers.size() != schedule.counts.size())
        throw std::invalid_argument("mlmc_estimate: sampler/schedule length mismatch");
    for (std::size_t c : schedule.counts)
        if (c == 0) throw std::invalid_argument("mlmc_estimate: zero sample count");

    double value = 0.0;
    double estimator_var = 0.0;  // sum of var_l / N_l
    for (std::size_t l = 0; l < level_samplers.size(); ++l) {
        const MonteCarloEstimate e = mc_estimate(level_samplers[l], schedule.counts[l], threads);
        value += e.value;
        estimator_var += e.sample_variance / static_cast<double>(e.n);
    }
    MonteCarloEstimate est;
    est.value = value;
    est.n = schedule.total();
    est.sample_variance = estimator_var * static_cast<double>(est.n);
    return est;
}

double weak_error_type1(double exact_mean, const Sampler& approx, std::size_t n,
                        unsigned threads) {
    return std::abs(exact_mean - mc_estimate(approx, n, threads).value);
}

double weak_error_type2(const Sampler& diff, std::size_t n, unsigned threads) {
    return std::abs(mc_estimate(diff, n, threads).value);
}

double mlmc_weak_error_type1(double exact_mean, const std::vector<Sampler>& level_samplers,
                             const LevelSchedule& schedule, unsigned threads) {
    return std::abs(exact_mean - mlmc_estimate(level_samplers, schedule, threads).value);
}

double mlmc_weak_error_type2(const std::vector<Sampler>& level_samplers,
                             const LevelSchedule& schedule, unsigned threads) {
    if (level_samplers.empty() || level_samplers.size() != schedule.counts.size())
        throw std::invalid_argument("mlmc_weak_error_type2: sampler/schedule length mismatch");

    // E_{N_0}[Y - Y_0] + sum_l E_{N_l}[Y_{l-1} - Y_l]; the level samplers draw
    // Y_l - Y_{l-1}, hence the minus sign.
    double value = mc_estimate(level_samplers[0], schedule.counts[0], threads).value;
    for (std::size_t l = 1; l < level_samplers.size(); ++l)
        value -= mc_estimate(level_samplers[l], schedule.counts[l], threads).value;
    return std::abs(value);
}

LevelSchedule corollary_schedule(double bias, const std::vector<double>& level_variances,
                                 double eps) {
    if (!(bias > 0.0)) throw std::invalid_argument("corollary_schedule: bias must be positive");
    if (!(eps > 0.0)) throw std::invalid_argument("corollary_schedule: eps must be positive");

    const double inv_sq = 1.0 / (bias * bias);
    LevelSchedule schedule;
    schedule.counts.reserve(level_variances.size() + 1);
    schedule.counts.push_back(static_cast<std::size_t>(std::ceil(inv_sq)));
    for (std::size_t l = 1; l <= level_variances.size(); ++l) {
        const double var = level_variances[l - 1];
        if (var < 0.0) throw std::invalid_argument("corollary_schedule: negative variance");
        const double raw = inv_sq * var * std::pow(static_cast<double>(l), 1.0 + eps);
        schedule.counts.push_back(
            std::max<std::size_t>(1, static_cast<std::size_t>(std::ceil(raw))));
    }
    return schedule;
}

std::pair<double, double> replicate_average(const std::function<double(std::uint64_t)>& error_fn,
                                            std::size_t m, unsigned threads) {
    if (m == 0) throw std::invalid_argument("replicate_average: m must be >= 1");
    std::vector<double> buf(m);
    parallel_for_index(m, threads, [&](std::size_t i) { buf[i] = error_fn(i); });
    const MonteCarloEstimate e = reduce_buffer(buf);
    return {e.value, std::sqrt(e.sample_variance)};
}

double pilot_variance(const Sampler& src, std::size_t n_pilot, unsigned threads) {
    if (n_pilot < 2) throw std::invalid_argument("pilot_variance: need at least 2 samples");
    return mc_estimate(src, n_pilot, threads).sample_variance;
}

}  // namespace mlmc
