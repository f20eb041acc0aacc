// Geometric Brownian motion testbed: exact terminal value, Euler-Maruyama
// scheme, and closed-form second moments of both, so the weak error of the
// quantity of interest |X(T)|^2 is available without sampling.

#ifndef MLMC_GBM_HPP
#define MLMC_GBM_HPP

#include <cstddef>

#include "mlmc/rng.hpp"

namespace mlmc::gbm {

struct GbmConfig {
    double mu = -0.5;
    double sigma = 1.0;
    double x0 = 1.0;
    double t_end = 0.5;
};

/// Time grid with 2^j + 1 points on [0, T]: n_steps = 2^j, k = T / n_steps.
struct GbmLevel {
    int j = 0;
    std::size_t n_steps = 1;
    double k = 0.0;
};

GbmLevel make_level(const GbmConfig& cfg, int j);

/// X(T) = x0 * exp((mu - sigma^2/2) T + sigma * W(T)).
double exact_terminal(const GbmConfig& cfg, double w_terminal);

/// E[|X(t)|^2] = x0^2 * exp((2 mu + sigma^2) t). Rejects t outside [0, T].
double exact_second_moment(const GbmConfig& cfg, double t);

/// Euler recursion X^j = (1 + k mu + sigma dW_j) X^{j-1}, returns X^{n_steps}.
/// Increments must match the level grid (steps, dt) with a single mode.
double euler_maruyama_terminal(const GbmConfig& cfg, const GbmLevel& level,
                               const BrownianIncrements& increments);

/// Exact E[|X^{n_steps}|^2] of the Euler chain:
/// x0^2 * ((1 + k mu)^2 + sigma^2 k)^{n_steps}.
double euler_second_moment_exact(const GbmConfig& cfg, const GbmLevel& level);

/// |E[|X(T)|^2] - E[|X^{n_steps}|^2]|, the exact weak error at this level.
double exact_bias(const GbmConfig& cfg, const GbmLevel& level);

}  // namespace mlmc::gbm

#endif  // MLMC_GBM_HPP
