// Closed-form lower/upper bounds on the mean-square sampling error of the
// weak-error estimators, plus the constants for the bias-matched multilevel
// sample-size schedule.
//
// All functions take the true bias |E[Y - Y_n]| and true variances; callers
// working from estimates widen their acceptance bands themselves.

#ifndef MLMC_BOUNDS_HPP
#define MLMC_BOUNDS_HPP

#include <cstddef>
#include <utility>
#include <vector>

#include "mlmc/estimators.hpp"

namespace mlmc {

/// Lower and upper mean-square sampling-error bounds; 0 <= lower <= upper.
struct BoundPair {
    double lower = 0.0;
    double upper = 0.0;
};

/// sqrt(variance / n): the exact RMS sampling error of an N-sample mean.
double lln_rms(double variance, std::size_t n);

/// Bounds for |exact mean - E_N[Y_n]| as an estimator of the bias:
/// lower = -bias + sqrt(bias^2 + var_yn/n), upper = sqrt(var_yn/n).
BoundPair type1_bounds(double bias, double var_yn, std::size_t n);

/// Same bounds with the variance of the coupled difference Y - Y_n.
BoundPair type2_bounds(double bias, double var_diff, std::size_t n);

/// Multilevel analogue: the variance term is
/// S = var_y0/N_0 + sum_l level_vars[l-1]/N_l.
BoundPair mlmc_type1_bounds(double bias, double var_y0, const std::vector<double>& level_vars,
                            const LevelSchedule& schedule);

/// Multilevel bounds with Var[Y - Y_0] in the level-0 slot.
BoundPair mlmc_type2_bounds(double bias, double var_y_minus_y0,
                            const std::vector<double>& level_vars,
                            const LevelSchedule& schedule);

/// Constants (c_low, c_high) such that with the corollary_schedule sample
/// sizes the RMS sampling error lies in [c_low * bias, c_high * bias]:
/// c_low = sqrt((3 + var_y0) / 2) - 1, c_high = sqrt(var_y0 + zeta(1 + eps)).
std::pair<double, double> corollary_constants(double var_y0, double eps);

/// Riemann zeta for s > 1, relative error below 1e-10. Partial sum plus
/// integral tail correction: sum_{l<=M} l^-s + M^(1-s)/(s-1) + M^-s/2 with M
/// picked from the tolerance.
double riemann_zeta(double s);

}  // namespace mlmc

#endif  // MLMC_BOUNDS_HPP
