#include "mlmc/bounds.hpp"

#include <cmath>
#include <stdexcept>

namespace mlmc {

namespace {

// Shared shape of all four bound pairs: the mean-square variance term S
// fixes the upper bound sqrt(S), the lower bound is -b + sqrt(b^2 + S),
// evaluated as S / (b + sqrt(b^2 + S)) to avoid cancellation for S << b^2.
BoundPair bounds_from_variance_term(double bias, double s) {
    BoundPair b;
    b.upper = std::sqrt(s);
    b.lower = s == 0.0 ? 0.0 : s / (bias + std::sqrt(bias * bias + s));
    return b;
}

void require_nonneg(double v, const char* what) {
    if (v < 0.0 || std::isnan(v)) throw std::invalid_argument(std::string(what) + " must be >= 0");
}

}  // namespace

double lln_rms(double variance, std::size_t n) {
    require_nonneg(variance, "lln_rms: variance");
    if (n == 0) throw std::invalid_argument("lln_rms: n must be >= 1");
    return std::sqrt(variance / static_cast<double>(n));
}

BoundPair type1_bounds(double bias, double var_yn, std::size_t n) {
    require_nonneg(bias, "type1_bounds: bias");
    require_nonneg(var_yn, "type1_bounds: variance");
    if (n == 0) throw std::invalid_argument("type1_bounds: n must be >= 1");
    return bounds_from_variance_term(bias, var_yn / static_cast<double>(n));
}

BoundPair type2_bounds(double bias, double var_diff, std::size_t n) {
    require_nonneg(bias, "type2_bounds: bias");
    require_nonneg(var_diff, "type2_bounds: variance");
    if (n == 0) throw std::invalid_argument("type2_bounds: n must be >= 1");
    return bounds_from_variance_term(bias, var_diff / static_cast<double>(n));
}

namespace {

double mlmc_variance_term(double var_level0, const std::vector<double>& level_vars,
                          const LevelSchedule& schedule) {
    if (schedule.counts.size() != level_vars.size() + 1)
        throw std::invalid_argument("mlmc bounds: schedule length must be levels + 1");
    for (std::size_t c : schedule.counts)
        if (c == 0) throw std::invalid_argument("mlmc bounds: zero sample count");

    double s = var_level0 / static_cast<double>(schedule.counts[0]);
    for (std::size_t l = 1; l < schedule.counts.size(); ++l) {
        require_nonneg(level_vars[l - 1], "mlmc bounds: level variance");
        s += level_vars[l - 1] / static_cast<double>(schedule.counts[l]);
    }
    return s;
}

}  // namespace

BoundPair mlmc_type1_bounds(double bias, double var_y0, const std::vector<double>& level_vars,
                            const LevelSchedule& schedule) {
    require_nonneg(bias, "mlmc_type1_bounds: bias");
    require_nonneg(var_y0, "mlmc_type1_bounds: var_y0");
    return bounds_from_variance_term(bias, mlmc_variance_term(var_y0, level_vars, schedule));
}

BoundPair mlmc_type2_bounds(double bias, double var_y_minus_y0,
                            const std::vector<double>& level_vars,
                            const LevelSchedule& schedule) {
    require_nonneg(bias, "mlmc_type2_bounds: bias");
    require_nonneg(var_y_minus_y0, "mlmc_type2_bounds: var");
    return bounds_from_variance_term(bias,
                                     mlmc_variance_term(var_y_minus_y0, level_vars, schedule));
}

std::pair<double, double> corollary_constants(double var_y0, double eps) {
    require_nonneg(var_y0, "corollary_constants: var_y0");
    if (!(eps > 0.0)) throw std::invalid_argument("corollary_constants: eps must be positive");
    const double c_low = std::sqrt((3.0 + var_y0) / 2.0) - 1.0;
    const double c_high = std::sqrt(var_y0 + riemann_zeta(1.0 + eps));
    return {c_low, c_high};
}

double riemann_zeta(double s) {
    if (!(s > 1.0)) throw std::invalid_argument("riemann_zeta: requires s > 1");

    // Truncation error of the corrected partial sum is about s * M^-(s+1) / 12;
    // zeta(s) > 1, so an absolute target of 1e-10 meets the relative target.
    constexpr double tol = 1e-10;
    const double m_real = std::pow(s / (12.0 * tol), 1.0 / (s + 1.0));
    const std::size_t m = static_cast<std::size_t>(std::ceil(std::max(16.0, m_real)));

    double sum = 0.0;
    for (std::size_t l = m; l >= 1; --l)  // ascending magnitude
        sum += std::pow(static_cast<double>(l), -s);
    const double md = static_cast<double>(m);
    sum += std::pow(md, 1.0 - s) / (s - 1.0) + 0.5 * std::pow(md, -s);
    return sum;
}

}  // namespace mlmc
