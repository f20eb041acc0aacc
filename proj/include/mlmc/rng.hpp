// Deterministic, hierarchically keyed Gaussian randomness.
//
// Every random quantity in the library is a pure function of a SeedSpec:
// (master seed, replicate, level, sample, role) -> stream. Streams derived
// from distinct specs are statistically independent; the same spec always
// reproduces the same variates bit for bit within one build.
//
// Brownian increment matrices are generated on the finest time grid and the
// largest mode count a study needs, then coarsened in time and truncated in
// modes, so that all discretization levels and the exact solutions share one
// underlying Wiener path per sample.

#ifndef MLMC_RNG_HPP
#define MLMC_RNG_HPP

#include <cstdint>
#include <cstddef>
#include <vector>

namespace mlmc {

/// Which logical consumer a stream feeds. Distinct roles never share variates.
enum class StreamRole : std::uint64_t {
    PathNoise = 0,  // driving noise of the simulated paths
    Pilot = 1,      // pilot runs for variance/bias estimation
    Reference = 2,  // independent reference expectations
};

/// Hierarchical key of a random stream.
struct SeedSpec {
    std::uint64_t master_seed = 0;
    std::uint64_t replicate = 0;
    std::uint64_t level = 0;
    std::uint64_t sample = 0;
    StreamRole role = StreamRole::PathNoise;
};

/// Stream of i.i.d. standard normal variates keyed by a SeedSpec.
///
/// Core generator is xoshiro256++ seeded through a splitmix64 chain over the
/// avalanche-mixed key fields. The normal transform is Box-Muller on 53-bit
/// uniforms; it is implemented here rather than via std::normal_distribution
/// because the standard leaves that algorithm unspecified and reproducibility
/// is part of the contract.
class SampleStream {
public:
    explicit SampleStream(const SeedSpec& spec);

    /// Next N(0,1) variate.
    double normal();

    /// Next N(0, stddev^2) variate.
    double normal(double stddev) { return stddev * normal(); }

    /// Next uniform in [0,1) with 53-bit resolution.
    double uniform01();

    /// Next raw 64-bit word.
    std::uint64_t next_u64();

private:
    std::uint64_t state_[4];
    double spare_ = 0.0;
    bool has_spare_ = false;
};

inline SampleStream derive_stream(const SeedSpec& spec) { return SampleStream(spec); }

/// Increments of `modes` independent scalar Wiener processes on a uniform
/// grid with `steps` steps of size dt. Entry (s, j) = beta_j(t_{s+1}) - beta_j(t_s),
/// distributed N(0, dt). Row-major storage, fill order row by row.
struct BrownianIncrements {
    double dt = 0.0;
    std::size_t steps = 0;
    std::size_t modes = 0;
    std::vector<double> values;  // steps x modes, row-major

    double& at(std::size_t step, std::size_t mode) { return values[step * modes + mode]; }
    double at(std::size_t step, std::size_t mode) const { return values[step * modes + mode]; }
};

/// Draw a steps x modes matrix of independent N(0, dt) increments.
/// Rejects dt <= 0, steps == 0, modes == 0.
BrownianIncrements sample_increments(SampleStream& stream, std::size_t steps,
                                     std::size_t modes, double dt);

/// Sum blocks of `factor` consecutive rows, producing the same paths on a grid
/// coarser by `factor`. `factor` must divide fine.steps.
///
/// Power-of-two factors are applied as successive pairwise halvings, which
/// makes composition exact: coarsen(x, f1*f2) == coarsen(coarsen(x, f1), f2)
/// bitwise whenever f1 and f2 are powers of two. An odd residual factor is a
/// single ascending-index block-sum pass.
BrownianIncrements coarsen(const BrownianIncrements& fine, std::size_t factor);

/// Keep the first `kappa` mode columns. Rejects kappa == 0 or kappa > modes.
BrownianIncrements truncate_modes(const BrownianIncrements& inc, std::size_t kappa);

/// Per-mode endpoint values beta_j(T), T = steps*dt. Defined as coarsening to
/// a single row, so endpoints are bitwise invariant under power-of-two
/// coarsening of the input.
std::vector<double> endpoint_sums(const BrownianIncrements& inc);

}  // namespace mlmc

#endif  // MLMC_RNG_HPP
