#include "mlmc/rng.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace mlmc {

namespace {

// splitmix64 finalizer; full avalanche on 64 bits.
constexpr std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;

// Sequential absorption with a full mix between fields, so that e.g.
// (replicate=1, level=0) and (replicate=0, level=1) land in unrelated states.
std::uint64_t absorb(std::uint64_t h, std::uint64_t v) {
    return mix64((h + kGolden) ^ v);
}

constexpr std::uint64_t rotl(std::uint64_t x, int k) {
    return (x << k) | (x >> (64 - k));
}

}  // namespace

SampleStream::SampleStream(const SeedSpec& spec) {
    std::uint64_t h = 0x8f462907740f09a5ULL;
    h = absorb(h, spec.master_seed);
    h = absorb(h, spec.replicate);
    h = absorb(h, spec.level);
    h = absorb(h, spec.sample);
    h = absorb(h, static_cast<std::uint64_t>(spec.role));
    // splitmix64 chain expands the key into the xoshiro256++ state.
    for (auto& s : state_) {
        h += kGolden;
        s = mix64(h);
    }
    state_[0] |= 1;  // the all-zero state is the one forbidden input
}

std::uint64_t SampleStream::next_u64() {
    const std::uint64_t result = rotl(state_[0] + state_[3], 23) + state_[0];
    const std::uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = rotl(state_[3], 45);
    return result;
}

double SampleStream::uniform01() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double SampleStream::normal() {
    if (has_spare_) {
        has_spare_ = false;
        return spare_;
    }
    // u1 in (0,1] keeps the log finite; u2 in [0,1).
    const double u1 = (static_cast<double>(next_u64() >> 11) + 1.0) * 0x1.0p-53;
    const double u2 = uniform01();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double theta = 2.0 * std::numbers::pi * u2;
    spare_ = r * std::sin(theta);
    has_spare_ = true;
    return r * std::cos(theta);
}

BrownianIncrements sample_increments(SampleStream& stream, std::size_t steps,
                                     std::size_t modes, double dt) {
    if (steps == 0) throw std::invalid_argument("sample_increments: steps must be >= 1");
    if (modes == 0) throw std::invalid_argument("sample_increments: modes must be >= 1");
    if (!(dt > 0.0)) throw std::invalid_argument("sample_increments: dt must be positive");

    BrownianIncrements inc;
    inc.dt = dt;
    inc.steps = steps;
    inc.modes = modes;
    inc.values.resize(steps * modes);
    const double sd = std::sqrt(dt);
    for (double& v : inc.values) v = sd * stream.normal();
    return inc;
}

namespace {

// One pairwise halving pass: row 2i + row 2i+1.
BrownianIncrements halve(const BrownianIncrements& inc) {
    BrownianIncrements out;
    out.dt = 2.0 * inc.dt;
    out.steps = inc.steps / 2;
    out.modes = inc.modes;
    out.values.resize(out.steps * out.modes);
    for (std::size_t s = 0; s < out.steps; ++s)
        for (std::size_t j = 0; j < inc.modes; ++j)
            out.at(s, j) = inc.at(2 * s, j) + inc.at(2 * s + 1, j);
    return out;
}

// Ascending-index block sums for an odd block size.
BrownianIncrements block_sum(const BrownianIncrements& inc, std::size_t factor) {
    BrownianIncrements out;
    out.dt = static_cast<double>(factor) * inc.dt;
    out.steps = inc.steps / factor;
    out.modes = inc.modes;
    out.values.resize(out.steps * out.modes);
    for (std::size_t s = 0; s < out.steps; ++s)
        for (std::size_t j = 0; j < inc.modes; ++j) {
            double acc = 0.0;
            for (std::size_t b = 0; b < factor; ++b) acc += inc.at(s * factor + b, j);
            out.at(s, j) = acc;
        }
    return out;
}

}  // namespace

BrownianIncrements coarsen(const BrownianIncrements& fine, std::size_t factor) {
    if (factor == 0 || fine.steps % factor != 0)
        throw std::invalid_argument("coarsen: factor must divide the step count");
    if (factor == 1) return fine;

    BrownianIncrements cur = fine;
    std::size_t f = factor;
    while (f % 2 == 0) {
        cur = halve(cur);
        f /= 2;
    }
    if (f > 1) cur = block_sum(cur, f);
    return cur;
}

BrownianIncrements truncate_modes(const BrownianIncrements& inc, std::size_t kappa) {
    if (kappa == 0 || kappa > inc.modes)
        throw std::invalid_argument("truncate_modes: need 1 <= kappa <= modes");
    if (kappa == inc.modes) return inc;

    BrownianIncrements out;
    out.dt = inc.dt;
    out.steps = inc.steps;
    out.modes = kappa;
    out.values.resize(out.steps * kappa);
    for (std::size_t s = 0; s < inc.steps; ++s)
        for (std::size_t j = 0; j < kappa; ++j) out.at(s, j) = inc.at(s, j);
    return out;
}

std::vector<double> endpoint_sums(const BrownianIncrements& inc) {
    return coarsen(inc, inc.steps).values;
}

}  // namespace mlmc
