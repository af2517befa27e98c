#pragma once

#include <cstdint>
#include <random>

#include "rigiditykit/upoly.hpp"

namespace rigiditykit {

using Rng = std::mt19937_64;

/// splitmix64 finalizer.
std::uint64_t mix64(std::uint64_t x) noexcept;

/// Seed of trial i for a run seeded with `seed`:
///   mix64(mix64(seed) + (i + 1) * 0x9E3779B97F4A7C15).
/// Trials depend only on (seed, i), so they may run in any order.
std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t i) noexcept;

/// Uniform integer in [lo, hi] by rejection on raw 64-bit draws; unlike
/// std::uniform_int_distribution the stream is identical on every platform.
std::int64_t uniform_int(Rng& rng, std::int64_t lo, std::int64_t hi);

/// Degree uniform in [0, max_deg]; coefficients of t^0..t^(d-1) uniform in
/// [-coeff_bound, coeff_bound]; the leading coefficient is drawn from the
/// same range without zero. Draw order: degree, leading, then ascending.
/// Throws InvalidArgument when coeff_bound < 1.
UPoly gen_random_upoly(Rng& rng, std::uint32_t max_deg, std::int64_t coeff_bound);

}  // namespace rigiditykit
