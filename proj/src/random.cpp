#include "rigiditykit/random.hpp"

#include <limits>
#include <vector>

#include "rigiditykit/error.hpp"

namespace rigiditykit {

std::uint64_t mix64(std::uint64_t x) noexcept {
  x ^= x >> 30;
  x *= 0xBF58476D1CE4E5B9ULL;
  x ^= x >> 27;
  x *= 0x94D049BB133111EBULL;
  x ^= x >> 31;
  return x;
}

std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t i) noexcept {
  return mix64(mix64(seed) + (i + 1) * 0x9E3779B97F4A7C15ULL);
}

std::int64_t uniform_int(Rng& rng, std::int64_t lo, std::int64_t hi) {
  if (lo > hi) throw Error(ErrorCode::InvalidArgument, "empty range");
  const std::uint64_t span = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo);
  if (span == std::numeric_limits<std::uint64_t>::max()) return static_cast<std::int64_t>(rng());
  const std::uint64_t n = span + 1;
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % n;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return static_cast<std::int64_t>(static_cast<std::uint64_t>(lo) + x % n);
}

UPoly gen_random_upoly(Rng& rng, std::uint32_t max_deg, std::int64_t coeff_bound) {
  if (coeff_bound < 1) throw Error(ErrorCode::InvalidArgument, "coeff_bound must be >= 1");
  const auto d = static_cast<std::size_t>(uniform_int(rng, 0, max_deg));
  std::vector<Rat> c(d + 1);
  std::int64_t lead = uniform_int(rng, -coeff_bound, coeff_bound - 1);
  if (lead >= 0) ++lead;
  c[d] = Rat(lead);
  for (std::size_t i = 0; i < d; ++i) c[i] = Rat(uniform_int(rng, -coeff_bound, coeff_bound));
  return UPoly(std::move(c));
}

}  // namespace rigiditykit
