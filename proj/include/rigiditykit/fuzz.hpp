#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rigiditykit/json_io.hpp"
#include "rigiditykit/upoly.hpp"

namespace rigiditykit {

/// A checked family with its degree and bound; gap = bound - max_degree.
struct FuzzInstance {
  std::uint64_t trial = 0;
  std::vector<UPoly> polys;
  std::int64_t max_degree = 0;
  std::int64_t bound = 0;
  std::int64_t gap() const noexcept { return bound - max_degree; }
};

struct FuzzReport {
  std::string theorem;  // "ms" or "gms"
  std::size_t n = 3;
  std::uint64_t trials = 0;
  std::uint64_t hypothesis_rejections = 0;
  std::uint64_t checked = 0;
  std::uint64_t violations = 0;
  /// Checked families with gap <= kNearTightGap, first kMaxLogged of them.
  std::vector<FuzzInstance> tight_instances;
  std::uint64_t tight_count = 0;       // gap == 0
  std::uint64_t near_tight_count = 0;  // gap <= kNearTightGap
  std::vector<FuzzInstance> violation_witnesses;
  std::uint64_t seed = 0;
  std::uint32_t max_deg = 0;
  std::int64_t coeff_bound = 1;
  double elapsed_seconds = 0;

  static constexpr std::int64_t kNearTightGap = 2;
  static constexpr std::size_t kMaxLogged = 16;
};

/// Trial i draws a, b from trial_seed(seed, i), sets c = -a - b and checks
/// the triple. Draws with a zero entry or a failed hypothesis are counted as
/// rejections.
FuzzReport fuzz_ms(std::uint64_t trials, std::uint64_t seed, std::uint32_t max_deg, std::int64_t coeff_bound);

/// Trial i draws f_1..f_{n-1} and sets f_n = -(f_1 + ... + f_{n-1}).
/// Throws TooFewTerms for n < 3 and SubsetCapExceeded for n > kSubsetCap.
FuzzReport fuzz_gms(std::size_t n, std::uint64_t trials, std::uint64_t seed, std::uint32_t max_deg,
                    std::int64_t coeff_bound);

/// Elapsed time is left out unless requested so reruns compare byte for byte.
Json to_json(const FuzzReport& report, bool with_timing = false);

}  // namespace rigiditykit
