#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "rigiditykit/upoly.hpp"

namespace rigiditykit {

/// Zero-sum-subset enumeration is exponential in the number of terms.
inline constexpr std::size_t kSubsetCap = 20;

using IndexSet = std::vector<std::size_t>;

enum class MsHypothesis { ZeroEntry, NotZeroSum, NotCoprime, AllConstant };
std::string_view to_string(MsHypothesis h);

/// Outcome of checking a + b + c = 0 against max deg <= N(abc) - 1.
struct MsReport {
  bool hypotheses_ok = false;
  std::optional<MsHypothesis> failed_hypothesis;
  /// Informational; the verdict uses the set gcd of {a, b, c}.
  bool pairwise_coprime = false;
  std::int64_t max_degree = -1;
  std::int64_t bound = -1;
  bool holds = false;
  bool tight = false;
};

/// Never throws on mathematical input; failed hypotheses are reported.
MsReport check_ms_triple(const UPoly& a, const UPoly& b, const UPoly& c);

/// All index subsets of size >= 2 whose members sum to zero, ordered by size
/// and then lexicographically. Requires 3 <= fs.size() <= kSubsetCap.
std::vector<IndexSet> zero_sum_subsets(std::span<const UPoly> fs);

enum class GmsHypothesis { NotZeroSum, AllConstant, SubsetNotCoprime };
std::string_view to_string(GmsHypothesis h);

/// Outcome of checking f_1 + ... + f_n = 0 against
/// max deg <= (n - 2)(N(f_1) + ... + N(f_n) - 1).
struct GenMsReport {
  bool hypotheses_ok = false;
  std::optional<GmsHypothesis> failed_hypothesis;
  std::optional<IndexSet> violating_subset;
  std::int64_t max_degree = -1;
  std::int64_t bound = 0;
  bool holds = false;
  std::size_t n = 0;
  std::vector<std::size_t> root_counts;
};

/// Throws ZeroEntry, TooFewTerms (n < 3) or SubsetCapExceeded (n > kSubsetCap).
GenMsReport check_generalized_ms(std::span<const UPoly> fs);

namespace detail {
/// Zero-sum subsets of size >= 2 with only the cap enforced.
std::vector<IndexSet> enumerate_zero_sum_subsets(std::span<const UPoly> fs);
}  // namespace detail

}  // namespace rigiditykit
