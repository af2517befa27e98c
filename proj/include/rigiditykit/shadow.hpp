#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "rigiditykit/rat.hpp"
#include "rigiditykit/upoly.hpp"

namespace rigiditykit {

struct TermFactor {
  UPoly base;
  std::uint32_t exponent = 1;
};

/// One term a * b_1^k_1 * ... * b_n^k_n with explicit univariate bases.
struct TermDecomp {
  Rat coefficient{1};
  std::vector<TermFactor> factors;

  UPoly expand() const;
  bool all_bases_constant() const;
};

/// Exact sum of 1/k over every factor of every term. Throws InvalidTerm on an
/// empty input or a zero exponent.
Rat exponent_sum(std::span<const TermDecomp> terms);

enum class ShadowVerdict { ConstancyForced, ConsistentAllConstant, HypothesisFailed, TheoremViolation };
std::string_view to_string(ShadowVerdict v);

enum class ShadowHypothesis { NotZeroSum, ExponentSum, NotCoprime, SubsetNotCoprime };
std::string_view to_string(ShadowHypothesis h);

/// Quantities of the degree argument that rules out nonconstant bases.
/// With D the largest term degree, S the exponent sum and c = m - 2 (sum-zero)
/// or m - 1 (sum-constant), the argument reads
///   D <= c (sum N(f_i) - 1) <= c (sum N(b_ij) - 1) <= c (sum deg b_ij - 1) <= c (D S - 1),
/// hence D (1/c - S) <= -1. Only the first step needs the coprimality hypotheses.
struct ProofChain {
  std::int64_t max_term_degree = 0;
  std::size_t sum_root_counts_terms = 0;
  std::size_t sum_root_counts_bases = 0;
  std::size_t sum_base_degrees = 0;
  Rat degree_times_exponent_sum;
  std::int64_t multiplier = 1;
  std::int64_t gms_bound = 0;
  bool gms_step_holds = false;
  /// D * (threshold - S).
  Rat final_product;
};

struct ShadowReport {
  ShadowVerdict verdict = ShadowVerdict::HypothesisFailed;
  std::optional<ShadowHypothesis> failed_hypothesis;
  Rat exponent_sum;
  Rat threshold;
  bool some_base_nonconstant = false;
  ProofChain chain;
};

/// Terms summing to zero, threshold 1/(m-2). Throws TooFewTerms for m < 3
/// and InvalidTerm for malformed terms.
ShadowReport shadow_sum_zero(std::span<const TermDecomp> terms);

/// Terms summing to a nonzero constant, threshold 1/(m-1); the negated sum is
/// adjoined as a constant extra term in the chain. Throws TooFewTerms for
/// m < 2 and SumNotNonzeroConstant when the expanded sum is zero or not constant.
ShadowReport shadow_sum_const(std::span<const TermDecomp> terms);

}  // namespace rigiditykit
