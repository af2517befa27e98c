#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "rigiditykit/json_io.hpp"
#include "rigiditykit/shadow.hpp"

namespace rigiditykit {

/// Default cap on enumerated instances; RIGIDITYKIT_BUDGET overrides it.
inline constexpr std::uint64_t kDefaultSearchBudget = 10'000'000;

/// Instances are sums b_1^k_1 + ... + b_m^k_m = 0 with unit term
/// coefficients, bases ranging over every nonzero polynomial of degree
/// <= deg_cap with coefficients in coeff_set, and exponent tuples from
/// exponent_set with sum 1/k_i <= 1/(m-2).
struct SearchSpace {
  std::size_t m = 3;
  std::uint32_t deg_cap = 2;
  std::vector<std::int64_t> coeff_set;
  std::vector<std::uint32_t> exponent_set;

  std::string describe() const;
};

struct SearchWitness {
  std::vector<TermDecomp> terms;
  ShadowVerdict verdict = ShadowVerdict::HypothesisFailed;
};

struct SearchReport {
  std::string space_description;
  std::uint64_t base_count = 0;
  std::uint64_t exponent_tuples = 0;
  /// Tuples (b_1, k_1, ..., b_{m-1}, k_{m-1}, k_m) visited; each one stands
  /// for every choice of b_m.
  std::uint64_t instances_enumerated = 0;
  /// Zero-sum instances found and passed to the shadow engine.
  std::uint64_t zero_sum_instances = 0;
  std::map<std::string, std::uint64_t> verdict_counts;
  std::uint64_t counterexamples = 0;
  /// ConstancyForced instances (some base nonconstant), first kMaxWitnesses.
  std::vector<SearchWitness> witnesses;
  std::vector<SearchWitness> counterexample_witnesses;

  static constexpr std::size_t kMaxWitnesses = 16;
};

/// RIGIDITYKIT_BUDGET when set to a positive integer, else kDefaultSearchBudget.
std::uint64_t search_budget();

/// Only zero-sum instances can satisfy the hypotheses, so for each choice of
/// the first m - 1 terms and k_m the last base is looked up among the
/// k_m-th roots of -(b_1^k_1 + ... + b_{m-1}^k_{m-1}) in the base space.
/// Throws SearchBudgetExceeded when instances_enumerated would exceed the
/// budget and TooFewTerms for m < 3.
SearchReport exhaustive_shadow_search(const SearchSpace& space, std::uint64_t budget = search_budget());

Json to_json(const SearchReport& report);

}  // namespace rigiditykit
