#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rigiditykit/mpoly.hpp"
#include "rigiditykit/rat.hpp"

namespace rigiditykit {

enum class Verdict { Rigid, SemiRigid, Inconclusive };
std::string_view to_string(Verdict v);

struct CheckResult {
  std::string name;
  bool passed = false;
};

struct ExponentSumEntry {
  Rat sum;
  Rat threshold;
};

/// gcd of each exponent row and whether those gcds are pairwise coprime
/// (the factoriality criterion for trinomial varieties). Informational only.
struct FactorialityReport {
  std::vector<std::uint64_t> d;
  bool pairwise_coprime = false;
};

/// Rigid core plus the polynomial-ring variables it does not use.
struct SemiRigidSplit {
  MPoly core;
  std::vector<VarName> core_variables;
  std::vector<VarName> free_variables;
};

struct Certificate {
  Verdict verdict = Verdict::Inconclusive;
  std::vector<CheckResult> checked;
  /// Hypotheses that were not computed, with their status in parentheses.
  std::vector<std::string> assumptions;
  std::vector<ExponentSumEntry> exponent_sums;
  /// Generators certified to lie in the Makar-Limanov invariant.
  std::vector<VarName> ml_generators;
  /// True when every generator of the ring is certified, i.e. SML(X) = K[X].
  bool sml_all = false;
  std::string notes;
  std::optional<FactorialityReport> factoriality;
  std::optional<SemiRigidSplit> split;

  bool all_checks_passed() const;
};

}  // namespace rigiditykit
