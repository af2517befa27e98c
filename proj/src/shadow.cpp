#include "rigiditykit/shadow.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "rigiditykit/bounds.hpp"
#include "rigiditykit/error.hpp"

namespace rigiditykit {

std::string_view to_string(ShadowVerdict v) {
  switch (v) {
    case ShadowVerdict::ConstancyForced: return "ConstancyForced";
    case ShadowVerdict::ConsistentAllConstant: return "ConsistentAllConstant";
    case ShadowVerdict::HypothesisFailed: return "HypothesisFailed";
    case ShadowVerdict::TheoremViolation: return "TheoremViolation";
  }
  return "?";
}

std::string_view to_string(ShadowHypothesis h) {
  switch (h) {
    case ShadowHypothesis::NotZeroSum: return "NotZeroSum";
    case ShadowHypothesis::ExponentSum: return "ExponentSum";
    case ShadowHypothesis::NotCoprime: return "NotCoprime";
    case ShadowHypothesis::SubsetNotCoprime: return "SubsetNotCoprime";
  }
  return "?";
}

UPoly TermDecomp::expand() const {
  UPoly out = UPoly::constant(coefficient);
  for (const auto& f : factors) out = out * f.base.pow(f.exponent);
  return out;
}

bool TermDecomp::all_bases_constant() const {
  return std::all_of(factors.begin(), factors.end(), [](const TermFactor& f) { return f.base.is_constant(); });
}

Rat exponent_sum(std::span<const TermDecomp> terms) {
  if (terms.empty()) throw Error(ErrorCode::InvalidTerm, "exponent sum of an empty term list");
  Rat sum;
  for (const auto& t : terms) {
    for (const auto& f : t.factors) {
      if (f.exponent == 0) throw Error(ErrorCode::InvalidTerm, "exponent must be positive");
      sum += Rat(1, f.exponent);
    }
  }
  return sum;
}

namespace {

void validate_terms(std::span<const TermDecomp> terms) {
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const auto& t = terms[i];
    const std::string where = "term " + std::to_string(i);
    if (t.coefficient.is_zero()) throw Error(ErrorCode::InvalidTerm, where + " has a zero coefficient");
    if (t.factors.empty()) throw Error(ErrorCode::InvalidTerm, where + " has no factors");
    for (const auto& f : t.factors) {
      if (f.base.is_zero()) throw Error(ErrorCode::InvalidTerm, where + " has a zero base");
      if (f.exponent == 0) throw Error(ErrorCode::InvalidTerm, where + " has a zero exponent");
    }
  }
}

// An adjoined constant term contributes nothing to the root or degree sums,
// so only the multiplier differs between the two modes.
ProofChain evaluate_chain(std::span<const TermDecomp> terms, std::span<const UPoly> expanded,
                          std::int64_t multiplier, const Rat& exp_sum, const Rat& threshold) {
  ProofChain c;
  c.multiplier = multiplier;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    c.max_term_degree = std::max(c.max_term_degree, expanded[i].degree().value());
    c.sum_root_counts_terms += distinct_root_count(expanded[i]);
    for (const auto& f : terms[i].factors) {
      c.sum_root_counts_bases += distinct_root_count(f.base);
      c.sum_base_degrees += f.base.size_degree();
    }
  }
  c.degree_times_exponent_sum = Rat(c.max_term_degree) * exp_sum;
  c.gms_bound = multiplier * (static_cast<std::int64_t>(c.sum_root_counts_terms) - 1);
  c.gms_step_holds = c.max_term_degree <= c.gms_bound;
  c.final_product = Rat(c.max_term_degree) * (threshold - exp_sum);

  // These steps hold for every input; a failure is a bug, not a verdict.
  const bool universal = c.sum_root_counts_terms <= c.sum_root_counts_bases &&
                         c.sum_root_counts_bases <= c.sum_base_degrees &&
                         Rat(static_cast<std::int64_t>(c.sum_base_degrees)) <= c.degree_times_exponent_sum;
  if (!universal) throw std::logic_error("degree chain broke on a step that holds unconditionally");
  return c;
}

std::vector<UPoly> expand_all(std::span<const TermDecomp> terms) {
  std::vector<UPoly> out;
  out.reserve(terms.size());
  for (const auto& t : terms) out.push_back(t.expand());
  return out;
}

bool any_nonconstant(std::span<const TermDecomp> terms) {
  return std::any_of(terms.begin(), terms.end(), [](const TermDecomp& t) { return !t.all_bases_constant(); });
}

void decide(ShadowReport& r, bool sum_ok, ShadowHypothesis coprime_tag, bool coprime_ok) {
  if (!sum_ok) {
    r.failed_hypothesis = ShadowHypothesis::NotZeroSum;
  } else if (r.exponent_sum > r.threshold) {
    r.failed_hypothesis = ShadowHypothesis::ExponentSum;
  } else if (!coprime_ok) {
    r.failed_hypothesis = coprime_tag;
    // Exponent criterion and sum hold, so coprimality can only fail when some
    // base moves; the chain shows it had to.
    if (r.some_base_nonconstant) {
      r.verdict = ShadowVerdict::ConstancyForced;
      return;
    }
  }
  if (r.failed_hypothesis) {
    r.verdict = ShadowVerdict::HypothesisFailed;
  } else {
    r.verdict = r.some_base_nonconstant ? ShadowVerdict::TheoremViolation : ShadowVerdict::ConsistentAllConstant;
  }
}

}  // namespace

ShadowReport shadow_sum_zero(std::span<const TermDecomp> terms) {
  if (terms.size() < 3) throw Error(ErrorCode::TooFewTerms, "sum-zero shadow needs at least 3 terms");
  validate_terms(terms);
  const auto m = static_cast<std::int64_t>(terms.size());

  ShadowReport r;
  r.exponent_sum = exponent_sum(terms);
  r.threshold = Rat(1, m - 2);
  r.some_base_nonconstant = any_nonconstant(terms);

  const auto expanded = expand_all(terms);
  UPoly total;
  for (const auto& f : expanded) total += f;
  const bool coprime = pairwise_coprime(expanded).coprime;
  r.chain = evaluate_chain(terms, expanded, m - 2, r.exponent_sum, r.threshold);
  decide(r, total.is_zero(), ShadowHypothesis::NotCoprime, coprime);
  return r;
}

ShadowReport shadow_sum_const(std::span<const TermDecomp> terms) {
  if (terms.size() < 2) throw Error(ErrorCode::TooFewTerms, "sum-constant shadow needs at least 2 terms");
  validate_terms(terms);
  const auto m = static_cast<std::int64_t>(terms.size());

  const auto expanded = expand_all(terms);
  UPoly total;
  for (const auto& f : expanded) total += f;
  if (total.is_zero() || !total.is_constant()) {
    throw Error(ErrorCode::SumNotNonzeroConstant, "expanded terms must sum to a nonzero constant");
  }

  ShadowReport r;
  r.exponent_sum = exponent_sum(terms);
  r.threshold = Rat(1, m - 1);
  r.some_base_nonconstant = any_nonconstant(terms);

  bool subsets_ok = true;
  for (const auto& subset : detail::enumerate_zero_sum_subsets(expanded)) {
    std::vector<UPoly> members;
    for (std::size_t i : subset) members.push_back(expanded[i]);
    if (!pairwise_coprime(members).coprime) {
      subsets_ok = false;
      break;
    }
  }
  r.chain = evaluate_chain(terms, expanded, m - 1, r.exponent_sum, r.threshold);
  decide(r, true, ShadowHypothesis::SubsetNotCoprime, subsets_ok);
  return r;
}

}  // namespace rigiditykit
