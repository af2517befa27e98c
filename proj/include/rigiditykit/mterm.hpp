#pragma once

#include <cstdint>
#include <vector>

#include "rigiditykit/mpoly.hpp"
#include "rigiditykit/rat.hpp"

namespace rigiditykit {

struct MTermFactor {
  VarName variable;
  std::uint32_t exponent = 1;
};

struct MTerm {
  Rat coefficient{1};
  std::vector<MTermFactor> factors;
};

/// Sum of m >= 3 monomials in which every variable occurs in exactly one
/// monomial. Terms are ordered by their alphabetically first variable.
struct MTermForm {
  std::vector<MTerm> terms;

  std::size_t m() const noexcept { return terms.size(); }
  MPoly expand() const;
  std::vector<VarName> variables() const;
};

/// Throws TooFewTerms (fewer than 3 monomials), ConstantTerm (a monomial
/// without variables) or SharedVariable (detail names the variable).
MTermForm validate_mterm(const MPoly& f);

/// Sum of 1/k over every factor of every term.
Rat exponent_sum(const MTermForm& form);

}  // namespace rigiditykit
