#pragma once

#include <map>
#include <optional>
#include <set>
#include <vector>

#include "rigiditykit/certificate.hpp"
#include "rigiditykit/mpoly.hpp"
#include "rigiditykit/mterm.hpp"

namespace rigiditykit {

/// Rigidity of K[vars]/(F) for a variable-disjoint m-term form F.
///
/// The exponent criterion sum 1/k <= 1/(m-2) is checked exactly. Pairwise
/// relative primeness of the monomials in the quotient is structural: the
/// variables are distinct generators of a polynomial ring. Primality of F is
/// never decided; `assume_prime` records it as asserted, and without it the
/// verdict is at most Inconclusive.
///
/// `ring` lists the generators of the ambient polynomial ring; it defaults to
/// the variables of the form and only affects the ML/SML fields.
Certificate certify_rigidity(const MTermForm& form, bool assume_prime,
                             const std::optional<std::set<VarName>>& ring = std::nullopt);

struct MlContainment {
  std::vector<VarName> generators;
  bool sml_all = false;
};

/// Generators certified to lie in ML(B) when the exponent criterion holds.
/// Throws NotApplicable otherwise.
MlContainment ml_containment(const MTermForm& form, const std::optional<std::set<VarName>>& ring = std::nullopt);

/// Looks for a split B = A[y] with A rigid, after an optional invertible affine
/// change of variables given as old variable -> image in the new variables.
///
/// `ring` lists the generators before substitution (defaults to the variables
/// of F). Throws BadSubstitution when the substitution is not affine or not
/// invertible.
Certificate detect_semirigid(const MPoly& f, const std::optional<std::map<VarName, MPoly>>& subst,
                             bool assume_prime, const std::optional<std::set<VarName>>& ring = std::nullopt);

}  // namespace rigiditykit
