#include "rigiditykit/mterm.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "rigiditykit/error.hpp"

namespace rigiditykit {

MPoly MTermForm::expand() const {
  MPoly out;
  for (const auto& t : terms) {
    Monomial m;
    for (const auto& f : t.factors) m = m * Monomial::variable(f.variable, f.exponent);
    out += MPoly::term(t.coefficient, std::move(m));
  }
  return out;
}

std::vector<VarName> MTermForm::variables() const {
  std::vector<VarName> out;
  for (const auto& t : terms) {
    for (const auto& f : t.factors) out.push_back(f.variable);
  }
  return out;
}

MTermForm validate_mterm(const MPoly& f) {
  if (f.is_zero()) throw Error(ErrorCode::InvalidArgument, "the zero polynomial is not an m-term form");
  if (f.size() < 3) {
    throw Error(ErrorCode::TooFewTerms, "an m-term form needs at least 3 monomials, got " + std::to_string(f.size()));
  }
  std::map<VarName, std::size_t> owner;
  MTermForm form;
  for (const auto& [mono, c] : f.terms()) {
    if (mono.is_one()) throw Error(ErrorCode::ConstantTerm, "constant monomial " + c.str());
    MTerm term{c, {}};
    for (const auto& [v, e] : mono.factors()) {
      if (!owner.emplace(v, form.terms.size()).second) throw Error(ErrorCode::SharedVariable, v);
      term.factors.push_back({v, e});
    }
    form.terms.push_back(std::move(term));
  }
  std::sort(form.terms.begin(), form.terms.end(),
            [](const MTerm& a, const MTerm& b) { return a.factors.front().variable < b.factors.front().variable; });
  return form;
}

Rat exponent_sum(const MTermForm& form) {
  Rat sum;
  for (const auto& t : form.terms) {
    for (const auto& f : t.factors) sum += Rat(1, f.exponent);
  }
  return sum;
}

}  // namespace rigiditykit
