#include <string>
#include <utility>
#include <vector>

#include "linear.hpp"
#include "rigiditykit/error.hpp"
#include "rigiditykit/expr.hpp"

namespace rigiditykit {

namespace detail {
std::vector<std::pair<VarName, MPoly>> parse_equations(std::string_view text);
}

std::map<VarName, MPoly> parse_subst(std::string_view text, const std::optional<std::set<VarName>>& declared) {
  std::map<VarName, MPoly> forward;  // new variable -> expression in old variables
  for (auto& [lhs, rhs] : detail::parse_equations(text)) {
    if (!forward.emplace(lhs, std::move(rhs)).second) {
      throw Error(ErrorCode::BadSubstitution, "variable " + lhs + " defined twice");
    }
  }
  if (forward.empty()) throw Error(ErrorCode::BadSubstitution, "empty substitution");

  if (declared) {
    for (const auto& [lhs, rhs] : forward) {
      for (const auto& v : rhs.vars()) {
        if (!declared->contains(v)) throw Error(ErrorCode::UnknownVariable, v);
      }
    }
  }

  const auto affine = detail::as_affine(forward);
  if (!affine) throw Error(ErrorCode::BadSubstitution, "substitution is not linear");
  if (affine->sources.size() != affine->targets.size()) {
    throw Error(ErrorCode::BadSubstitution, std::to_string(affine->sources.size()) + " equations in " +
                                                std::to_string(affine->targets.size()) + " variables");
  }
  const auto inv = detail::invert(affine->linear);
  if (!inv) throw Error(ErrorCode::BadSubstitution, "substitution is not invertible");

  // new = L*old + b  =>  old = L^{-1} (new - b)
  const std::size_t n = affine->sources.size();
  std::vector<MPoly> shifted;
  shifted.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    shifted.push_back(MPoly::variable(affine->sources[i]) - MPoly::constant(affine->offset[i]));
  }
  std::map<VarName, MPoly> out;
  for (std::size_t j = 0; j < n; ++j) {
    MPoly image;
    for (std::size_t i = 0; i < n; ++i) {
      if (!(*inv)[j][i].is_zero()) image += shifted[i] * (*inv)[j][i];
    }
    out.emplace(affine->targets[j], std::move(image));
  }
  return out;
}

}  // namespace rigiditykit
