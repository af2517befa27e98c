#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "rigiditykit/certificate.hpp"
#include "rigiditykit/mpoly.hpp"
#include "rigiditykit/rat.hpp"

namespace rigiditykit {

/// Input of a trinomial variety: vectors a_i = (b_i, c_i) for i = 0..r, block
/// sizes n_i and exponent rows l_i. Block i owns variables T_i1..T_in_i.
struct TrinomialData {
  std::vector<std::pair<Rat, Rat>> a;
  std::vector<std::uint32_t> n;
  std::vector<std::vector<std::uint32_t>> l;
  /// Optional variable names per block; defaults to T<i><j> (T<i>_<j> when an
  /// index reaches 10).
  std::vector<std::vector<VarName>> names;

  std::size_t r() const noexcept { return a.empty() ? 0 : a.size() - 1; }
  std::vector<std::vector<VarName>> variable_names() const;
};

/// det(a_i, a_j) = b_i c_j - b_j c_i.
Rat alpha(const TrinomialData& data, std::size_t i, std::size_t j);

/// Throws InvalidData on inconsistent shapes and DegenerateData when some
/// pair a_i, a_k is linearly dependent.
void validate(const TrinomialData& data);

/// g_{i,i+1,i+2} = alpha_{i+1,i+2} T_i^l_i + alpha_{i+2,i} T_{i+1}^l_{i+1} + alpha_{i,i+1} T_{i+2}^l_{i+2}
/// for 0 <= i <= r - 2.
std::vector<MPoly> build_trinomial_relations(const TrinomialData& data);

/// Each relation must satisfy sum 1/l <= 1 over its three monomials. The
/// factorially graded structure that supplies relative primeness is taken
/// as asserted through `assume_graded_factorial`.
Certificate certify_trinomial_variety(const TrinomialData& data, bool assume_graded_factorial);

}  // namespace rigiditykit
