#pragma once

#include <string>
#include <vector>

#include "oracle/oracle.hpp"
#include "rigiditykit/expr.hpp"
#include "rigiditykit/mpoly.hpp"
#include "rigiditykit/random.hpp"
#include "rigiditykit/upoly.hpp"

namespace testsupport {

using namespace rigiditykit;

inline UPoly P(const std::string& text) { return parse_upoly(text); }
inline MPoly M(const std::string& text) { return parse_poly(text); }

inline oracle::Coeffs to_coeffs(const UPoly& p) {
  oracle::Coeffs out;
  for (const auto& c : p.coefficients()) out.push_back(c.value());
  return out;
}

inline UPoly from_coeffs(const oracle::Coeffs& c) {
  std::vector<Rat> v;
  for (const auto& x : c) v.emplace_back(x);
  return UPoly(std::move(v));
}

inline Rat random_rat(Rng& rng, std::int64_t bound) {
  const std::int64_t num = uniform_int(rng, -bound, bound);
  const std::int64_t den = uniform_int(rng, 1, 4);
  return Rat(num, den);
}

/// Random sparse polynomial over `vars`, mixing integer and fractional coefficients.
inline MPoly random_mpoly(Rng& rng, const std::vector<std::string>& vars, int max_terms, int max_exp,
                          std::int64_t bound = 9) {
  MPoly p;
  const auto terms = uniform_int(rng, 0, max_terms);
  for (std::int64_t t = 0; t < terms; ++t) {
    Monomial m;
    for (const auto& v : vars) {
      const auto e = uniform_int(rng, 0, max_exp);
      if (e > 0) m = m * Monomial::variable(v, static_cast<std::uint32_t>(e));
    }
    p += MPoly::term(random_rat(rng, bound), m);
  }
  return p;
}

/// Nonconstant polynomial that is the product of linear factors with small
/// integer roots, together with its distinct root count.
inline oracle::KnownRoots random_known_roots(Rng& rng, int max_factors) {
  std::vector<std::pair<long, unsigned>> roots;
  const auto k = uniform_int(rng, 1, max_factors);
  for (std::int64_t i = 0; i < k; ++i) {
    roots.emplace_back(static_cast<long>(uniform_int(rng, -6, 6)), static_cast<unsigned>(uniform_int(rng, 1, 3)));
  }
  long lead = static_cast<long>(uniform_int(rng, -5, 4));
  if (lead >= 0) ++lead;
  return oracle::from_roots(lead, roots);
}

}  // namespace testsupport
