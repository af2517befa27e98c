#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "rigiditykit/rat.hpp"
#include "rigiditykit/upoly.hpp"

namespace rigiditykit {

/// Identifier matching [A-Za-z][A-Za-z0-9_]*. Distinct names are independent variables.
using VarName = std::string;

bool is_valid_var_name(std::string_view name);

/// Power product with strictly positive exponents, sorted by variable name.
class Monomial {
 public:
  using Factor = std::pair<VarName, std::uint32_t>;

  Monomial() = default;
  static Monomial variable(const VarName& name, std::uint32_t exponent = 1);

  bool is_one() const noexcept { return factors_.empty(); }
  const std::vector<Factor>& factors() const noexcept { return factors_; }
  std::uint64_t total_degree() const noexcept;
  std::uint32_t exponent(std::string_view name) const;

  /// Throws ExponentOverflow when an exponent leaves 32 bits.
  friend Monomial operator*(const Monomial& a, const Monomial& b);
  Monomial pow(std::uint32_t k) const;

  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  std::vector<Factor> factors_;
};

/// Graded lexicographic order, larger first: higher total degree wins, ties
/// go to the monomial with the larger exponent on the alphabetically first
/// variable where the two differ.
struct GrlexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

/// Sparse polynomial over the rationals. No zero coefficients are stored and
/// iteration follows GrlexGreater.
class MPoly {
 public:
  using TermMap = std::map<Monomial, Rat, GrlexGreater>;

  MPoly() = default;
  static MPoly constant(const Rat& c);
  static MPoly variable(const VarName& name);
  static MPoly term(const Rat& c, Monomial m);

  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept;
  std::size_t size() const noexcept { return terms_.size(); }
  const TermMap& terms() const noexcept { return terms_; }
  std::uint64_t total_degree() const noexcept;
  std::set<VarName> vars() const;
  /// Coefficient of m (zero when absent).
  Rat coeff(const Monomial& m) const;

  MPoly& operator+=(const MPoly& o);
  MPoly& operator-=(const MPoly& o);
  MPoly& operator*=(const Rat& c);
  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  friend MPoly operator*(MPoly a, const Rat& c) { return a *= c; }
  friend MPoly operator*(const Rat& c, MPoly a) { return a *= c; }
  friend MPoly operator*(const MPoly& a, const MPoly& b);
  MPoly operator-() const;
  MPoly pow(std::uint32_t k) const;

  friend bool operator==(const MPoly& a, const MPoly& b) { return a.terms_ == b.terms_; }

 private:
  void add_term(const Monomial& m, const Rat& c);
  TermMap terms_;
};

/// Variables occurring with positive exponent in some term.
std::set<VarName> mpoly_vars(const MPoly& p);

/// Simultaneous substitution; variables missing from the map stay fixed.
MPoly substitute(const MPoly& p, const std::map<VarName, MPoly>& subst);

/// View p as a polynomial in `var`. Throws NotUnivariate if another variable occurs.
UPoly to_upoly(const MPoly& p, std::string_view var);
MPoly from_upoly(const UPoly& p, const VarName& var);

/// The single variable of p, or nullopt when p is constant. Throws
/// NotUnivariate when p has two or more variables.
std::optional<VarName> univariate_variable(const MPoly& p);

}  // namespace rigiditykit
