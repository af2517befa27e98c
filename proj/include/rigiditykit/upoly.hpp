#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "rigiditykit/rat.hpp"

namespace rigiditykit {

/// Polynomial degree with a distinguished -infinity for the zero polynomial.
/// The sentinel orders below every finite degree and absorbs addition.
class Degree {
 public:
  constexpr explicit Degree(std::int64_t value) : value_(value) {}
  static constexpr Degree neg_inf() { return Degree(kNegInf); }

  constexpr bool is_neg_inf() const { return value_ == kNegInf; }
  /// Finite value; -1 stands in for -infinity when a plain integer is needed.
  constexpr std::int64_t value_or_minus_one() const { return is_neg_inf() ? -1 : value_; }
  std::int64_t value() const;

  friend constexpr auto operator<=>(Degree, Degree) = default;
  friend constexpr Degree operator+(Degree a, Degree b) {
    return (a.is_neg_inf() || b.is_neg_inf()) ? neg_inf() : Degree(a.value_ + b.value_);
  }

 private:
  static constexpr std::int64_t kNegInf = std::numeric_limits<std::int64_t>::min();
  std::int64_t value_;
};

/// Dense univariate polynomial over the rationals; coefficient i multiplies t^i.
/// Canonical: no trailing zeros, the zero polynomial has no coefficients.
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(std::vector<Rat> coeffs);
  UPoly(std::initializer_list<Rat> coeffs);

  static UPoly constant(const Rat& c);
  static UPoly monomial(const Rat& c, std::size_t degree);
  /// The polynomial t.
  static UPoly t();

  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// True for the zero polynomial and nonzero constants.
  bool is_constant() const noexcept { return coeffs_.size() <= 1; }
  Degree degree() const;
  /// deg for nonzero polynomials, as a size; 0 for the zero polynomial.
  std::size_t size_degree() const noexcept { return coeffs_.empty() ? 0 : coeffs_.size() - 1; }

  std::span<const Rat> coefficients() const noexcept { return coeffs_; }
  Rat coeff(std::size_t i) const;
  const Rat& leading() const;

  UPoly monic() const;
  Rat eval(const Rat& x) const;
  UPoly pow(std::uint32_t k) const;

  UPoly& operator+=(const UPoly& o);
  UPoly& operator-=(const UPoly& o);
  UPoly& operator*=(const Rat& c);
  friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
  friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
  friend UPoly operator*(UPoly a, const Rat& c) { return a *= c; }
  friend UPoly operator*(const Rat& c, UPoly a) { return a *= c; }
  friend UPoly operator*(const UPoly& a, const UPoly& b);
  UPoly operator-() const;

  friend bool operator==(const UPoly&, const UPoly&) = default;

  std::size_t hash() const noexcept;

 private:
  void normalize();
  std::vector<Rat> coeffs_;
};

struct DivMod {
  UPoly quotient;
  UPoly remainder;
};

/// Euclidean division: a = q*b + r with deg r < deg b.
DivMod divmod(const UPoly& a, const UPoly& b);
bool divides(const UPoly& d, const UPoly& p);

UPoly derivative(const UPoly& p);

/// Monic gcd. Throws GcdOfZeros when both inputs are zero.
UPoly gcd(const UPoly& p, const UPoly& q);

/// Squarefree part p / gcd(p, p'), made monic. Throws RadicalOfZero.
UPoly radical(const UPoly& p);

/// Number of distinct roots over the algebraic closure, deg radical(p).
/// Throws RootCountOfZero.
std::size_t distinct_root_count(const UPoly& p);

struct CoprimeCheck {
  bool coprime = true;
  /// First offending index pair (i < j) and their monic gcd, when not coprime.
  std::optional<std::pair<std::size_t, std::size_t>> witness;
  UPoly witness_gcd;
};

/// Pairwise check on every pair. Throws ZeroEntry on a zero entry and
/// InvalidArgument for fewer than two entries.
CoprimeCheck pairwise_coprime(std::span<const UPoly> fs);

/// Monic gcd of the whole sequence. Throws GcdOfZeros when every entry is zero.
UPoly set_gcd(std::span<const UPoly> fs);

}  // namespace rigiditykit

template <>
struct std::hash<rigiditykit::UPoly> {
  std::size_t operator()(const rigiditykit::UPoly& p) const noexcept { return p.hash(); }
};
