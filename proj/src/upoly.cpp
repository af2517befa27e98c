#include "rigiditykit/upoly.hpp"

#include <algorithm>
#include <string>

#include "modular_gcd.hpp"
#include "rigiditykit/error.hpp"

namespace rigiditykit {

std::int64_t Degree::value() const {
  if (is_neg_inf()) throw Error(ErrorCode::InvalidArgument, "degree of the zero polynomial is -inf");
  return value_;
}

UPoly::UPoly(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

UPoly::UPoly(std::initializer_list<Rat> coeffs) : coeffs_(coeffs) { normalize(); }

UPoly UPoly::constant(const Rat& c) { return UPoly(std::vector<Rat>{c}); }

UPoly UPoly::monomial(const Rat& c, std::size_t degree) {
  std::vector<Rat> v(degree + 1);
  v[degree] = c;
  return UPoly(std::move(v));
}

UPoly UPoly::t() { return monomial(Rat(1), 1); }

void UPoly::normalize() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Degree UPoly::degree() const {
  if (coeffs_.empty()) return Degree::neg_inf();
  return Degree(static_cast<std::int64_t>(coeffs_.size() - 1));
}

Rat UPoly::coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rat(); }

const Rat& UPoly::leading() const {
  if (coeffs_.empty()) throw Error(ErrorCode::InvalidArgument, "leading coefficient of zero polynomial");
  return coeffs_.back();
}

UPoly UPoly::monic() const {
  if (is_zero()) return *this;
  return *this * leading().inverse();
}

Rat UPoly::eval(const Rat& x) const {
  Rat acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

UPoly UPoly::pow(std::uint32_t k) const {
  UPoly result = constant(Rat(1));
  UPoly base = *this;
  while (k > 0) {
    if (k & 1U) result = result * base;
    k >>= 1U;
    if (k > 0) base = base * base;
  }
  return result;
}

UPoly& UPoly::operator+=(const UPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  normalize();
  return *this;
}

UPoly& UPoly::operator-=(const UPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  normalize();
  return *this;
}

UPoly& UPoly::operator*=(const Rat& c) {
  if (c.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  for (auto& x : coeffs_) x *= c;
  return *this;
}

UPoly operator*(const UPoly& a, const UPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<mpq_class> acc(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      acc[i + j] += a.coeffs_[i].value() * b.coeffs_[j].value();
    }
  }
  std::vector<Rat> out;
  out.reserve(acc.size());
  for (auto& x : acc) out.emplace_back(std::move(x));
  return UPoly(std::move(out));
}

UPoly UPoly::operator-() const {
  UPoly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

std::size_t UPoly::hash() const noexcept {
  std::size_t h = coeffs_.size();
  for (const auto& c : coeffs_) h = h * 1000003U ^ c.hash();
  return h;
}

DivMod divmod(const UPoly& a, const UPoly& b) {
  if (b.is_zero()) throw Error(ErrorCode::DivisionByZero, "polynomial division by zero");
  if (a.degree() < b.degree()) return {UPoly(), a};
  const std::size_t db = b.size_degree();
  const Rat inv_lead = b.leading().inverse();
  std::vector<Rat> rem(a.coefficients().begin(), a.coefficients().end());
  std::vector<Rat> quot(rem.size() - db);
  for (std::size_t k = rem.size(); k-- > db;) {
    if (rem[k].is_zero()) continue;
    const Rat q = rem[k] * inv_lead;
    quot[k - db] = q;
    for (std::size_t j = 0; j <= db; ++j) rem[k - db + j] -= q * b.coefficients()[j];
  }
  rem.resize(db);
  return {UPoly(std::move(quot)), UPoly(std::move(rem))};
}

bool divides(const UPoly& d, const UPoly& p) {
  if (d.is_zero()) return p.is_zero();
  return divmod(p, d).remainder.is_zero();
}

UPoly derivative(const UPoly& p) {
  if (p.is_constant()) return {};
  std::vector<Rat> out(p.size_degree());
  for (std::size_t i = 1; i < p.coefficients().size(); ++i) {
    out[i - 1] = p.coefficients()[i] * Rat(static_cast<std::int64_t>(i));
  }
  return UPoly(std::move(out));
}

UPoly gcd(const UPoly& p, const UPoly& q) {
  if (p.is_zero() && q.is_zero()) throw Error(ErrorCode::GcdOfZeros, "gcd(0, 0) is undefined");
  if (p.is_zero()) return q.monic();
  if (q.is_zero()) return p.monic();
  return detail::modular_gcd(p, q);
}

UPoly radical(const UPoly& p) {
  if (p.is_zero()) throw Error(ErrorCode::RadicalOfZero, "radical of the zero polynomial");
  if (p.is_constant()) return UPoly::constant(Rat(1));
  const UPoly g = gcd(p, derivative(p));
  return divmod(p, g).quotient.monic();
}

std::size_t distinct_root_count(const UPoly& p) {
  if (p.is_zero()) throw Error(ErrorCode::RootCountOfZero, "root count of the zero polynomial");
  if (p.is_constant()) return 0;
  const UPoly g = gcd(p, derivative(p));
  return p.size_degree() - g.size_degree();
}

CoprimeCheck pairwise_coprime(std::span<const UPoly> fs) {
  if (fs.size() < 2) throw Error(ErrorCode::InvalidArgument, "pairwise_coprime needs at least two entries");
  for (std::size_t i = 0; i < fs.size(); ++i) {
    if (fs[i].is_zero()) throw Error(ErrorCode::ZeroEntry, "entry " + std::to_string(i) + " is zero");
  }
  for (std::size_t i = 0; i < fs.size(); ++i) {
    for (std::size_t j = i + 1; j < fs.size(); ++j) {
      UPoly g = gcd(fs[i], fs[j]);
      if (!g.is_constant()) return {false, std::make_pair(i, j), std::move(g)};
    }
  }
  return {};
}

UPoly set_gcd(std::span<const UPoly> fs) {
  std::optional<UPoly> acc;
  for (const auto& f : fs) {
    if (f.is_zero()) continue;
    acc = acc ? gcd(*acc, f) : f.monic();
    if (acc->is_constant()) break;
  }
  if (!acc) throw Error(ErrorCode::GcdOfZeros, "gcd of an all-zero sequence");
  return *acc;
}

}  // namespace rigiditykit
