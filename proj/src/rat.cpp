#include "rigiditykit/rat.hpp"

#include <cctype>

#include "rigiditykit/error.hpp"

namespace rigiditykit {

namespace {

mpz_class from_int64(std::int64_t v) {
  // mpz_class has no portable int64 constructor on every platform.
  mpz_class z;
  const bool negative = v < 0;
  const std::uint64_t mag = negative ? (~static_cast<std::uint64_t>(v) + 1) : static_cast<std::uint64_t>(v);
  mpz_import(z.get_mpz_t(), 1, 1, sizeof(mag), 0, 0, &mag);
  if (negative) z = -z;
  return z;
}

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

std::size_t hash_mpz(const mpz_class& z) noexcept {
  std::size_t h = static_cast<std::size_t>(mpz_size(z.get_mpz_t())) * 0x9E3779B97F4A7C15ULL;
  const std::size_t limbs = mpz_size(z.get_mpz_t());
  for (std::size_t i = 0; i < limbs; ++i) {
    h ^= static_cast<std::size_t>(mpz_getlimbn(z.get_mpz_t(), static_cast<mp_size_t>(i))) + 0x9E3779B97F4A7C15ULL +
         (h << 6) + (h >> 2);
  }
  return h ^ static_cast<std::size_t>(sgn(z) + 1);
}

}  // namespace

Rat::Rat(std::int64_t value) : value_(from_int64(value)) {}

Rat::Rat(std::int64_t num, std::int64_t den) : Rat(from_int64(num), from_int64(den)) {}

Rat::Rat(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw Error(ErrorCode::DivisionByZero, "rational with zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rat::Rat(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

Rat Rat::parse(std::string_view text) {
  std::string_view s = text;
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  const auto slash = s.find('/');
  const std::string_view num = s.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view("1") : s.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den)) {
    throw Error(ErrorCode::SyntaxError, "malformed rational '" + std::string(text) + "'");
  }
  mpz_class n(std::string(num), 10);
  mpz_class d(std::string(den), 10);
  if (negative) n = -n;
  return Rat(n, d);
}

Rat Rat::abs() const { return Rat(mpq_class(::abs(value_))); }

Rat Rat::inverse() const {
  if (is_zero()) throw Error(ErrorCode::DivisionByZero, "inverse of zero");
  return Rat(mpq_class(1 / value_));
}

Rat Rat::pow(std::uint32_t k) const {
  mpz_class n;
  mpz_class d;
  mpz_pow_ui(n.get_mpz_t(), value_.get_num_mpz_t(), k);
  mpz_pow_ui(d.get_mpz_t(), value_.get_den_mpz_t(), k);
  return Rat(n, d);
}

std::string Rat::str() const {
  if (is_integer()) return value_.get_num().get_str();
  return value_.get_str();
}

std::string Rat::fraction_str() const {
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rat& Rat::operator+=(const Rat& o) {
  value_ += o.value_;
  return *this;
}
Rat& Rat::operator-=(const Rat& o) {
  value_ -= o.value_;
  return *this;
}
Rat& Rat::operator*=(const Rat& o) {
  value_ *= o.value_;
  return *this;
}
Rat& Rat::operator/=(const Rat& o) {
  if (o.is_zero()) throw Error(ErrorCode::DivisionByZero, "division by zero");
  value_ /= o.value_;
  return *this;
}

Rat Rat::operator-() const { return Rat(mpq_class(-value_)); }

std::size_t Rat::hash() const noexcept {
  return hash_mpz(value_.get_num()) * 31 + hash_mpz(value_.get_den());
}

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

}  // namespace rigiditykit
