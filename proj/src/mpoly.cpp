#include "rigiditykit/mpoly.hpp"

#include <algorithm>
#include <cctype>
#include <limits>

#include "rigiditykit/error.hpp"

namespace rigiditykit {

namespace {

std::uint32_t checked_exponent(std::uint64_t e) {
  if (e > std::numeric_limits<std::uint32_t>::max()) {
    throw Error(ErrorCode::ExponentOverflow, "exponent " + std::to_string(e) + " exceeds 32 bits");
  }
  return static_cast<std::uint32_t>(e);
}

}  // namespace

bool is_valid_var_name(std::string_view name) {
  if (name.empty() || !std::isalpha(static_cast<unsigned char>(name.front()))) return false;
  return std::all_of(name.begin(), name.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

Monomial Monomial::variable(const VarName& name, std::uint32_t exponent) {
  if (!is_valid_var_name(name)) throw Error(ErrorCode::InvalidArgument, "invalid variable name '" + name + "'");
  Monomial m;
  if (exponent > 0) m.factors_.emplace_back(name, exponent);
  return m;
}

std::uint64_t Monomial::total_degree() const noexcept {
  std::uint64_t d = 0;
  for (const auto& [_, e] : factors_) d += e;
  return d;
}

std::uint32_t Monomial::exponent(std::string_view name) const {
  for (const auto& [v, e] : factors_) {
    if (v == name) return e;
  }
  return 0;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial out;
  out.factors_.reserve(a.factors_.size() + b.factors_.size());
  auto i = a.factors_.begin();
  auto j = b.factors_.begin();
  while (i != a.factors_.end() || j != b.factors_.end()) {
    if (j == b.factors_.end() || (i != a.factors_.end() && i->first < j->first)) {
      out.factors_.push_back(*i++);
    } else if (i == a.factors_.end() || j->first < i->first) {
      out.factors_.push_back(*j++);
    } else {
      out.factors_.emplace_back(i->first, checked_exponent(std::uint64_t{i->second} + j->second));
      ++i;
      ++j;
    }
  }
  return out;
}

Monomial Monomial::pow(std::uint32_t k) const {
  Monomial out;
  if (k == 0) return out;
  out.factors_.reserve(factors_.size());
  for (const auto& [v, e] : factors_) out.factors_.emplace_back(v, checked_exponent(std::uint64_t{e} * k));
  return out;
}

bool GrlexGreater::operator()(const Monomial& a, const Monomial& b) const {
  const auto da = a.total_degree();
  const auto db = b.total_degree();
  if (da != db) return da > db;
  const auto& fa = a.factors();
  const auto& fb = b.factors();
  for (std::size_t i = 0; i < std::min(fa.size(), fb.size()); ++i) {
    if (fa[i].first != fb[i].first) return fa[i].first < fb[i].first;
    if (fa[i].second != fb[i].second) return fa[i].second > fb[i].second;
  }
  return fa.size() > fb.size();
}

MPoly MPoly::constant(const Rat& c) { return term(c, Monomial()); }

MPoly MPoly::variable(const VarName& name) { return term(Rat(1), Monomial::variable(name)); }

MPoly MPoly::term(const Rat& c, Monomial m) {
  MPoly p;
  if (!c.is_zero()) p.terms_.emplace(std::move(m), c);
  return p;
}

bool MPoly::is_constant() const noexcept {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

std::uint64_t MPoly::total_degree() const noexcept {
  return terms_.empty() ? 0 : terms_.begin()->first.total_degree();
}

std::set<VarName> MPoly::vars() const {
  std::set<VarName> out;
  for (const auto& [m, _] : terms_) {
    for (const auto& [v, e] : m.factors()) out.insert(v);
  }
  return out;
}

Rat MPoly::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rat() : it->second;
}

void MPoly::add_term(const Monomial& m, const Rat& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

MPoly& MPoly::operator+=(const MPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

MPoly& MPoly::operator*=(const Rat& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [_, x] : terms_) x *= c;
  return *this;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
  MPoly out;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
  }
  return out;
}

MPoly MPoly::operator-() const {
  MPoly out = *this;
  for (auto& [_, c] : out.terms_) c = -c;
  return out;
}

MPoly MPoly::pow(std::uint32_t k) const {
  // A single term needs no expansion, and its exponent check must not wait
  // for an intermediate product.
  if (terms_.size() == 1) {
    const auto& [m, c] = *terms_.begin();
    Monomial mk = m.pow(k);
    return term(c.pow(k), std::move(mk));
  }
  MPoly result = constant(Rat(1));
  MPoly base = *this;
  while (k > 0) {
    if (k & 1U) result = result * base;
    k >>= 1U;
    if (k > 0) base = base * base;
  }
  return result;
}

std::set<VarName> mpoly_vars(const MPoly& p) { return p.vars(); }

MPoly substitute(const MPoly& p, const std::map<VarName, MPoly>& subst) {
  std::map<std::pair<VarName, std::uint32_t>, MPoly> power_cache;
  auto image_power = [&](const VarName& v, std::uint32_t e) -> MPoly {
    auto it = subst.find(v);
    if (it == subst.end()) return MPoly::term(Rat(1), Monomial::variable(v, e));
    auto key = std::make_pair(v, e);
    auto cached = power_cache.find(key);
    if (cached != power_cache.end()) return cached->second;
    MPoly value = it->second.pow(e);
    power_cache.emplace(key, value);
    return value;
  };
  MPoly out;
  for (const auto& [m, c] : p.terms()) {
    MPoly term = MPoly::constant(c);
    for (const auto& [v, e] : m.factors()) term = term * image_power(v, e);
    out += term;
  }
  return out;
}

UPoly to_upoly(const MPoly& p, std::string_view var) {
  std::vector<Rat> coeffs;
  for (const auto& [m, c] : p.terms()) {
    std::size_t e = 0;
    for (const auto& [v, k] : m.factors()) {
      if (v != var) throw Error(ErrorCode::NotUnivariate, "variable '" + v + "' other than '" + std::string(var) + "'");
      e = k;
    }
    if (coeffs.size() <= e) coeffs.resize(e + 1);
    coeffs[e] = c;
  }
  return UPoly(std::move(coeffs));
}

MPoly from_upoly(const UPoly& p, const VarName& var) {
  MPoly out;
  const auto cs = p.coefficients();
  for (std::size_t i = 0; i < cs.size(); ++i) {
    out += MPoly::term(cs[i], Monomial::variable(var, static_cast<std::uint32_t>(i)));
  }
  return out;
}

std::optional<VarName> univariate_variable(const MPoly& p) {
  const auto vs = p.vars();
  if (vs.size() > 1) throw Error(ErrorCode::NotUnivariate, "expected at most one variable, found " + std::to_string(vs.size()));
  if (vs.empty()) return std::nullopt;
  return *vs.begin();
}

}  // namespace rigiditykit
