#include <string>

#include "rigiditykit/expr.hpp"

namespace rigiditykit {

namespace {

std::string format_monomial(const Monomial& m) {
  std::string out;
  for (const auto& [name, e] : m.factors()) {
    if (!out.empty()) out += '*';
    out += name;
    if (e >= 2) out += '^' + std::to_string(e);
  }
  return out;
}

}  // namespace

std::string format_poly(const MPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    if (first) {
      if (c.sign() < 0) out += '-';
    } else {
      out += c.sign() < 0 ? " - " : " + ";
    }
    first = false;
    const Rat a = c.abs();
    if (m.is_one()) {
      out += a.str();
    } else if (a == Rat(1)) {
      out += format_monomial(m);
    } else {
      out += a.str() + '*' + format_monomial(m);
    }
  }
  return out;
}

std::string format_upoly(const UPoly& p, std::string_view variable) {
  return format_poly(from_upoly(p, VarName(variable)));
}

}  // namespace rigiditykit
