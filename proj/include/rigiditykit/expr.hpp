#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>

#include "rigiditykit/mpoly.hpp"
#include "rigiditykit/upoly.hpp"

namespace rigiditykit {

/// Parses a polynomial expression and expands it to canonical form.
///
///   expression ::= ['+'|'-'] term (('+'|'-') term)*
///   term       ::= factor ('*'? factor)*
///   factor     ::= rational ['^' int] | variable ['^' int] | '(' expression ')' ['^' int]
///   rational   ::= int ['/' int]
///
/// Variables match [A-Za-z][A-Za-z0-9_]*, so "XY" is one variable and "X Y"
/// or "X*Y" is a product. Whitespace is otherwise insignificant.
/// Throws SyntaxError (detail carries "line L, column C") and
/// ExponentOutOfRange for exponents that are zero, negative or above 2^32 - 1.
MPoly parse_poly(std::string_view text);

/// Parses a univariate expression. An expression without variables is accepted.
/// Throws NotUnivariate when more than one variable occurs.
UPoly parse_upoly(std::string_view text, std::string* variable = nullptr);

/// Canonical text: graded-lex term order, '*' between factors, '^' only for
/// exponents >= 2, integers without a denominator, "0" for zero.
std::string format_poly(const MPoly& p);
std::string format_upoly(const UPoly& p, std::string_view variable = "t");

/// Parses "new = linear expression in old; ..." and returns the inverse map
/// old -> expression in new, ready for substitute(). When `declared` is
/// given, right-hand sides may only use those variables (UnknownVariable).
/// Throws BadSubstitution for nonlinear or non-invertible systems.
std::map<VarName, MPoly> parse_subst(std::string_view text,
                                     const std::optional<std::set<VarName>>& declared = std::nullopt);

}  // namespace rigiditykit
