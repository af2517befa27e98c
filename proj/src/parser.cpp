#include <cctype>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "rigiditykit/error.hpp"
#include "rigiditykit/expr.hpp"

namespace rigiditykit {

namespace {

enum class Tok { Number, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, Equals, Semicolon, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t offset;
};

class Parser {
 public:
  explicit Parser(std::string_view src) : src_(src) { advance(); }

  MPoly expression() {
    MPoly acc;
    bool negate = false;
    if (tok_.kind == Tok::Plus || tok_.kind == Tok::Minus) {
      negate = tok_.kind == Tok::Minus;
      advance();
    }
    acc = term();
    if (negate) acc = -acc;
    while (tok_.kind == Tok::Plus || tok_.kind == Tok::Minus) {
      const bool minus = tok_.kind == Tok::Minus;
      advance();
      MPoly t = term();
      if (minus) {
        acc -= t;
      } else {
        acc += t;
      }
    }
    return acc;
  }

  void expect_end() {
    if (tok_.kind != Tok::End) fail("unexpected '" + tok_.text + "'");
  }

  bool at(Tok k) const { return tok_.kind == k; }
  const Token& current() const { return tok_; }

  std::string identifier() {
    if (tok_.kind != Tok::Ident) fail("expected a variable name");
    std::string name = tok_.text;
    advance();
    return name;
  }

  void consume(Tok k, std::string_view what) {
    if (tok_.kind != k) fail("expected '" + std::string(what) + "'");
    advance();
  }

  [[noreturn]] void fail(const std::string& msg) const { fail_at(tok_.offset, msg); }

 private:
  MPoly term() {
    MPoly acc = factor();
    for (;;) {
      if (tok_.kind == Tok::Star) {
        advance();
        acc = acc * factor();
      } else if (tok_.kind == Tok::Number || tok_.kind == Tok::Ident || tok_.kind == Tok::LParen) {
        acc = acc * factor();
      } else {
        return acc;
      }
    }
  }

  MPoly factor() {
    MPoly base;
    switch (tok_.kind) {
      case Tok::Number: {
        std::string num = tok_.text;
        advance();
        std::string den = "1";
        if (tok_.kind == Tok::Slash) {
          advance();
          if (tok_.kind != Tok::Number) fail("expected a denominator after '/'");
          den = tok_.text;
          if (mpz_class(den) == 0) fail("zero denominator");
          advance();
        }
        base = MPoly::constant(Rat(mpz_class(num), mpz_class(den)));
        break;
      }
      case Tok::Ident:
        base = MPoly::variable(tok_.text);
        advance();
        break;
      case Tok::LParen:
        advance();
        base = expression();
        consume(Tok::RParen, ")");
        break;
      default:
        fail(tok_.kind == Tok::End ? "unexpected end of input" : "unexpected '" + tok_.text + "'");
    }
    if (tok_.kind == Tok::Caret) {
      advance();
      base = base.pow(exponent());
    }
    return base;
  }

  std::uint32_t exponent() {
    if (tok_.kind == Tok::Minus) {
      throw Error(ErrorCode::ExponentOutOfRange, location(tok_.offset) + ": negative exponent");
    }
    if (tok_.kind != Tok::Number) fail("expected an exponent after '^'");
    const mpz_class e(tok_.text);
    if (e == 0 || e > std::numeric_limits<std::uint32_t>::max()) {
      throw Error(ErrorCode::ExponentOutOfRange, location(tok_.offset) + ": exponent " + tok_.text + " out of range");
    }
    advance();
    return static_cast<std::uint32_t>(e.get_ui());
  }

  void advance() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    const std::size_t start = pos_;
    if (pos_ == src_.size()) {
      tok_ = {Tok::End, "end of input", start};
      return;
    }
    const char c = src_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
      tok_ = {Tok::Number, std::string(src_.substr(start, pos_ - start)), start};
      return;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      while (pos_ < src_.size() &&
             (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_')) {
        ++pos_;
      }
      tok_ = {Tok::Ident, std::string(src_.substr(start, pos_ - start)), start};
      return;
    }
    ++pos_;
    const std::string text(1, c);
    switch (c) {
      case '+': tok_ = {Tok::Plus, text, start}; return;
      case '-': tok_ = {Tok::Minus, text, start}; return;
      case '*': tok_ = {Tok::Star, text, start}; return;
      case '/': tok_ = {Tok::Slash, text, start}; return;
      case '^': tok_ = {Tok::Caret, text, start}; return;
      case '(': tok_ = {Tok::LParen, text, start}; return;
      case ')': tok_ = {Tok::RParen, text, start}; return;
      case '=': tok_ = {Tok::Equals, text, start}; return;
      case ';': tok_ = {Tok::Semicolon, text, start}; return;
      default: fail_at(start, "unexpected character '" + text + "'");
    }
  }

  std::string location(std::size_t offset) const {
    std::size_t line = 1;
    std::size_t col = 1;
    for (std::size_t i = 0; i < offset && i < src_.size(); ++i) {
      if (src_[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    return "line " + std::to_string(line) + ", column " + std::to_string(col);
  }

  [[noreturn]] void fail_at(std::size_t offset, const std::string& msg) const {
    throw Error(ErrorCode::SyntaxError, location(offset) + ": " + msg);
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  Token tok_{Tok::End, "", 0};
};

}  // namespace

MPoly parse_poly(std::string_view text) {
  Parser p(text);
  MPoly out = p.expression();
  p.expect_end();
  return out;
}

UPoly parse_upoly(std::string_view text, std::string* variable) {
  const MPoly p = parse_poly(text);
  const auto var = univariate_variable(p);
  if (variable != nullptr && var) *variable = *var;
  return to_upoly(p, var.value_or("t"));
}

namespace detail {

std::vector<std::pair<VarName, MPoly>> parse_equations(std::string_view text) {
  Parser p(text);
  std::vector<std::pair<VarName, MPoly>> out;
  while (!p.at(Tok::End)) {
    VarName lhs = p.identifier();
    p.consume(Tok::Equals, "=");
    out.emplace_back(std::move(lhs), p.expression());
    if (p.at(Tok::Semicolon)) {
      p.consume(Tok::Semicolon, ";");
    } else {
      p.expect_end();
    }
  }
  return out;
}

}  // namespace detail

}  // namespace rigiditykit
