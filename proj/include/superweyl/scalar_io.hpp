#pragma once

#include <cctype>
#include <string>
#include <string_view>

#include "superweyl/errors.hpp"
#include "superweyl/scalar.hpp"

namespace superweyl {

namespace detail {

// Recursive-descent parser for the scalar text format:
//   expr  := term (('+' | '-') term)*
//   term  := unary (('*' | '/') unary)*
//   unary := ('-' | '+') unary | power
//   power := atom ('^' ['-'] integer)?
//   atom  := integer | 'i' | parameter | '(' expr ')'
class ScalarParser {
 public:
  explicit ScalarParser(std::string_view text) : text_(text) {}

  Scalar parse() {
    Scalar value = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return value;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("scalar parse error at offset " + std::to_string(pos_) + " in '" + std::string(text_) +
                     "': " + what);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Scalar expr() {
    Scalar value = term();
    while (true) {
      if (accept('+')) value += term();
      else if (accept('-')) value -= term();
      else return value;
    }
  }

  Scalar term() {
    Scalar value = unary();
    while (true) {
      if (accept('*')) {
        value *= unary();
      } else if (accept('/')) {
        Scalar d = unary();
        if (d.is_zero()) fail("division by zero");
        value /= d;
      } else {
        return value;
      }
    }
  }

  Scalar unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  Scalar power() {
    Scalar base = atom();
    if (!accept('^')) return base;
    bool negative = accept('-');
    skip_space();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer exponent");
    int n = std::stoi(std::string(text_.substr(start, pos_ - start)));
    if (negative && base.is_zero()) fail("negative power of zero");
    return base.pow(negative ? -n : n);
  }

  Scalar atom() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Scalar inner = expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      Rational r(std::string(text_.substr(start, pos_ - start)));
      return Scalar(GaussianRational(r));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      std::string_view name = text_.substr(start, pos_ - start);
      if (name == "i") return Scalar::i();
      if (auto p = param_from_name(name)) return Scalar::param(*p);
      pos_ = start;
      fail("unknown identifier '" + std::string(name) + "'");
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline Scalar parse_scalar(std::string_view text) { return detail::ScalarParser(text).parse(); }

inline GaussianRational parse_gaussian(std::string_view text) {
  Scalar s = parse_scalar(text);
  if (!s.is_constant()) throw ParseError("expected a Gaussian rational, got '" + std::string(text) + "'");
  return s.constant_value();
}

inline std::string format_scalar(const Scalar& s) { return s.to_string(); }

}  // namespace superweyl
