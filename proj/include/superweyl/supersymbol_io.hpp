#pragma once

#include <cctype>
#include <string>
#include <string_view>

#include "superweyl/errors.hpp"
#include "superweyl/scalar_io.hpp"
#include "superweyl/supersymbol.hpp"

namespace superweyl {

namespace detail {

// Parser for `t*tau*xi1 + (alpha)*t^-1*xi1*xi2*eta2`.
//   expr   := ['-'] term (('+' | '-') term)*
//   term   := factor ('*' factor)*
//   factor := '(' scalar ')' | integer ['/' integer] | 'i' | param ['^' int]
//           | 't' ['^' int] | 'tau' ['^' int] | 'xi'k | 'eta'k
// Symbol factors commute; Grassmann factors are multiplied left to right in
// Lambda_hbar(2N), so `eta1*xi1` with hbar = h reads as h - xi1*eta1.
class SuperSymbolParser {
 public:
  SuperSymbolParser(std::string_view text, int n, const Scalar& hbar, int cutoff)
      : text_(text), n_(n), hbar_(hbar), cutoff_(cutoff) {}

  SuperSymbol parse() {
    SuperSymbol value(n_, cutoff_);
    bool negative = accept('-');
    SuperSymbol first = term();
    value += negative ? -first : first;
    while (true) {
      if (accept('+')) value += term();
      else if (accept('-')) value -= term();
      else break;
    }
    skip_space();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return value;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("symbol parse error at offset " + std::to_string(pos_) + " in '" + std::string(text_) + "': " + what);
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
  int integer() {
    skip_space();
    bool negative = false;
    if (pos_ < text_.size() && text_[pos_] == '-') {
      negative = true;
      ++pos_;
    }
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer");
    int v = std::stoi(std::string(text_.substr(start, pos_ - start)));
    return negative ? -v : v;
  }
  int exponent() { return accept('^') ? integer() : 1; }

  SuperSymbol term() {
    Scalar coeff(1);
    Symbol sym = Symbol::constant(Scalar(1), cutoff_);
    GrassmannElement grass = GrassmannElement::constant(n_, Scalar(1));
    do {
      factor(coeff, sym, grass);
    } while (accept('*'));
    return SuperSymbol::from(sym * coeff, grass);
  }

  void factor(Scalar& coeff, Symbol& sym, GrassmannElement& grass) {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == '(') {
      int depth = 0;
      std::size_t start = pos_;
      for (; pos_ < text_.size(); ++pos_) {
        if (text_[pos_] == '(') ++depth;
        if (text_[pos_] == ')' && --depth == 0) break;
      }
      if (pos_ >= text_.size()) fail("unbalanced '('");
      ++pos_;
      coeff *= parse_scalar(text_.substr(start, pos_ - start));
      return;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      long num = integer();
      if (accept('/')) coeff *= Scalar::rational(num, integer());
      else coeff *= Scalar(num);
      return;
    }
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    std::string_view word = text_.substr(start, pos_ - start);
    if (word == "t") {
      sym = commutative_product(sym, Symbol::t(exponent(), cutoff_));
    } else if (word == "tau") {
      sym = commutative_product(sym, Symbol::tau(exponent(), cutoff_));
    } else if (word == "xi" || word == "eta") {
      int k = integer();
      if (k < 1 || k > n_) throw IndexOutOfRange("odd variable index " + std::to_string(k) + " outside 1.." + std::to_string(n_));
      GrassmannElement g = word == "xi" ? GrassmannElement::xi(n_, k) : GrassmannElement::eta(n_, k);
      grass = grassmann_mul(grass, g, hbar_);
    } else if (word == "i") {
      coeff *= Scalar::i();
    } else if (auto p = param_from_name(word)) {
      coeff *= Scalar::param(*p).pow(exponent());
    } else {
      pos_ = start;
      fail("unknown factor '" + std::string(word) + "'");
    }
  }

  std::string_view text_;
  int n_;
  Scalar hbar_;
  int cutoff_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Parses a super-symbol; Grassmann words are multiplied in Lambda_hbar(2N).
inline SuperSymbol parse_supersymbol(std::string_view text, int n = 2, const Scalar& hbar = Scalar(),
                                     int cutoff = Symbol::kDefaultCutoff) {
  return detail::SuperSymbolParser(text, n, hbar, cutoff).parse();
}

}  // namespace superweyl
