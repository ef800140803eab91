#pragma once

#include <cctype>
#include <string>
#include <string_view>

#include "superweyl/errors.hpp"
#include "superweyl/scalar_io.hpp"
#include "superweyl/superlie.hpp"

namespace superweyl {

/// Parses `H1 + ((1+alpha)/2)*H2 - C/2`-style combinations of basis names.
/// A term is `[coeff*]name[/integer]`; coeff is an integer, a fraction, or a
/// parenthesized scalar. Names may contain letters, digits, '+' and '-' only
/// as in `C+`, `C-` when followed by a separator or the end.
inline LieVector parse_combination(std::string_view text, const SuperLieAlgebra& L) {
  LieVector out;
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto fail = [&](const std::string& what) -> void {
    throw ParseError("combination parse error at offset " + std::to_string(pos) + " in '" + std::string(text) + "': " + what);
  };
  skip();
  if (text.substr(pos) == "0") return out;
  bool first = true;
  while (true) {
    skip();
    if (pos >= text.size()) {
      if (first) fail("empty combination");
      break;
    }
    Scalar sign(1);
    if (text[pos] == '+' || text[pos] == '-') {
      if (text[pos] == '-') sign = Scalar(-1);
      ++pos;
      skip();
    } else if (!first) {
      fail("expected '+' or '-'");
    }
    first = false;
    Scalar coeff(1);
    if (pos < text.size() && text[pos] == '(') {
      int depth = 0;
      const std::size_t start = pos;
      for (; pos < text.size(); ++pos) {
        if (text[pos] == '(') ++depth;
        if (text[pos] == ')' && --depth == 0) break;
      }
      if (pos >= text.size()) fail("unbalanced '('");
      ++pos;
      coeff = parse_scalar(text.substr(start, pos - start));
      skip();
      if (pos >= text.size() || text[pos] != '*') fail("expected '*'");
      ++pos;
    } else if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      const std::size_t start = pos;
      while (pos < text.size() && (std::isdigit(static_cast<unsigned char>(text[pos])) || text[pos] == '/')) ++pos;
      coeff = parse_scalar(text.substr(start, pos - start));
      skip();
      if (pos >= text.size() || text[pos] != '*') fail("expected '*'");
      ++pos;
    }
    skip();
    const std::size_t start = pos;
    while (pos < text.size() && (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_')) ++pos;
    // Trailing '+'/'-' belongs to the name when nothing but a separator follows.
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
      std::size_t after = pos + 1;
      while (after < text.size() && text[after] == ' ') ++after;
      const bool name_ends = after >= text.size() || text[after] == '/' || after > pos + 1;
      if (name_ends && L.contains(std::string(text.substr(start, pos + 1 - start)))) ++pos;
    }
    if (start == pos) fail("expected a basis name");
    const int index = L.index_of(text.substr(start, pos - start));
    skip();
    if (pos < text.size() && text[pos] == '/') {
      ++pos;
      skip();
      const std::size_t num = pos;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
      if (num == pos) fail("expected a divisor");
      coeff = coeff / parse_scalar(text.substr(num, pos - num));
    }
    out.add(index, sign * coeff);
  }
  return out;
}

}  // namespace superweyl
