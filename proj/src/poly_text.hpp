#pragma once

// Internal term-sum parser shared by the series (X<i>_<k>) and exact-poly
// (w<j>) grammars. Grammar:
//   expr   := ['-'] term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := INT | VAR ('^' INT)?
// Whitespace between tokens is ignored; coefficients reduce mod p.

#include <cctype>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace iwa::detail {

struct ParsedTerm {
  long coeff = 1;
  std::vector<std::pair<int, int>> varpows;  // (variable index, exponent)
};

// var_index resolves a variable token to its index or throws.
inline std::vector<ParsedTerm> parse_poly_text(
    const std::string& text, const std::function<int(const std::string&)>& var_index) {
  size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto fail = [&](const std::string& msg) -> void {
    throw std::invalid_argument("parse error at position " + std::to_string(pos) + ": " + msg);
  };
  auto read_int = [&]() -> long {
    skip_ws();
    size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start) fail("expected integer");
    return std::stol(text.substr(start, pos - start));
  };
  auto read_var = [&]() -> std::string {
    size_t start = pos;
    while (pos < text.size() &&
           (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
      ++pos;
    return text.substr(start, pos - start);
  };

  std::vector<ParsedTerm> out;
  skip_ws();
  if (pos >= text.size()) fail("empty polynomial literal");
  bool negate_first = false;
  if (text[pos] == '-') {
    negate_first = true;
    ++pos;
  }
  bool first = true;
  while (true) {
    ParsedTerm term;
    bool negative = first ? negate_first : false;
    if (!first) {
      skip_ws();
      if (pos >= text.size()) break;
      if (text[pos] == '+') {
        ++pos;
      } else if (text[pos] == '-') {
        negative = true;
        ++pos;
      } else {
        fail(std::string("unexpected character '") + text[pos] + "'");
      }
    }
    first = false;
    // factors
    bool expect_factor = true;
    while (expect_factor) {
      skip_ws();
      if (pos >= text.size()) fail("expected factor");
      char c = text[pos];
      if (std::isdigit(static_cast<unsigned char>(c))) {
        term.coeff *= read_int();
      } else if (std::isalpha(static_cast<unsigned char>(c))) {
        std::string name = read_var();
        int v = var_index(name);
        int exp = 1;
        skip_ws();
        if (pos < text.size() && text[pos] == '^') {
          ++pos;
          exp = static_cast<int>(read_int());
          if (exp < 0) fail("negative exponent");
        }
        term.varpows.emplace_back(v, exp);
      } else {
        fail(std::string("unexpected character '") + c + "'");
      }
      skip_ws();
      if (pos < text.size() && text[pos] == '*') {
        ++pos;
        expect_factor = true;
      } else {
        expect_factor = false;
      }
    }
    if (negative) term.coeff = -term.coeff;
    out.push_back(std::move(term));
    skip_ws();
    if (pos >= text.size()) break;
  }
  return out;
}

}  // namespace iwa::detail
