#pragma once

#include <cctype>
#include <cstddef>
#include <sstream>
#include <string>
#include <string_view>

#include "tamegen/polymap.hpp"

namespace tamegen {

class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column)
      : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

// ---------------------------------------------------------------------------
// Printing

/// Graded-lex order, x > y > z, e.g. "x^3 - 3/2*x*z^2 + 1".
inline std::string to_string(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    bool negative = c < 0;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    Rational magnitude = abs(c);
    std::string factors;
    for (Axis axis : kAxes) {
      auto e = m[axis];
      if (e == 0) continue;
      if (!factors.empty()) factors += "*";
      factors += axis_name(axis);
      if (e > 1) factors += "^" + std::to_string(e);
    }
    if (factors.empty()) {
      out += to_string(magnitude);
    } else if (magnitude == 1) {
      out += factors;
    } else {
      out += to_string(magnitude) + "*" + factors;
    }
  }
  return out;
}

inline std::string to_string(const Factor& factor) {
  if (const auto* e = std::get_if<Elementary>(&factor))
    return std::string("E(") + axis_name(e->axis()) + ", " + to_string(e->g()) + ")";
  const auto& m = std::get<Linear>(factor).matrix();
  std::string out = "L(";
  for (std::size_t i = 0; i < 3; ++i) {
    if (i > 0) out += "; ";
    for (std::size_t j = 0; j < 3; ++j) {
      if (j > 0) out += ", ";
      out += to_string(m[i][j]);
    }
  }
  return out + ")";
}

/// One factor per line, first line applied first.
inline std::string to_string(const TameWord& word) {
  std::string out;
  for (const auto& factor : word.factors) out += to_string(factor) + "\n";
  return out;
}

// ---------------------------------------------------------------------------
// Parsing

namespace detail {

class PolynomialParser {
 public:
  PolynomialParser(std::string_view text, std::size_t line, std::size_t column_offset)
      : text_(text), line_(line), column_offset_(column_offset) {}

  Polynomial parse() {
    skip_space();
    if (at_end()) fail("empty polynomial");
    Polynomial p = expression();
    skip_space();
    if (!at_end()) fail(std::string("unexpected '") + text_[pos_] + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& message) const { fail_at(message, pos_); }
  [[noreturn]] void fail_at(const std::string& message, std::size_t pos) const {
    throw ParseError(message, line_, column_offset_ + pos + 1);
  }

  bool at_end() const { return pos_ >= text_.size(); }
  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool peek(char ch) {
    skip_space();
    return !at_end() && text_[pos_] == ch;
  }

  Polynomial expression() {
    Polynomial sum = product();
    while (true) {
      if (peek('+')) {
        ++pos_;
        sum += product();
      } else if (peek('-')) {
        ++pos_;
        sum -= product();
      } else {
        return sum;
      }
    }
  }

  Polynomial product() {
    Polynomial p = unary();
    while (peek('*')) {
      ++pos_;
      p = p * unary();
    }
    return p;
  }

  Polynomial unary() {
    if (peek('-')) {
      ++pos_;
      return -unary();
    }
    return power();
  }

  Polynomial power() {
    Polynomial base = primary();
    if (!peek('^')) return base;
    ++pos_;
    skip_space();
    std::size_t start = pos_;
    std::string digits = read_digits();
    if (digits.empty()) fail("expected a non-negative integer exponent");
    if (digits.size() > 9) fail_at("exponent too large", start);
    if (peek('^')) fail("chained exponents are not allowed");
    return pow(base, std::stoull(digits));
  }

  Polynomial primary() {
    skip_space();
    if (at_end()) fail("unexpected end of input");
    char ch = text_[pos_];
    if (ch == '(') {
      ++pos_;
      Polynomial inner = expression();
      if (!peek(')')) fail("expected ')'");
      ++pos_;
      return inner;
    }
    if (auto axis = axis_from_name(ch)) {
      ++pos_;
      return Polynomial::variable(*axis);
    }
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      std::string numerator = read_digits();
      std::string denominator = "1";
      if (peek('/')) {
        std::size_t slash = pos_++;
        skip_space();
        denominator = read_digits();
        if (denominator.empty()) fail("'/' is only allowed inside a fraction literal p/q");
        if (Integer(denominator) == 0) fail_at("zero denominator", slash);
        if (peek('/')) fail("'/' is only allowed inside a fraction literal p/q");
      }
      return Polynomial(make_rational(Integer(numerator), Integer(denominator)));
    }
    fail(std::string("unexpected '") + ch + "'");
  }

  std::string read_digits() {
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  std::string_view text_;
  std::size_t line_;
  std::size_t column_offset_;
  std::size_t pos_ = 0;
};

inline std::string_view trim(std::string_view s, std::size_t* leading = nullptr) {
  std::size_t begin = 0;
  while (begin < s.size() && std::isspace(static_cast<unsigned char>(s[begin]))) ++begin;
  std::size_t end = s.size();
  while (end > begin && std::isspace(static_cast<unsigned char>(s[end - 1]))) --end;
  if (leading) *leading = begin;
  return s.substr(begin, end - begin);
}

inline Polynomial parse_polynomial_at(std::string_view text, std::size_t line, std::size_t column_offset) {
  return PolynomialParser(text, line, column_offset).parse();
}

inline Factor parse_factor(std::string_view line_text, std::size_t line) {
  std::size_t lead = 0;
  std::string_view body = trim(line_text, &lead);
  auto fail = [&](const std::string& message, std::size_t offset) -> void {
    throw ParseError(message, line, lead + offset + 1);
  };
  if (body.size() < 3 || (body[0] != 'E' && body[0] != 'L')) fail("expected E(axis, poly) or L(r1; r2; r3)", 0);
  std::size_t open = 1;
  while (open < body.size() && std::isspace(static_cast<unsigned char>(body[open]))) ++open;
  if (open >= body.size() || body[open] != '(') fail("expected '('", open);
  if (body.back() != ')') fail("expected ')' at end of factor", body.size() - 1);
  std::string_view inside = body.substr(open + 1, body.size() - open - 2);
  std::size_t inside_offset = lead + open + 1;

  if (body[0] == 'E') {
    auto comma = inside.find(',');
    if (comma == std::string_view::npos) fail("expected ',' after the axis", open + 1);
    std::size_t axis_lead = 0;
    std::string_view axis_text = trim(inside.substr(0, comma), &axis_lead);
    std::optional<Axis> axis = axis_text.size() == 1 ? axis_from_name(axis_text[0]) : std::nullopt;
    if (!axis) fail("axis must be x, y or z", open + 1 + axis_lead);
    Polynomial g = parse_polynomial_at(inside.substr(comma + 1), line, inside_offset + comma + 1);
    if (g.involves(*axis)) fail("factor polynomial uses its own axis", open + 1 + comma + 1);
    return Elementary(*axis, std::move(g));
  }

  Matrix3 matrix;
  std::size_t row_start = 0;
  for (std::size_t i = 0; i < 3; ++i) {
    std::size_t row_end = inside.find(';', row_start);
    if ((row_end == std::string_view::npos) != (i == 2)) fail("expected three rows separated by ';'", open + 1 + row_start);
    if (row_end == std::string_view::npos) row_end = inside.size();
    std::size_t entry_start = row_start;
    for (std::size_t j = 0; j < 3; ++j) {
      std::size_t entry_end = inside.find(',', entry_start);
      if (entry_end > row_end) entry_end = std::string_view::npos;
      if ((entry_end == std::string_view::npos) != (j == 2)) fail("expected three entries per row", open + 1 + entry_start);
      if (entry_end == std::string_view::npos) entry_end = row_end;
      Polynomial entry = parse_polynomial_at(inside.substr(entry_start, entry_end - entry_start), line,
                                             inside_offset + entry_start);
      auto value = entry.constant_value();
      if (!value) fail("matrix entries must be constants", open + 1 + entry_start);
      matrix[i][j] = *value;
      entry_start = entry_end + 1;
    }
    row_start = row_end + 1;
  }
  if (determinant(matrix) == 0) fail("singular linear factor", 0);
  return Linear(matrix);
}

}  // namespace detail

inline Polynomial parse_polynomial(std::string_view text) { return detail::parse_polynomial_at(text, 1, 0); }

/// One factor per line; '#' starts a comment; blank lines are ignored.
inline TameWord parse_word(std::string_view text) {
  TameWord word;
  std::size_t line = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    ++line;
    std::string_view content = text.substr(start, end - start);
    if (auto hash = content.find('#'); hash != std::string_view::npos) content = content.substr(0, hash);
    if (!detail::trim(content).empty()) word.factors.push_back(detail::parse_factor(content, line));
    start = end + 1;
  }
  return word;
}

}  // namespace tamegen
