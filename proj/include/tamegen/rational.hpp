#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace tamegen {

/// Arbitrary-precision integer.
using Integer = mpz_class;

/// Exact fraction in lowest terms with a positive denominator. GMP keeps
/// results of arithmetic canonical; values built from raw parts must go
/// through make_rational().
using Rational = mpq_class;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw Error("zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline Rational make_rational(long num, long den = 1) {
  return make_rational(Integer(num), Integer(den));
}

/// "p/q", or "p" when the denominator is 1.
inline std::string to_string(const Rational& q) {
  return q.get_str(10);
}

inline std::string to_string(const Integer& n) { return n.get_str(10); }

/// Parses "p" or "p/q" with an optional leading '-'. Throws on anything else.
inline Rational parse_rational(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && body.front() == '-') {
    negative = true;
    body.remove_prefix(1);
  }
  auto slash = body.find('/');
  auto digits = [](std::string_view s) {
    if (s.empty()) return false;
    for (char ch : s)
      if (ch < '0' || ch > '9') return false;
    return true;
  };
  std::string_view num = body.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
  if (!digits(num) || !digits(den)) throw Error("malformed rational literal '" + std::string(text) + "'");
  Rational q = make_rational(Integer(std::string(num)), Integer(std::string(den)));
  return negative ? Rational(-q) : q;
}

}  // namespace tamegen
