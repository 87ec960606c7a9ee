#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "tamegen/rational.hpp"

namespace tamegen {

enum class Axis : std::uint8_t { X = 0, Y = 1, Z = 2 };

inline constexpr std::array<Axis, 3> kAxes{Axis::X, Axis::Y, Axis::Z};

inline constexpr std::size_t index_of(Axis axis) { return static_cast<std::size_t>(axis); }

inline constexpr char axis_name(Axis axis) { return "xyz"[index_of(axis)]; }

inline std::optional<Axis> axis_from_name(char name) {
  switch (name) {
    case 'x': return Axis::X;
    case 'y': return Axis::Y;
    case 'z': return Axis::Z;
    default: return std::nullopt;
  }
}

/// Total degree of a polynomial. The zero polynomial has degree minus
/// infinity, which compares below every finite degree and absorbs addition.
class Degree {
 public:
  constexpr explicit Degree(std::int64_t value) : value_(value) {}

  static constexpr Degree minus_infinity() { return Degree(kMinusInfinity, 0); }

  constexpr bool is_finite() const { return value_ != kMinusInfinity; }

  std::int64_t value() const {
    if (!is_finite()) throw Error("degree of the zero polynomial has no finite value");
    return value_;
  }

  friend constexpr Degree operator+(Degree lhs, Degree rhs) {
    if (!lhs.is_finite() || !rhs.is_finite()) return minus_infinity();
    return Degree(lhs.value_ + rhs.value_);
  }

  friend constexpr auto operator<=>(Degree, Degree) = default;

 private:
  static constexpr std::int64_t kMinusInfinity = std::numeric_limits<std::int64_t>::min();
  constexpr Degree(std::int64_t raw, int) : value_(raw) {}
  std::int64_t value_;
};

struct Monomial {
  std::array<std::uint32_t, 3> exponents{0, 0, 0};

  constexpr Monomial() = default;
  constexpr Monomial(std::uint32_t ex, std::uint32_t ey, std::uint32_t ez) : exponents{ex, ey, ez} {}

  constexpr std::uint32_t operator[](Axis axis) const { return exponents[index_of(axis)]; }
  constexpr std::uint64_t total_degree() const {
    return std::uint64_t{exponents[0]} + exponents[1] + exponents[2];
  }

  friend constexpr Monomial operator*(const Monomial& lhs, const Monomial& rhs) {
    return {lhs.exponents[0] + rhs.exponents[0], lhs.exponents[1] + rhs.exponents[1],
            lhs.exponents[2] + rhs.exponents[2]};
  }

  friend constexpr bool operator==(const Monomial&, const Monomial&) = default;
};

/// Graded lexicographic order with x > y > z, largest monomial first.
struct GradedLexDescending {
  constexpr bool operator()(const Monomial& lhs, const Monomial& rhs) const {
    auto dl = lhs.total_degree();
    auto dr = rhs.total_degree();
    if (dl != dr) return dl > dr;
    return lhs.exponents > rhs.exponents;
  }
};

using Point = std::array<Rational, 3>;

/// Sparse polynomial in x, y, z with exact rational coefficients. No stored
/// coefficient is ever zero, so equality is term-map equality.
class Polynomial {
 public:
  using TermMap = std::map<Monomial, Rational, GradedLexDescending>;

  Polynomial() = default;
  Polynomial(const Rational& constant) {  // NOLINT(google-explicit-constructor)
    if (constant != 0) terms_.emplace(Monomial{}, constant);
  }
  Polynomial(long constant) : Polynomial(Rational(constant)) {}  // NOLINT

  static Polynomial term(const Monomial& monomial, const Rational& coefficient) {
    Polynomial p;
    if (coefficient != 0) p.terms_.emplace(monomial, coefficient);
    return p;
  }

  static Polynomial variable(Axis axis) {
    Monomial m;
    m.exponents[index_of(axis)] = 1;
    return term(m, 1);
  }

  static Polynomial x() { return variable(Axis::X); }
  static Polynomial y() { return variable(Axis::Y); }
  static Polynomial z() { return variable(Axis::Z); }

  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  Rational coefficient(const Monomial& monomial) const {
    auto it = terms_.find(monomial);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  Degree total_degree() const {
    if (terms_.empty()) return Degree::minus_infinity();
    // The map is graded, so the first key has maximal degree.
    return Degree(static_cast<std::int64_t>(terms_.begin()->first.total_degree()));
  }

  bool involves(Axis axis) const {
    for (const auto& [m, c] : terms_)
      if (m[axis] != 0) return true;
    return false;
  }

  /// The value when the polynomial is constant (including zero).
  std::optional<Rational> constant_value() const {
    if (terms_.empty()) return Rational(0);
    if (terms_.size() == 1 && terms_.begin()->first.total_degree() == 0) return terms_.begin()->second;
    return std::nullopt;
  }

  Polynomial& operator+=(const Polynomial& rhs) {
    for (const auto& [m, c] : rhs.terms_) accumulate(m, c);
    return *this;
  }

  Polynomial& operator-=(const Polynomial& rhs) {
    for (const auto& [m, c] : rhs.terms_) accumulate(m, -c);
    return *this;
  }

  Polynomial& operator*=(const Polynomial& rhs) {
    *this = *this * rhs;
    return *this;
  }

  friend Polynomial operator+(Polynomial lhs, const Polynomial& rhs) { return lhs += rhs; }
  friend Polynomial operator-(Polynomial lhs, const Polynomial& rhs) { return lhs -= rhs; }

  friend Polynomial operator-(Polynomial p) {
    for (auto& [m, c] : p.terms_) c = -c;
    return p;
  }

  friend Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs) {
    Polynomial out;
    if (lhs.is_zero() || rhs.is_zero()) return out;
    Rational product;
    for (const auto& [ml, cl] : lhs.terms_) {
      for (const auto& [mr, cr] : rhs.terms_) {
        product = cl * cr;
        auto [it, inserted] = out.terms_.try_emplace(ml * mr, product);
        if (!inserted) it->second += product;
      }
    }
    std::erase_if(out.terms_, [](const auto& kv) { return kv.second == 0; });
    return out;
  }

  friend bool operator==(const Polynomial& lhs, const Polynomial& rhs) {
    if (lhs.terms_.size() != rhs.terms_.size()) return false;
    auto it = rhs.terms_.begin();
    for (const auto& [m, c] : lhs.terms_) {
      if (!(m == it->first) || c != it->second) return false;
      ++it;
    }
    return true;
  }

 private:
  void accumulate(const Monomial& m, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (inserted) return;
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }

  TermMap terms_;
};

inline Polynomial pow(Polynomial base, std::uint64_t exponent) {
  Polynomial result(1);
  while (exponent > 0) {
    if (exponent & 1U) result *= base;
    exponent >>= 1U;
    if (exponent > 0) base = base * base;
  }
  return result;
}

inline Polynomial partial(const Polynomial& p, Axis axis) {
  Polynomial out;
  for (const auto& [m, c] : p.terms()) {
    auto e = m[axis];
    if (e == 0) continue;
    Monomial lowered = m;
    lowered.exponents[index_of(axis)] = e - 1;
    out += Polynomial::term(lowered, c * e);
  }
  return out;
}

namespace detail {

/// Lazily extended table of powers of one polynomial.
class PowerCache {
 public:
  explicit PowerCache(const Polynomial& base) : powers_{Polynomial(1), base} {}

  const Polynomial& get(std::uint32_t n) {
    while (powers_.size() <= n) powers_.push_back(powers_.back() * powers_[1]);
    return powers_[n];
  }

 private:
  std::vector<Polynomial> powers_;
};

}  // namespace detail

/// Simultaneously replaces x, y, z by sx, sy, sz.
inline Polynomial substitute(const Polynomial& p, const Polynomial& sx, const Polynomial& sy,
                             const Polynomial& sz) {
  detail::PowerCache px(sx), py(sy), pz(sz);
  // Group by the (x, y) exponent pair so each x^i y^j product is formed once.
  std::map<std::pair<std::uint32_t, std::uint32_t>, Polynomial> z_parts;
  for (const auto& [m, c] : p.terms()) {
    z_parts[{m.exponents[0], m.exponents[1]}] += Polynomial(c) * pz.get(m.exponents[2]);
  }
  Polynomial out;
  for (const auto& [xy, zpart] : z_parts) {
    out += px.get(xy.first) * py.get(xy.second) * zpart;
  }
  return out;
}

inline Rational evaluate(const Polynomial& p, const Point& point) {
  Rational sum = 0;
  Rational term;
  for (const auto& [m, c] : p.terms()) {
    term = c;
    for (Axis axis : kAxes) {
      Rational power;
      mpz_pow_ui(power.get_num_mpz_t(), point[index_of(axis)].get_num_mpz_t(), m[axis]);
      mpz_pow_ui(power.get_den_mpz_t(), point[index_of(axis)].get_den_mpz_t(), m[axis]);
      term *= power;
    }
    sum += term;
  }
  return sum;
}

inline Integer binomial(unsigned long n, unsigned long k) {
  if (k > n) return 0;
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

}  // namespace tamegen
