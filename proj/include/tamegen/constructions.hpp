#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "tamegen/polymap.hpp"

namespace tamegen {

/// Inputs above this bound would push exponents past the monomial range.
inline constexpr std::int64_t kMaxDegreeInput = 100000;

/// A multidegree target sorted so that a <= b <= c.
struct TargetTriple {
  std::int64_t a = 1, b = 1, c = 1;

  Multidegree as_multidegree() const { return {a, b, c}; }
  friend bool operator==(const TargetTriple&, const TargetTriple&) = default;
};

/// c = k*a + l*b.
struct SemigroupWitness {
  std::int64_t k = 0, l = 0;
  friend bool operator==(const SemigroupWitness&, const SemigroupWitness&) = default;
};

struct ThresholdInfo {
  std::int64_t e = 0;   // lcm(a, b)
  std::int64_t r = 0;   // min{b-1, (a-1)(floor(b/a)+1)}
  std::int64_t c0 = 0;  // every c >= c0 is constructible
  bool remark1_applied = false;
};

using UCoefficients = std::vector<Rational>;

enum class CaseKind { Fact1Semigroup, Fact1Divisible, Step1, Step1DegenerateM0, Step2 };

inline std::string_view case_name(CaseKind kind) {
  switch (kind) {
    case CaseKind::Fact1Semigroup: return "fact1-semigroup";
    case CaseKind::Fact1Divisible: return "fact1-divisible";
    case CaseKind::Step1: return "step1";
    case CaseKind::Step1DegenerateM0: return "step1-m0";
    case CaseKind::Step2: return "step2";
  }
  return "?";
}

struct SemigroupParams {
  SemigroupWitness witness;
};
struct DivisibleParams {
  std::int64_t d = 0;
};
struct Step1Params {
  std::int64_t e = 0, k = 0, m = 0;
};
struct Step2Params {
  std::int64_t e = 0, m = 0;
  UCoefficients u;
};

using CaseParameters = std::variant<SemigroupParams, DivisibleParams, Step1Params, Step2Params>;

struct ConstructionPlan {
  CaseKind kind{};
  CaseParameters parameters;
  TargetTriple target;  // sorted
  TameWord word;        // realizes target in sorted order
  Multidegree predicted_mdeg{};
  // input_order[i] is the sorted slot holding the i-th input degree.
  std::array<std::size_t, 3> input_order{0, 1, 2};

  bool reordered() const { return input_order != std::array<std::size_t, 3>{0, 1, 2}; }
};

namespace detail {

inline std::uint32_t exponent(std::int64_t n) {
  if (n < 0 || n > std::int64_t{UINT32_MAX}) throw Error("exponent out of range: " + std::to_string(n));
  return static_cast<std::uint32_t>(n);
}

inline Polynomial mono(std::int64_t ex, std::int64_t ey, std::int64_t ez, const Rational& coefficient = 1) {
  return Polynomial::term(Monomial(exponent(ex), exponent(ey), exponent(ez)), coefficient);
}

inline void require(bool condition, const std::string& message) {
  if (!condition) throw Error(message);
}

inline void require_step_pair(std::int64_t a, std::int64_t b) {
  require(b > a && a > 2, "requires b > a > 2");
  require(b % a != 0, "requires a not dividing b");
}

/// Sum over ordered tuples (k_1..k_parts), 1 <= k_t <= max_part, summing to
/// total, of u_{k_1} * ... * u_{k_parts}.
inline Rational composition_sum(std::int64_t total, std::int64_t parts, std::int64_t max_part,
                                const UCoefficients& u) {
  if (parts == 0) return total == 0 ? 1 : 0;
  if (total < parts) return 0;
  Rational sum = 0;
  for (std::int64_t first = 1; first <= std::min(max_part, total - (parts - 1)); ++first)
    sum += u[static_cast<std::size_t>(first - 1)] * composition_sum(total - first, parts - 1, max_part, u);
  return sum;
}

}  // namespace detail

/// Witness with the smallest l, or none when c is outside the semigroup <a, b>.
inline std::optional<SemigroupWitness> semigroup_decompose(std::int64_t a, std::int64_t b, std::int64_t c) {
  detail::require(a >= 1 && a <= b, "requires 1 <= a <= b");
  if (c < 0) return std::nullopt;
  for (std::int64_t l = 0; l <= c / b; ++l) {
    std::int64_t rest = c - l * b;
    if (rest % a == 0) return SemigroupWitness{rest / a, l};
  }
  return std::nullopt;
}

/// (a-1)(b-1): every c at or above it lies in <a, b> when gcd(a, b) = 1.
inline std::int64_t sylvester_bound(std::int64_t a, std::int64_t b) {
  detail::require(b > a && a > 2, "requires b > a > 2");
  detail::require(std::gcd(a, b) == 1, "Sylvester bound requires gcd(a, b) = 1");
  return (a - 1) * (b - 1);
}

inline ThresholdInfo theorem_threshold(std::int64_t a, std::int64_t b) {
  detail::require_step_pair(a, b);
  ThresholdInfo info;
  info.e = std::lcm(a, b);
  info.r = std::min(b - 1, (a - 1) * (b / a + 1));
  info.remark1_applied = info.r == b - 1;
  info.c0 = info.remark1_applied ? info.e - b : info.e - info.r;
  return info;
}

/// (x, y, z + x^k y^l) o (x + z^a, y + z^b, z).
inline TameWord build_fact1_semigroup(std::int64_t a, std::int64_t b, const SemigroupWitness& w) {
  detail::require(a >= 1 && b >= a, "requires 1 <= a <= b");
  detail::require(w.k >= 0 && w.l >= 0, "inconsistent witness: negative coefficient");
  detail::require(w.k + w.l > 0, "inconsistent witness: k = l = 0 realizes no positive c");
  using detail::mono;
  return TameWord{{
      Elementary(Axis::X, mono(0, 0, a)),
      Elementary(Axis::Y, mono(0, 0, b)),
      Elementary(Axis::Z, mono(w.k, w.l, 0)),
  }};
}

/// (x, y + x^d, z) o (x + y^a, y, z + y^c), multidegree (a, d*a, c).
inline TameWord build_fact1_divisible(std::int64_t a, std::int64_t d, std::int64_t c) {
  detail::require(a >= 1 && d >= 1, "requires a, d >= 1");
  detail::require(c >= a * d, "requires c >= b = d*a");
  using detail::mono;
  return TameWord{{
      Elementary(Axis::X, mono(0, a, 0)),
      Elementary(Axis::Z, mono(0, c, 0)),
      Elementary(Axis::Y, mono(d, 0, 0)),
  }};
}

namespace detail {

inline ConstructionPlan semigroup_plan(std::int64_t a, std::int64_t b, std::int64_t c, const SemigroupWitness& w) {
  return ConstructionPlan{CaseKind::Fact1Semigroup, SemigroupParams{w}, {a, b, c}, build_fact1_semigroup(a, b, w),
                          {a, b, w.k * a + w.l * b}};
}

inline ConstructionPlan divisible_plan(std::int64_t a, std::int64_t b, std::int64_t c) {
  std::int64_t d = b / a;
  return ConstructionPlan{CaseKind::Fact1Divisible, DivisibleParams{d}, {a, b, c}, build_fact1_divisible(a, d, c),
                          {a, d * a, c}};
}

}  // namespace detail

inline ConstructionPlan dispatch_small_a(std::int64_t a, std::int64_t b, std::int64_t c) {
  detail::require(a >= 1 && a <= 2, "requires a <= 2");
  detail::require(a <= b && b <= c, "requires a <= b <= c");
  if (a == 1) return detail::semigroup_plan(a, b, c, {c, 0});
  if (b % 2 == 0) return detail::divisible_plan(a, b, c);
  // b odd: c - b even gives c = b + 2t, otherwise c itself is even.
  if ((c - b) % 2 == 0) return detail::semigroup_plan(a, b, c, {(c - b) / 2, 1});
  return detail::semigroup_plan(a, b, c, {c / 2, 0});
}

/// Word for (x, y, z + x^k (x^{e/a} - y^{e/b})) o (x + z^a + z^m, y + z^b, z).
inline TameWord step1_word(std::int64_t a, std::int64_t b, std::int64_t k, std::int64_t m) {
  using detail::mono;
  std::int64_t e = std::lcm(a, b);
  return TameWord{{
      Elementary(Axis::X, mono(0, 0, a) + mono(0, 0, m)),
      Elementary(Axis::Y, mono(0, 0, b)),
      Elementary(Axis::Z, mono(k + e / a, 0, 0) - mono(k, e / b, 0)),
  }};
}

inline ConstructionPlan build_step1(std::int64_t a, std::int64_t b, std::int64_t c) {
  detail::require_step_pair(a, b);
  std::int64_t e = std::lcm(a, b);
  detail::require(c >= e - a, "requires c >= lcm(a, b) - a");
  // c = e + (k - 1) a + m with k >= 0 and 0 <= m < a.
  std::int64_t shifted = c - e + a;
  std::int64_t k = shifted / a;
  std::int64_t m = shifted % a;
  if (m == 0) {
    using detail::mono;
    TameWord word{{
        Elementary(Axis::X, mono(0, 0, a)),
        Elementary(Axis::Y, mono(0, 0, b)),
        Elementary(Axis::Z, mono(e / a + k - 1, 0, 0)),
    }};
    return ConstructionPlan{CaseKind::Step1DegenerateM0, Step1Params{e, k, 0}, {a, b, c}, std::move(word),
                            {a, b, (e / a + k - 1) * a}};
  }
  return ConstructionPlan{CaseKind::Step1, Step1Params{e, k, m}, {a, b, c}, step1_word(a, b, k, m),
                          {a, b, k * a + m + e - a}};
}

inline UCoefficients compute_u(std::int64_t a, std::int64_t b) {
  detail::require_step_pair(a, b);
  const std::int64_t e = std::lcm(a, b);
  const std::int64_t q = b / a;
  const auto ea = static_cast<unsigned long>(e / a);
  const auto eb = static_cast<unsigned long>(e / b);
  UCoefficients u;
  u.reserve(static_cast<std::size_t>(q));
  u.push_back(make_rational(b, a));
  for (std::int64_t i = 2; i <= q; ++i) {
    Rational bracket = Rational(binomial(ea, static_cast<unsigned long>(i)));
    for (std::int64_t j = 2; j <= std::min(i, q); ++j) {
      // u_i itself only enters through j = 1, so the partial list suffices.
      bracket -= Rational(binomial(eb, static_cast<unsigned long>(j))) * detail::composition_sum(i, j, i - 1, u);
    }
    u.push_back(make_rational(b, e) * bracket);
  }
  return u;
}

/// u(x, z) = sum_k u_k x^k z^{b - k a}.
inline Polynomial u_polynomial(std::int64_t a, std::int64_t b, const UCoefficients& u) {
  Polynomial out;
  for (std::size_t idx = 0; idx < u.size(); ++idx) {
    auto k = static_cast<std::int64_t>(idx) + 1;
    out += detail::mono(k, 0, b - k * a, u[idx]);
  }
  return out;
}

/// Word for (x, y, z + x^{e/a} - y^{e/b}) o (x + z^a, y + z^b + z^m + u(x, z), z).
/// The y factor comes first because u is written in the original x.
inline TameWord step2_word(std::int64_t a, std::int64_t b, std::int64_t m, const UCoefficients& u) {
  using detail::mono;
  std::int64_t e = std::lcm(a, b);
  return TameWord{{
      Elementary(Axis::Y, mono(0, 0, b) + mono(0, 0, m) + u_polynomial(a, b, u)),
      Elementary(Axis::X, mono(0, 0, a)),
      Elementary(Axis::Z, mono(e / a, 0, 0) - mono(0, e / b, 0)),
  }};
}

inline ConstructionPlan build_step2(std::int64_t a, std::int64_t b, std::int64_t c) {
  ThresholdInfo info = theorem_threshold(a, b);
  detail::require(c >= info.c0 && c < info.e - a, "requires c0 <= c < lcm(a, b) - a");
  std::int64_t m = b + c - info.e;
  detail::require(m > 0 && m < b, "requires 0 < m < b for m = b + c - lcm(a, b)");
  UCoefficients u = compute_u(a, b);
  TameWord word = step2_word(a, b, m, u);
  return ConstructionPlan{CaseKind::Step2, Step2Params{info.e, m, std::move(u)}, {a, b, c}, std::move(word), {a, b, c}};
}

/// Predicted third degree of a Step 2 map:
/// max{e - b + 1, e - (a - 1)(floor(b/a) + 1), m + e - b}.
inline std::int64_t step2_degree_formula(std::int64_t a, std::int64_t b, std::int64_t c) {
  std::int64_t e = std::lcm(a, b);
  std::int64_t m = b + c - e;
  return std::max({e - b + 1, e - (a - 1) * (b / a + 1), m + e - b});
}

}  // namespace tamegen
