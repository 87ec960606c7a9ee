#pragma once

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "tamegen/constructions.hpp"

namespace tamegen {

struct VerificationReport {
  std::optional<Multidegree> actual_mdeg;
  bool multidegree_ok = false;
  std::optional<Rational> jacobian_constant;
  bool jacobian_ok = false;
  bool inverse_identity_ok = false;
  std::optional<bool> cancellation_ok;     // Step 2 only
  std::optional<bool> leading_term_ok;     // Step 1 with m > 0 only
  std::optional<bool> degree_formula_ok;   // Step 2 only
  std::vector<std::string> details;

  bool passed() const {
    return multidegree_ok && jacobian_ok && inverse_identity_ok && cancellation_ok.value_or(true) &&
           leading_term_ok.value_or(true) && degree_formula_ok.value_or(true);
  }
};

namespace detail {

inline std::string format_mdeg(const Multidegree& m) {
  return "(" + std::to_string(m[0]) + "," + std::to_string(m[1]) + "," + std::to_string(m[2]) + ")";
}

inline Rational linear_determinant_product(const TameWord& word) {
  Rational product = 1;
  for (const auto& factor : word.factors)
    if (const auto* lin = std::get_if<Linear>(&factor)) product *= lin->determinant();
  return product;
}

/// Fills the checks that apply to any word: multidegree, Jacobian, inverse.
inline void check_word(const TameWord& word, const PolyMap& expanded, const std::optional<Multidegree>& expected,
                       VerificationReport& report) {
  bool has_zero = false;
  for (const auto& coordinate : expanded.coords) has_zero = has_zero || coordinate.is_zero();
  if (has_zero) {
    report.details.push_back("expanded map has a zero coordinate");
  } else {
    report.actual_mdeg = multidegree(expanded);
  }
  if (expected) {
    report.multidegree_ok = report.actual_mdeg == expected;
    if (!report.multidegree_ok) {
      report.details.push_back("multidegree mismatch: expected " + format_mdeg(*expected) + ", got " +
                               (report.actual_mdeg ? format_mdeg(*report.actual_mdeg) : std::string("none")));
    }
  } else {
    report.multidegree_ok = report.actual_mdeg.has_value();
  }

  Polynomial jac = jacobian_det(expanded);
  report.jacobian_constant = jac.constant_value();
  Rational want = linear_determinant_product(word);
  report.jacobian_ok = report.jacobian_constant && *report.jacobian_constant == want;
  if (!report.jacobian_ok) report.details.push_back("Jacobian determinant is not the constant " + to_string(want));

  PolyMap round_trip = expanded;
  for (const auto& factor : invert_word(word).factors) round_trip = apply_factor(factor, round_trip);
  const PolyMap identity = PolyMap::identity();
  report.inverse_identity_ok =
      maps_equal_probabilistic(round_trip, identity, 2, 0x7a3e) && round_trip == identity;
  if (!report.inverse_identity_ok) report.details.push_back("word followed by its inverse is not the identity");
}

inline std::vector<std::int64_t> uncancelled_indices(const Polynomial& third, std::int64_t a, std::int64_t b) {
  std::int64_t e = std::lcm(a, b);
  std::vector<std::int64_t> bad;
  for (std::int64_t i = 1; i <= b / a; ++i)
    if (third.coefficient(Monomial(exponent(i), 0, exponent(e - i * a))) != 0) bad.push_back(i);
  return bad;
}

}  // namespace detail

/// Expands v1 - v2 for the given u and reports whether every x^i z^{e - i a},
/// 1 <= i <= floor(b/a), has coefficient zero. m only shifts terms that never
/// collide with those monomials; any 0 < m < b gives the same answer.
inline bool cancellation_check(std::int64_t a, std::int64_t b, const UCoefficients& u, std::int64_t m = 1) {
  detail::require_step_pair(a, b);
  if (static_cast<std::int64_t>(u.size()) != b / a)
    throw Error("u has length " + std::to_string(u.size()) + ", expected floor(b/a) = " + std::to_string(b / a));
  detail::require(m > 0 && m < b, "requires 0 < m < b");
  using detail::mono;
  std::int64_t e = std::lcm(a, b);
  Polynomial x_image = mono(1, 0, 0) + mono(0, 0, a);
  Polynomial y_image = mono(0, 1, 0) + mono(0, 0, b) + mono(0, 0, m) + u_polynomial(a, b, u);
  Polynomial difference = pow(x_image, static_cast<std::uint64_t>(e / a)) - pow(y_image, static_cast<std::uint64_t>(e / b));
  return detail::uncancelled_indices(difference, a, b).empty();
}

/// Checks the Step 2 degree formula against c and against the expanded map.
inline bool degree_formula_check(std::int64_t a, std::int64_t b, std::int64_t c) {
  ConstructionPlan plan = build_step2(a, b, c);  // throws when Step 2 does not apply
  std::int64_t formula = step2_degree_formula(a, b, c);
  PolyMap expanded = expand_word(plan.word);
  Degree actual = expanded.coords[2].total_degree();
  return formula == c && actual.is_finite() && actual.value() == c;
}

/// Appends the coordinate permutation that restores the caller's input order.
inline TameWord ordered_word(const ConstructionPlan& plan) {
  if (!plan.reordered()) return plan.word;
  Matrix3 permutation;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) permutation[i][j] = plan.input_order[i] == j ? 1 : 0;
  TameWord word = plan.word;
  word.factors.emplace_back(Linear(permutation));
  return word;
}

inline Multidegree input_multidegree(const ConstructionPlan& plan) {
  Multidegree sorted = plan.target.as_multidegree();
  return {sorted[plan.input_order[0]], sorted[plan.input_order[1]], sorted[plan.input_order[2]]};
}

inline VerificationReport verify_plan(const ConstructionPlan& plan, const TargetTriple& target) {
  VerificationReport report;
  const Multidegree expected = target.as_multidegree();
  if (plan.predicted_mdeg != expected) {
    report.details.push_back("predicted multidegree " + detail::format_mdeg(plan.predicted_mdeg) +
                             " differs from target " + detail::format_mdeg(expected));
  }
  PolyMap expanded = expand_word(plan.word);
  detail::check_word(plan.word, expanded, expected, report);
  report.multidegree_ok = report.multidegree_ok && plan.predicted_mdeg == expected;

  const auto [a, b, c] = std::array{target.a, target.b, target.c};
  if (const auto* p = std::get_if<Step2Params>(&plan.parameters)) {
    auto bad = detail::uncancelled_indices(expanded.coords[2], a, b);
    report.cancellation_ok = bad.empty() && cancellation_check(a, b, p->u, p->m);
    if (!*report.cancellation_ok) report.details.push_back("x^i z^(e-ia) terms do not cancel");
    report.degree_formula_ok = step2_degree_formula(a, b, c) == c && report.actual_mdeg &&
                               (*report.actual_mdeg)[2] == c;
    if (!*report.degree_formula_ok) report.details.push_back("Step 2 degree formula disagrees with expansion");
  }
  if (plan.kind == CaseKind::Step1) {
    const auto& p = std::get<Step1Params>(plan.parameters);
    using detail::mono;
    Polynomial v = substitute(mono(p.e / a, 0, 0) - mono(0, p.e / b, 0), mono(1, 0, 0) + mono(0, 0, a) + mono(0, 0, p.m),
                              mono(0, 1, 0) + mono(0, 0, b), Polynomial::z());
    std::int64_t top = p.m + p.e - a;
    Degree dv = v.total_degree();
    report.leading_term_ok = dv.is_finite() && dv.value() == top &&
                             v.coefficient(Monomial(0, 0, detail::exponent(top))) == make_rational(p.e / a, 1);
    if (!*report.leading_term_ok) report.details.push_back("leading term of v is not (e/a) z^(m+e-a)");
  }

  if (plan.reordered()) {
    VerificationReport ordered;
    TameWord word = ordered_word(plan);
    detail::check_word(word, expand_word(word), input_multidegree(plan), ordered);
    if (!ordered.passed()) {
      report.multidegree_ok = report.multidegree_ok && ordered.multidegree_ok;
      report.jacobian_ok = report.jacobian_ok && ordered.jacobian_ok;
      report.inverse_identity_ok = report.inverse_identity_ok && ordered.inverse_identity_ok;
      for (auto& d : ordered.details) report.details.push_back("input order: " + d);
    }
  }
  return report;
}

/// Verification of an externally supplied word.
inline VerificationReport verify_word(const TameWord& word, const std::optional<Multidegree>& expected) {
  VerificationReport report;
  detail::check_word(word, expand_word(word), expected, report);
  return report;
}

}  // namespace tamegen
