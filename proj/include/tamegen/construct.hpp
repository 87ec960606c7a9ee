#pragma once

#include <algorithm>
#include <array>
#include <optional>
#include <string>
#include <vector>

#include "tamegen/parallel.hpp"
#include "tamegen/verifier.hpp"

namespace tamegen {

/// Raised when a construction fails its own verification. Indicates a bug.
class VerificationFailure : public Error {
 public:
  using Error::Error;
};

struct Normalized {
  TargetTriple target;
  std::array<std::size_t, 3> input_order{0, 1, 2};
};

inline Normalized normalize(std::int64_t d1, std::int64_t d2, std::int64_t d3) {
  const std::array<std::int64_t, 3> input{d1, d2, d3};
  for (auto d : input) {
    if (d < 1 || d > kMaxDegreeInput)
      throw Error("degree " + std::to_string(d) + " outside [1, " + std::to_string(kMaxDegreeInput) + "]");
  }
  std::array<std::size_t, 3> slot_to_input{0, 1, 2};
  std::stable_sort(slot_to_input.begin(), slot_to_input.end(),
                   [&](std::size_t l, std::size_t r) { return input[l] < input[r]; });
  Normalized out;
  out.target = {input[slot_to_input[0]], input[slot_to_input[1]], input[slot_to_input[2]]};
  for (std::size_t s = 0; s < 3; ++s) out.input_order[slot_to_input[s]] = s;
  return out;
}

/// The unverified plan chosen by the dispatcher, or none.
inline std::optional<ConstructionPlan> select_plan(const TargetTriple& t) {
  const auto [a, b, c] = std::array{t.a, t.b, t.c};
  if (a <= 2) return dispatch_small_a(a, b, c);
  if (b % a == 0) return detail::divisible_plan(a, b, c);
  if (auto w = semigroup_decompose(a, b, c)) return detail::semigroup_plan(a, b, c, *w);
  ThresholdInfo info = theorem_threshold(a, b);
  if (c >= info.e - a) return build_step1(a, b, c);
  if (c >= info.c0) return build_step2(a, b, c);
  return std::nullopt;
}

struct Construction {
  Normalized input;
  std::optional<ConstructionPlan> plan;  // empty means Unknown
  VerificationReport report;

  bool unknown() const { return !plan.has_value(); }
};

/// Accepts the degrees in any order. A returned plan has always passed
/// verify_plan; Unknown means no construction here applies, nothing more.
inline Construction construct(std::int64_t d1, std::int64_t d2, std::int64_t d3) {
  Construction out;
  out.input = normalize(d1, d2, d3);
  out.plan = select_plan(out.input.target);
  if (!out.plan) return out;
  out.plan->input_order = out.input.input_order;
  out.report = verify_plan(*out.plan, out.input.target);
  if (!out.report.passed()) {
    std::string message = "construction for " + detail::format_mdeg(out.input.target.as_multidegree()) +
                          " failed verification";
    for (const auto& d : out.report.details) message += "; " + d;
    throw VerificationFailure(message);
  }
  return out;
}

struct AtlasRow {
  std::int64_t c = 0;
  std::optional<CaseKind> kind;  // empty means Unknown
};

/// One row per c in (b, c_max].
inline std::vector<AtlasRow> atlas(std::int64_t a, std::int64_t b, std::int64_t c_max) {
  detail::require(a >= 1 && a <= b, "requires 1 <= a <= b");
  if (c_max <= b) return {};
  auto count = static_cast<std::size_t>(c_max - b);
  return parallel_map(count, [&](std::size_t i) {
    std::int64_t c = b + 1 + static_cast<std::int64_t>(i);
    Construction result = construct(a, b, c);
    return AtlasRow{c, result.plan ? std::optional<CaseKind>(result.plan->kind) : std::nullopt};
  });
}

struct TamePairReport {
  std::int64_t a = 0, b = 0;
  std::int64_t c0 = 0;          // every c >= c0 is covered by the threshold theorem
  std::int64_t window_end = 0;  // last c probed
  bool certified = false;
  std::vector<std::int64_t> uncovered;
  std::vector<AtlasRow> rows;
};

/// Constructs every c in (b, max(c0, b + 1) + probe_limit]. Together with the
/// threshold guarantee for c >= c0, an empty uncovered list certifies the pair.
inline TamePairReport certify_pair(std::int64_t a, std::int64_t b, std::int64_t probe_limit) {
  detail::require(a >= 1 && a < b, "requires a < b");
  detail::require(b % a != 0, "requires a not dividing b");
  detail::require(probe_limit >= 1, "probe limit must be positive");
  TamePairReport report;
  report.a = a;
  report.b = b;
  // a <= 2 is covered for every c by the small-a constructions.
  report.c0 = a <= 2 ? b + 1 : theorem_threshold(a, b).c0;
  report.window_end = std::max(report.c0, b + 1) + probe_limit;
  report.rows = atlas(a, b, report.window_end);
  for (const auto& row : report.rows)
    if (!row.kind) report.uncovered.push_back(row.c);
  report.certified = report.uncovered.empty();
  return report;
}

}  // namespace tamegen
