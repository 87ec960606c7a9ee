#pragma once

// Human-readable and JSON renderings of plans, reports and sweeps. Exact
// values are always strings ("p/q"), never floating point.

#include <json.hpp>

#include <sstream>
#include <string>

#include "tamegen/construct.hpp"
#include "tamegen/text.hpp"

namespace tamegen {

using json = nlohmann::ordered_json;

inline json to_json(const Multidegree& m) { return json::array({m[0], m[1], m[2]}); }

inline json to_json(const Factor& factor) {
  if (const auto* e = std::get_if<Elementary>(&factor))
    return {{"type", "elementary"}, {"axis", std::string(1, axis_name(e->axis()))}, {"g", to_string(e->g())}};
  json rows = json::array();
  for (const auto& row : std::get<Linear>(factor).matrix())
    rows.push_back(json::array({to_string(row[0]), to_string(row[1]), to_string(row[2])}));
  return {{"type", "linear"}, {"matrix", rows}};
}

inline json to_json(const TameWord& word) {
  json out = json::array();
  for (const auto& f : word.factors) out.push_back(to_json(f));
  return out;
}

inline json to_json(const PolyMap& map) {
  return json::array({to_string(map.coords[0]), to_string(map.coords[1]), to_string(map.coords[2])});
}

inline json to_json(const CaseParameters& parameters) {
  return std::visit(
      [](const auto& p) -> json {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, SemigroupParams>) {
          return {{"k", p.witness.k}, {"l", p.witness.l}};
        } else if constexpr (std::is_same_v<T, DivisibleParams>) {
          return {{"d", p.d}};
        } else if constexpr (std::is_same_v<T, Step1Params>) {
          return {{"e", p.e}, {"k", p.k}, {"m", p.m}};
        } else {
          json u = json::array();
          for (const auto& value : p.u) u.push_back(to_string(value));
          return {{"e", p.e}, {"m", p.m}, {"u", u}};
        }
      },
      parameters);
}

inline json to_json(const VerificationReport& r) {
  auto tri = [](const std::optional<bool>& v) -> json { return v ? json(*v) : json(nullptr); };
  json out;
  out["passed"] = r.passed();
  out["multidegree_ok"] = r.multidegree_ok;
  out["multidegree"] = r.actual_mdeg ? to_json(*r.actual_mdeg) : json(nullptr);
  out["jacobian_constant"] = r.jacobian_constant ? json(to_string(*r.jacobian_constant)) : json(nullptr);
  out["jacobian_ok"] = r.jacobian_ok;
  out["inverse_identity_ok"] = r.inverse_identity_ok;
  out["cancellation_ok"] = tri(r.cancellation_ok);
  out["leading_term_ok"] = tri(r.leading_term_ok);
  out["degree_formula_ok"] = tri(r.degree_formula_ok);
  out["details"] = r.details;
  return out;
}

inline json to_json(const Construction& result, bool include_map) {
  json out;
  out["target"] = to_json(result.input.target.as_multidegree());
  out["input_order"] = json::array(
      {result.input.input_order[0], result.input.input_order[1], result.input.input_order[2]});
  if (!result.plan) {
    out["status"] = "unknown";
    return out;
  }
  const auto& plan = *result.plan;
  out["status"] = "constructed";
  out["case"] = std::string(case_name(plan.kind));
  out["parameters"] = to_json(plan.parameters);
  out["word"] = to_json(plan.word);
  if (plan.reordered()) {
    out["input_order_word"] = to_json(ordered_word(plan));
    out["input_order_multidegree"] = to_json(input_multidegree(plan));
  }
  if (include_map) out["map"] = to_json(expand_word(plan.word));
  out["multidegree"] = to_json(plan.predicted_mdeg);
  out["verification"] = to_json(result.report);
  return out;
}

inline std::string format_parameters(const CaseParameters& parameters) {
  return std::visit(
      [](const auto& p) -> std::string {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, SemigroupParams>) {
          return "k=" + std::to_string(p.witness.k) + " l=" + std::to_string(p.witness.l);
        } else if constexpr (std::is_same_v<T, DivisibleParams>) {
          return "d=" + std::to_string(p.d);
        } else if constexpr (std::is_same_v<T, Step1Params>) {
          return "e=" + std::to_string(p.e) + " k=" + std::to_string(p.k) + " m=" + std::to_string(p.m);
        } else {
          std::string u;
          for (const auto& value : p.u) u += (u.empty() ? "" : ", ") + to_string(value);
          return "e=" + std::to_string(p.e) + " m=" + std::to_string(p.m) + " u=[" + u + "]";
        }
      },
      parameters);
}

inline std::string format_report(const VerificationReport& r) {
  auto tri = [](const std::optional<bool>& v) { return v ? (*v ? "ok" : "FAILED") : "n/a"; };
  std::ostringstream out;
  out << "verification: " << (r.passed() ? "passed" : "FAILED") << "\n"
      << "  multidegree:      " << (r.multidegree_ok ? "ok" : "FAILED");
  if (r.actual_mdeg) out << " " << detail::format_mdeg(*r.actual_mdeg);
  out << "\n  jacobian:         " << (r.jacobian_ok ? "ok" : "FAILED") << " ("
      << (r.jacobian_constant ? to_string(*r.jacobian_constant) : std::string("not constant")) << ")\n"
      << "  inverse identity: " << (r.inverse_identity_ok ? "ok" : "FAILED") << "\n"
      << "  cancellation:     " << tri(r.cancellation_ok) << "\n"
      << "  leading term:     " << tri(r.leading_term_ok) << "\n"
      << "  degree formula:   " << tri(r.degree_formula_ok) << "\n";
  for (const auto& d : r.details) out << "  - " << d << "\n";
  return out.str();
}

inline std::string format_construction(const Construction& result, bool include_map) {
  std::ostringstream out;
  out << "target: " << detail::format_mdeg(result.input.target.as_multidegree()) << "\n";
  if (!result.plan) {
    out << "result: unknown (no construction applies; this is not a proof of non-existence)\n";
    return out.str();
  }
  const auto& plan = *result.plan;
  out << "case: " << case_name(plan.kind) << "\n"
      << "parameters: " << format_parameters(plan.parameters) << "\n"
      << "word (first line applied first):\n";
  for (const auto& f : plan.word.factors) out << "  " << to_string(f) << "\n";
  if (plan.reordered()) {
    out << "input-order word (first line applied first):\n";
    for (const auto& f : ordered_word(plan).factors) out << "  " << to_string(f) << "\n";
    out << "input-order multidegree: " << detail::format_mdeg(input_multidegree(plan)) << "\n";
  }
  if (include_map) {
    PolyMap map = expand_word(plan.word);
    out << "map:\n";
    for (std::size_t i = 0; i < 3; ++i) out << "  F" << i + 1 << " = " << to_string(map.coords[i]) << "\n";
  }
  out << "multidegree: " << detail::format_mdeg(plan.predicted_mdeg) << "\n" << format_report(result.report);
  return out.str();
}

}  // namespace tamegen
