// Command-line front end: construct, threshold, verify, atlas, certify-pair.
//
// Exit codes: 0 success, 1 usage or parse error, 2 unknown / uncovered,
// 3 verification failure.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <numeric>
#include <sstream>
#include <string>

#include "tamegen/report.hpp"

namespace {

using namespace tamegen;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitUnknown = 2;
constexpr int kExitVerification = 3;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::int64_t parse_positive(const std::string& text, const std::string& what) {
  if (text.empty() || text.size() > 12 || text.find_first_not_of("0123456789") != std::string::npos)
    throw UsageError(what + " must be a decimal positive integer, got '" + text + "'");
  std::int64_t value = std::stoll(text);
  if (value < 1) throw UsageError(what + " must be positive");
  return value;
}

Multidegree parse_triple(const std::string& text) {
  Multidegree out{};
  std::stringstream in(text);
  std::string part;
  std::size_t i = 0;
  while (std::getline(in, part, ',')) {
    if (i == 3) throw UsageError("--expect takes exactly three values a,b,c");
    out[i++] = parse_positive(part, "--expect entry");
  }
  if (i != 3) throw UsageError("--expect takes exactly three values a,b,c");
  return out;
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

int run_construct(const std::string& a, const std::string& b, const std::string& c, bool as_json, bool no_expand) {
  Construction result;
  try {
    result = construct(parse_positive(a, "a"), parse_positive(b, "b"), parse_positive(c, "c"));
  } catch (const VerificationFailure& failure) {
    std::cerr << "internal verification failure: " << failure.what() << "\n";
    return kExitVerification;
  }
  if (as_json) {
    emit(to_json(result, !no_expand));
  } else {
    std::cout << format_construction(result, !no_expand);
  }
  return result.unknown() ? kExitUnknown : kExitOk;
}

int run_threshold(const std::string& a_text, const std::string& b_text, bool as_json) {
  std::int64_t a = parse_positive(a_text, "a");
  std::int64_t b = parse_positive(b_text, "b");
  if (a > b) std::swap(a, b);
  json out;
  out["a"] = a;
  out["b"] = b;
  out["e"] = std::lcm(a, b);
  bool small = a <= 2 || b % a == 0;
  if (small) {
    out["covered_by"] = "fact1";
    out["c0"] = b;
  } else {
    ThresholdInfo info = theorem_threshold(a, b);
    out["covered_by"] = "theorem";
    out["r"] = info.r;
    out["c0"] = info.c0;
    out["remark1_applied"] = info.remark1_applied;
  }
  if (a > 2 && b > a && std::gcd(a, b) == 1) out["sylvester_bound"] = sylvester_bound(a, b);
  if (as_json) {
    emit(out);
    return kExitOk;
  }
  std::cout << "pair: (" << a << "," << b << ")\n" << "e = lcm(a,b) = " << out["e"].get<std::int64_t>() << "\n";
  if (small) {
    std::cout << "every c >= b is covered directly (a <= 2 or a | b)\n";
  } else {
    std::cout << "r = " << out["r"].get<std::int64_t>() << "\n"
              << "c0 = " << out["c0"].get<std::int64_t>() << "\n"
              << "remark1 refinement: " << (out["remark1_applied"].get<bool>() ? "applied" : "not applied") << "\n";
  }
  if (out.contains("sylvester_bound"))
    std::cout << "sylvester bound (a-1)(b-1) = " << out["sylvester_bound"].get<std::int64_t>() << "\n";
  return kExitOk;
}

int run_verify(const std::string& path, const std::string& expect, bool as_json) {
  std::ifstream file(path);
  if (!file) throw UsageError("cannot open word file '" + path + "'");
  std::stringstream buffer;
  buffer << file.rdbuf();
  TameWord word = parse_word(buffer.str());
  std::optional<Multidegree> expected;
  if (!expect.empty()) expected = parse_triple(expect);
  VerificationReport report = verify_word(word, expected);
  if (as_json) {
    json out;
    out["word"] = to_json(word);
    out["map"] = to_json(expand_word(word));
    out["expected_multidegree"] = expected ? to_json(*expected) : json(nullptr);
    out["verification"] = to_json(report);
    emit(out);
  } else {
    std::cout << "factors: " << word.size() << "\n" << format_report(report);
  }
  return report.passed() ? kExitOk : kExitVerification;
}

int run_atlas(const std::string& a_text, const std::string& b_text, const std::string& cmax_text, bool as_json) {
  std::int64_t a = parse_positive(a_text, "a");
  std::int64_t b = parse_positive(b_text, "b");
  std::int64_t cmax = parse_positive(cmax_text, "--cmax");
  if (a > b) throw UsageError("atlas requires a <= b");
  auto rows = atlas(a, b, cmax);
  if (as_json) {
    json out = {{"a", a}, {"b", b}, {"cmax", cmax}, {"rows", json::array()}};
    for (const auto& row : rows)
      out["rows"].push_back({{"c", row.c}, {"case", row.kind ? std::string(case_name(*row.kind)) : "unknown"}});
    emit(out);
  } else {
    for (const auto& row : rows)
      std::cout << "(" << a << "," << b << "," << row.c << ") " << (row.kind ? case_name(*row.kind) : "unknown")
                << "\n";
  }
  return kExitOk;
}

int run_certify(const std::string& a_text, const std::string& b_text, const std::string& probe_text, bool as_json) {
  std::int64_t a = parse_positive(a_text, "a");
  std::int64_t b = parse_positive(b_text, "b");
  std::int64_t probe = probe_text.empty() ? 3 * a : parse_positive(probe_text, "--probe");
  if (a >= b || b % a == 0) throw UsageError("certify-pair requires a < b and a not dividing b");
  TamePairReport report = certify_pair(a, b, probe);
  if (as_json) {
    json out = {{"a", a},
                {"b", b},
                {"c0", report.c0},
                {"window_end", report.window_end},
                {"certified", report.certified},
                {"uncovered", report.uncovered}};
    emit(out);
  } else {
    std::cout << "pair: (" << a << "," << b << ")\n"
              << "c0: " << report.c0 << "\n"
              << "probed: c in (" << b << ", " << report.window_end << "]\n";
    if (report.certified) {
      std::cout << "certified: every c > " << b << " is constructible\n";
    } else {
      std::cout << "uncovered:";
      for (auto c : report.uncovered) std::cout << " " << c;
      std::cout << "\n";
    }
  }
  return report.certified ? kExitOk : kExitUnknown;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Tame automorphisms of 3-space with prescribed multidegree"};
  app.require_subcommand(1);

  bool as_json = false;
  bool no_expand = false;
  std::string a, b, c, path, expect, cmax, probe;

  auto* construct_cmd = app.add_subcommand("construct", "Construct and verify a map with multidegree (a,b,c)");
  construct_cmd->add_option("a", a)->required();
  construct_cmd->add_option("b", b)->required();
  construct_cmd->add_option("c", c)->required();
  construct_cmd->add_flag("--json", as_json, "JSON output");
  construct_cmd->add_flag("--no-expand", no_expand, "Omit the expanded map");

  auto* threshold_cmd = app.add_subcommand("threshold", "Show lcm, r, c0 and the Sylvester bound for (a,b)");
  threshold_cmd->add_option("a", a)->required();
  threshold_cmd->add_option("b", b)->required();
  threshold_cmd->add_flag("--json", as_json, "JSON output");

  auto* verify_cmd = app.add_subcommand("verify", "Verify a word read from a file");
  verify_cmd->add_option("word-file", path)->required();
  verify_cmd->add_option("--expect", expect, "Expected multidegree a,b,c");
  verify_cmd->add_flag("--json", as_json, "JSON output");

  auto* atlas_cmd = app.add_subcommand("atlas", "Case used for every c in (b, cmax]");
  atlas_cmd->add_option("a", a)->required();
  atlas_cmd->add_option("b", b)->required();
  atlas_cmd->add_option("--cmax", cmax)->required();
  atlas_cmd->add_flag("--json", as_json, "JSON output");

  auto* certify_cmd = app.add_subcommand("certify-pair", "Certify that every c > b is constructible");
  certify_cmd->add_option("a", a)->required();
  certify_cmd->add_option("b", b)->required();
  certify_cmd->add_option("--probe", probe, "Values probed past max(c0, b+1) (default 3a)");
  certify_cmd->add_flag("--json", as_json, "JSON output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*construct_cmd) return run_construct(a, b, c, as_json, no_expand);
    if (*threshold_cmd) return run_threshold(a, b, as_json);
    if (*verify_cmd) return run_verify(path, expect, as_json);
    if (*atlas_cmd) return run_atlas(a, b, cmax, as_json);
    if (*certify_cmd) return run_certify(a, b, probe, as_json);
  } catch (const VerificationFailure& e) {
    std::cerr << "internal verification failure: " << e.what() << "\n";
    return kExitVerification;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
