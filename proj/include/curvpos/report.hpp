#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "curvpos/expr.hpp"
#include "curvpos/positivity.hpp"

namespace curvpos {

inline constexpr std::uint64_t kDefaultMasterSeed = 42;

/// One named verification with its outcome; detail is a short human-readable
/// summary, metrics the machine-readable numbers behind it (residuals,
/// margins, worst deviations).
struct SuiteCheck {
  std::string name;
  bool pass = false;
  std::string detail;
  std::vector<std::pair<std::string, double>> metrics;
  double elapsed_ms = 0.0;  // wall clock; never serialized into reports
};

/// Batteries runnable from the CLI. "identities" covers the exact algebraic
/// and integral identities, "examples" the built-in geometry certifications,
/// "counterexamples" the sharpness cases; "all" is their union in order.
std::vector<SuiteCheck> run_suite_checks(const std::string& suite, std::uint64_t seed);

bool is_known_suite(const std::string& suite);

/// Machine-readable result document. JSON field order is fixed; two runs with
/// identical (spec, seed, tool version) produce byte-identical documents
/// unless timings are requested.
struct Report {
  nlohmann::ordered_json document;
  int exit_code = 0;
};

/// FNV-1a 64 hash of the canonical spec serialization, hex encoded.
std::string spec_digest(const std::string& canonical_text);

nlohmann::ordered_json verdict_to_json(const std::string& name, const Verdict& verdict);

/// Evaluates the spec expression and runs the requested certifications.
/// Exit code: 0 all positive, 1 some conclusive non-positive, 2 the only
/// non-positive outcomes are non-converged heuristics.
Report run_certify(const ParsedSpec& spec, bool include_timings = false);

Report run_suite(const std::string& suite, std::uint64_t seed, bool include_timings = false);

}  // namespace curvpos
