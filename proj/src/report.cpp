#include "curvpos/report.hpp"

#include <chrono>
#include <cstdio>

#include "curvpos/version.hpp"

namespace curvpos {

using nlohmann::ordered_json;

std::string spec_digest(const std::string& canonical_text) {
  std::uint64_t hash = 0xcbf29ce484222325ULL;
  for (unsigned char c : canonical_text) {
    hash ^= c;
    hash *= 0x100000001b3ULL;
  }
  char buffer[32];
  std::snprintf(buffer, sizeof(buffer), "fnv1a64:%016llx",
                static_cast<unsigned long long>(hash));
  return buffer;
}

namespace {
ordered_json vector_to_json(const Eigen::VectorXcd& v) {
  ordered_json re = ordered_json::array(), im = ordered_json::array();
  for (long t = 0; t < v.size(); ++t) {
    re.push_back(v(t).real());
    im.push_back(v(t).imag());
  }
  return ordered_json{{"re", std::move(re)}, {"im", std::move(im)}};
}

double elapsed_ms(const std::chrono::steady_clock::time_point& start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
      .count();
}
}  // namespace

ordered_json verdict_to_json(const std::string& name, const Verdict& verdict) {
  ordered_json out;
  out["name"] = name;
  out["classification"] = to_string(verdict.classification);
  out["margin"] = verdict.margin;
  out["max_value"] = verdict.max_value;
  out["method"] = to_string(verdict.method);
  out["tolerance"] = verdict.tolerance;
  out["converged"] = verdict.converged;
  out["starts_used"] = verdict.starts_used;
  out["witness"] = vector_to_json(verdict.witness);
  out["witness"]["index_order"] = "(i,alpha) flattened, base index i major";
  if (verdict.witness_u.size() > 0) {
    out["witness_factors"] =
        ordered_json{{"u", vector_to_json(verdict.witness_u)}, {"v", vector_to_json(verdict.witness_v)}};
  }
  return out;
}

Report run_certify(const ParsedSpec& spec, bool include_timings) {
  const auto start = std::chrono::steady_clock::now();
  const std::string canonical = print_spec(spec).dump();

  const CurvatureTensor tensor = evaluate_expr(*spec.expr);

  ordered_json tests = ordered_json::array();
  bool any_conclusive_nonpositive = false;
  bool any_inconclusive = false;
  for (const std::string& test : spec.tests) {
    Verdict verdict;
    if (test == "nakano") {
      verdict = nakano_test(tensor, spec.tolerance);
    } else if (test == "dual_nakano") {
      verdict = dual_nakano_test(tensor, spec.tolerance);
    } else {
      GriffithsOptions opts;
      opts.starts = spec.griffiths_starts;
      opts.max_iters = spec.griffiths_max_iters;
      opts.rel_tolerance = spec.tolerance;
      opts.seed = spec.seed;
      verdict = griffiths_test(tensor, opts);
    }
    // A heuristic margin is an upper bound on the true minimum (the witness
    // attains it), so any non-positive outcome is conclusive. Non-convergence
    // only taints a claimed positive.
    if (verdict.classification != Classification::positive)
      any_conclusive_nonpositive = true;
    else if (verdict.method == CertMethod::multistart_heuristic && !verdict.converged)
      any_inconclusive = true;
    tests.push_back(verdict_to_json(test, verdict));
  }

  Report report;
  report.exit_code = any_conclusive_nonpositive ? 1 : (any_inconclusive ? 2 : 0);
  ordered_json& doc = report.document;
  doc["schema"] = kReportSchema;
  doc["tool_version"] = kToolVersion;
  doc["kind"] = "certify";
  doc["spec_digest"] = spec_digest(canonical);
  doc["seed"] = spec.seed;
  doc["tolerance"] = spec.tolerance;
  const ExprShape shape = infer_shape(*spec.expr);
  doc["bundle"] = ordered_json{{"base_dim", shape.base_dim}, {"rank", shape.rank}};
  doc["residuals"] = ordered_json{{"hermitian_symmetry", tensor.hermitian_symmetry_error()}};
  doc["tests"] = std::move(tests);
  doc["exit_code"] = report.exit_code;
  if (include_timings) doc["timings_ms"] = ordered_json{{"total", elapsed_ms(start)}};
  return report;
}

Report run_suite(const std::string& suite, std::uint64_t seed, bool include_timings) {
  const auto start = std::chrono::steady_clock::now();
  const std::vector<SuiteCheck> checks = run_suite_checks(suite, seed);

  int failed = 0;
  ordered_json items = ordered_json::array();
  for (const SuiteCheck& check : checks) {
    if (!check.pass) ++failed;
    ordered_json item{{"name", check.name}, {"pass", check.pass}, {"detail", check.detail}};
    if (!check.metrics.empty()) {
      ordered_json metrics;
      for (const auto& [key, value] : check.metrics) metrics[key] = value;
      item["metrics"] = std::move(metrics);
    }
    items.push_back(std::move(item));
  }

  Report report;
  report.exit_code = failed == 0 ? 0 : 1;
  ordered_json& doc = report.document;
  doc["schema"] = kReportSchema;
  doc["tool_version"] = kToolVersion;
  doc["kind"] = "suite";
  doc["suite"] = suite;
  doc["seed"] = seed;
  doc["checks"] = std::move(items);
  doc["summary"] = ordered_json{{"passed", static_cast<int>(checks.size()) - failed},
                                {"failed", failed}};
  doc["exit_code"] = report.exit_code;
  if (include_timings) doc["timings_ms"] = ordered_json{{"total", elapsed_ms(start)}};
  return report;
}

}  // namespace curvpos
