// Command-line front end: certify bundle specs, evaluate exact and Monte
// Carlo projective monomial integrals, print induced L2 metric Grams, and run
// the built-in verification suites.
//
// Exit codes for `certify`: 0 every requested certification is positive;
// 1 some certification conclusively not positive; 2 the only non-positive
// outcomes are non-converged heuristics; 3 usage or spec errors.

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "curvpos/expr.hpp"
#include "curvpos/quadrature.hpp"
#include "curvpos/report.hpp"
#include "curvpos/version.hpp"

namespace {

constexpr int kUsageError = 3;

std::vector<int> parse_index_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream stream(text);
  std::string item;
  while (std::getline(stream, item, ',')) {
    if (item.empty()) continue;
    out.push_back(std::stoi(item));
  }
  return out;
}

void write_report(const curvpos::Report& report, const std::string& json_path) {
  const std::string text = report.document.dump(2) + "\n";
  if (json_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream file(json_path);
    if (!file) throw std::runtime_error("cannot open output file " + json_path);
    file << text;
  }
}

int run_certify_command(const std::string& spec_path, const std::string& json_path,
                        double tolerance_override, std::int64_t seed_override,
                        bool include_timings) {
  std::ifstream file(spec_path);
  if (!file) {
    std::cerr << "error: cannot read spec file " << spec_path << "\n";
    return kUsageError;
  }
  std::stringstream buffer;
  buffer << file.rdbuf();

  curvpos::ParsedSpec spec = curvpos::parse_spec(buffer.str());
  if (tolerance_override > 0) spec.tolerance = tolerance_override;
  if (seed_override >= 0) spec.seed = static_cast<std::uint64_t>(seed_override);

  const curvpos::Report report = curvpos::run_certify(spec, include_timings);
  write_report(report, json_path);
  return report.exit_code;
}

int run_integrate_command(int rank, const std::string& a_text, const std::string& b_text,
                          std::size_t mc_samples, std::uint64_t seed) {
  const curvpos::SymIndex a = curvpos::SymIndex::validated(parse_index_list(a_text), rank);
  const curvpos::SymIndex b = curvpos::SymIndex::validated(parse_index_list(b_text), rank);
  const curvpos::Rational exact = curvpos::monomial_integral_exact(a, b, rank);
  std::cout << "exact    = " << exact << " = " << static_cast<double>(exact) << "\n";
  if (mc_samples > 0) {
    const curvpos::MCEstimate mc = curvpos::monomial_integral_mc(a, b, rank, mc_samples, seed);
    std::cout << "mc       = " << mc.value.real();
    if (mc.value.imag() != 0) std::cout << " + " << mc.value.imag() << "i";
    std::cout << "  (stderr " << mc.stderr_value << ", " << mc.samples << " samples, seed "
              << mc.seed << ")\n";
    std::cout << "deviation = " << mc.deviation_sigmas(exact) << " sigma\n";
  }
  return 0;
}

int run_l2metric_command(int rank, int degree) {
  const std::vector<curvpos::SymIndex> basis = curvpos::enumerate_sym_indices(rank, degree);
  const std::vector<curvpos::Rational> gram = curvpos::l2_induced_metric_exact(rank, degree);
  const std::size_t m = basis.size();
  std::cout << "basis (" << m << " monomials):";
  for (const auto& index : basis) {
    std::cout << " (";
    for (std::size_t t = 0; t < index.entries.size(); ++t)
      std::cout << (t ? "," : "") << index.entries[t];
    std::cout << ")";
  }
  std::cout << "\n";
  for (std::size_t ia = 0; ia < m; ++ia) {
    for (std::size_t ib = 0; ib < m; ++ib) std::cout << (ib ? "  " : "") << gram[ia * m + ib];
    std::cout << "\n";
  }
  return 0;
}

int run_suite_command(const std::string& name, std::uint64_t seed, const std::string& json_path,
                      bool include_timings) {
  if (!curvpos::is_known_suite(name)) {
    std::cerr << "error: unknown suite '" << name
              << "' (expected identities, examples, counterexamples or all)\n";
    return kUsageError;
  }
  const curvpos::Report report = curvpos::run_suite(name, seed, include_timings);
  for (const auto& check : report.document["checks"]) {
    std::cerr << (check["pass"].get<bool>() ? "[PASS] " : "[FAIL] ")
              << check["name"].get<std::string>() << "\n       "
              << check["detail"].get<std::string>() << "\n";
  }
  if (!json_path.empty()) write_report(report, json_path);
  return report.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Pointwise Hermitian curvature calculus and positivity certification"};
  app.set_version_flag("--version", std::string(curvpos::kToolVersion));
  app.require_subcommand(1);

  std::string spec_path, json_path;
  double tolerance_override = -1.0;
  std::int64_t seed_override = -1;
  bool include_timings = false;
  auto* certify = app.add_subcommand("certify", "Evaluate a bundle spec and certify positivity");
  certify->add_option("spec", spec_path, "Bundle spec JSON file")->required();
  certify->add_option("--json", json_path, "Write the report to this file instead of stdout");
  certify->add_option("--tolerance", tolerance_override, "Relative classification tolerance");
  certify->add_option("--seed", seed_override, "Master seed override");
  certify->add_flag("--timings", include_timings,
                    "Include wall-clock timings (breaks byte-for-byte report determinism)");

  int rank = 0;
  std::string a_text, b_text;
  std::size_t mc_samples = 0;
  std::uint64_t seed = curvpos::kDefaultMasterSeed;
  auto* integrate = app.add_subcommand("integrate", "Exact (and optional MC) monomial integral");
  integrate->add_option("--r", rank, "Fiber rank r (integral over P^{r-1})")->required();
  integrate->add_option("--A", a_text, "First multi-index, e.g. 1,2,2")->required();
  integrate->add_option("--B", b_text, "Second multi-index")->required();
  integrate->add_option("--mc", mc_samples, "Monte Carlo sample count (0 = exact only)");
  integrate->add_option("--seed", seed, "Monte Carlo seed");

  int l2_rank = 0, l2_degree = 0;
  auto* l2metric = app.add_subcommand("l2metric", "Exact induced L2 metric Gram on S^k");
  l2metric->add_option("--r", l2_rank, "Fiber rank")->required();
  l2metric->add_option("--k", l2_degree, "Symmetric power degree")->required();

  std::string suite_name;
  std::string suite_json;
  std::uint64_t suite_seed = curvpos::kDefaultMasterSeed;
  bool suite_timings = false;
  auto* suite = app.add_subcommand("suite", "Run a named verification battery");
  suite->add_option("name", suite_name, "identities | examples | counterexamples | all")
      ->required();
  suite->add_option("--seed", suite_seed, "Master seed");
  suite->add_option("--json", suite_json, "Write the suite report to this file");
  suite->add_flag("--timings", suite_timings, "Include wall-clock timings in the report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsageError;
  }

  try {
    if (certify->parsed())
      return run_certify_command(spec_path, json_path, tolerance_override, seed_override,
                                 include_timings);
    if (integrate->parsed()) return run_integrate_command(rank, a_text, b_text, mc_samples, seed);
    if (l2metric->parsed()) return run_l2metric_command(l2_rank, l2_degree);
    return run_suite_command(suite_name, suite_seed, suite_json, suite_timings);
  } catch (const curvpos::SpecError& e) {
    std::cerr << "spec error: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsageError;
  }
}
