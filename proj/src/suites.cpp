// Named verification batteries: the exact identities, the built-in geometry
// certifications, and the sharpness counterexamples, with every threshold
// pinned in code. Shared by the CLI `suite` subcommand and the acceptance
// test binary.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "curvpos/constructions.hpp"
#include "curvpos/linalg.hpp"
#include "curvpos/models.hpp"
#include "curvpos/positivity.hpp"
#include "curvpos/quadrature.hpp"
#include "curvpos/report.hpp"
#include "curvpos/rng.hpp"

namespace curvpos {

namespace {

std::string format_double(double v) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.6g", v);
  return buffer;
}

SuiteCheck make_check(std::string name, bool pass, std::string detail,
                      std::vector<std::pair<std::string, double>> metrics = {}) {
  return SuiteCheck{std::move(name), pass, std::move(detail), std::move(metrics)};
}

// ---------------------------------------------------------------------------
// criterion 1: exact monomial integral table vs seeded Monte Carlo
// ---------------------------------------------------------------------------
SuiteCheck check_monomial_table(std::uint64_t seed) {
  constexpr std::size_t kSamples = 200000;
  double worst_sigmas = 0.0, worst_relative = 0.0;
  int pairs_checked = 0;
  bool pass = true;
  for (int r = 1; r <= 4; ++r) {
    for (int k = 0; k <= 3; ++k) {
      const std::vector<SymIndex> basis = enumerate_sym_indices(r, k);
      const std::size_t m = basis.size();
      const std::vector<MCEstimate> table =
          monomial_integral_mc_table(r, k, kSamples, mix_seed(seed, 100 + r * 8 + k));
      for (std::size_t ia = 0; ia < m; ++ia)
        for (std::size_t ib = 0; ib < m; ++ib) {
          const Rational exact = monomial_integral_exact(basis[ia], basis[ib], r);
          const MCEstimate& mc = table[ia * m + ib];
          const double sigmas = mc.deviation_sigmas(exact);
          worst_sigmas = std::max(worst_sigmas, sigmas);
          if (sigmas > 4.0) pass = false;
          if (exact != 0) {
            const double target = static_cast<double>(exact);
            const double relative = std::abs(mc.value - Complex(target, 0.0)) / target;
            worst_relative = std::max(worst_relative, relative);
            if (relative > 0.02) pass = false;
          }
          ++pairs_checked;
        }
    }
  }
  return make_check("criterion 1 - monomial integral table, exact vs MC",
                    pass,
                    std::to_string(pairs_checked) + " pairs (r<=4, k<=3), worst deviation " +
                        format_double(worst_sigmas) + " sigma, worst nonzero relative error " +
                        format_double(worst_relative),
                    {{"worst_deviation_sigmas", worst_sigmas},
                     {"worst_relative_error", worst_relative}});
}

// ---------------------------------------------------------------------------
// criterion 2: the exact twist identity behind E (x) det E
// ---------------------------------------------------------------------------
SuiteCheck check_demailly_skoda_identity(std::uint64_t seed) {
  double worst = 0.0;
  for (int n = 1; n <= 4; ++n)
    worst = std::max(worst, demailly_skoda_identity_residual(fubini_study_tangent(n)));
  for (int t = 0; t < 50; ++t) {
    const int n = 1 + (t % 4), r = 1 + ((t / 4) % 4);
    worst = std::max(worst, demailly_skoda_identity_residual(random_hermitian_curvature(
                                mix_seed(seed, 200 + t), n, r, -0.25)));
  }
  return make_check("criterion 2 - fiber-integral twist identity residual",
                    worst < 1e-10,
                    "max residual " + format_double(worst) +
                        " over FS tangents (n<=4) and 50 random tensors",
                    {{"max_residual", worst}});
}

// ---------------------------------------------------------------------------
// criterion 3: closed-form constant of the induced L2 metric
// ---------------------------------------------------------------------------
SuiteCheck check_l2_metric_constant(std::uint64_t) {
  for (int r = 1; r <= 4; ++r)
    for (int k = 0; k <= 4; ++k) {
      const std::vector<SymIndex> basis = enumerate_sym_indices(r, k);
      const std::size_t m = basis.size();
      BigInt polarization = 1;
      for (int t = 0; t < r - 1; ++t) polarization *= (k + r);
      const Rational constant = Rational(polarization) / Rational(factorial(r + k - 1));
      const std::vector<Rational> gram = l2_induced_metric_exact(r, k);
      for (std::size_t ia = 0; ia < m; ++ia)
        for (std::size_t ib = 0; ib < m; ++ib) {
          const Rational expected =
              constant * BigInt(generalized_delta(basis[ia], basis[ib]));
          if (gram[ia * m + ib] != expected)
            return make_check("criterion 3 - induced L2 metric constant", false,
                              "rational mismatch at r=" + std::to_string(r) +
                                  " k=" + std::to_string(k));
        }
    }
  return make_check("criterion 3 - induced L2 metric constant", true,
                    "exact rational equality (k+r)^{r-1}/(r+k-1)! * delta for r<=4, k<=4");
}

// ---------------------------------------------------------------------------
// criterion 4: Fubini-Study tangent signature
// ---------------------------------------------------------------------------
SuiteCheck check_fubini_study_signature(std::uint64_t seed) {
  bool pass = true;
  std::ostringstream detail;
  for (int n = 2; n <= 5; ++n) {
    const CurvatureTensor fs = fubini_study_tangent(n);
    const Verdict nak = nakano_test(fs);
    const HermitianEigen eig = hermitian_eigensystem(nakano_matrix(fs));
    const double scale = std::max(std::abs(eig.values(0)), std::abs(eig.values(eig.values.size() - 1)));
    long zero_dim = 0;
    for (long t = 0; t < eig.values.size(); ++t)
      if (std::abs(eig.values(t)) <= 1e-9 * scale) ++zero_dim;
    const Verdict dual = dual_nakano_test(fs);
    GriffithsOptions opts;
    opts.starts = 32;
    opts.seed = mix_seed(seed, 400 + n);
    const Verdict grif = griffiths_test(fs, opts);

    const long expected_zero = static_cast<long>(n) * (n - 1) / 2;
    const bool ok = std::abs(nak.margin) <= 1e-9 && zero_dim == expected_zero &&
                    nak.classification == Classification::semi_positive &&
                    std::abs(dual.margin - 1.0) <= 1e-9 &&
                    dual.classification == Classification::positive &&
                    std::abs(grif.margin - 1.0) <= 1e-6;
    if (!ok) pass = false;
    detail << "n=" << n << ": nakano " << format_double(nak.margin) << " (null dim " << zero_dim
           << "/" << expected_zero << "), dual " << format_double(dual.margin) << ", griffiths "
           << format_double(grif.margin) << "; ";
  }
  return make_check("criterion 4 - FS tangent: semi-Nakano, dual-Nakano, Griffiths", pass,
                    detail.str());
}

// ---------------------------------------------------------------------------
// criterion 5: symmetric square (and cube) of the FS tangent on P^2
// ---------------------------------------------------------------------------
SuiteCheck check_sym_power_fs(std::uint64_t) {
  const CurvatureTensor fs = fubini_study_tangent(2);
  const CurvatureTensor s2 = orthonormal_sym_power(fs, 2);
  const CurvatureTensor s3 = orthonormal_sym_power(fs, 3);
  const Verdict s2n = nakano_test(s2), s2d = dual_nakano_test(s2);
  const Verdict s3n = nakano_test(s3), s3d = dual_nakano_test(s3);
  // frozen regression values from the first verified run
  const bool pass = s2n.margin > 0 && s2d.margin > 0 && s3n.margin > 0 && s3d.margin > 0 &&
                    std::abs(s2n.margin - 1.0) <= 1e-8 && std::abs(s2d.margin - 2.0) <= 1e-8 &&
                    std::abs(s3n.margin - 2.0) <= 1e-8 && std::abs(s3d.margin - 3.0) <= 1e-8;
  std::ostringstream detail;
  detail << "S^2: nakano " << format_double(s2n.margin) << " (expect 1), dual "
         << format_double(s2d.margin) << " (expect 2); S^3: nakano " << format_double(s3n.margin)
         << " (expect 2), dual " << format_double(s3d.margin) << " (expect 3)";
  return make_check("criterion 5 - S^2 and S^3 of the FS tangent are Nakano/dual-Nakano positive",
                    pass, detail.str());
}

// ---------------------------------------------------------------------------
// criterion 6: adjoint thresholds S^k TP^2 (x) K at k = 3 and k = 4
// ---------------------------------------------------------------------------
SuiteCheck check_adjoint_thresholds(std::uint64_t seed) {
  const CurvatureTensor fs = fubini_study_tangent(2);
  const LineCurvature canonical = canonical_bundle(2);
  GriffithsOptions opts;
  opts.starts = 48;
  opts.max_iters = 400;

  opts.seed = mix_seed(seed, 601);
  const Verdict at3 = griffiths_test(twist_by_line(orthonormal_sym_power(fs, 3), canonical), opts);
  opts.seed = mix_seed(seed, 602);
  const Verdict at4 = griffiths_test(twist_by_line(orthonormal_sym_power(fs, 4), canonical), opts);

  const bool pass = at3.margin <= at3.tolerance &&
                    at3.classification != Classification::positive &&
                    at4.margin > at4.tolerance &&
                    at4.classification == Classification::positive &&
                    std::abs(at4.margin - 1.0) <= 1e-6;
  std::ostringstream detail;
  detail << "k=3 best-found " << format_double(at3.margin) << " ("
         << to_string(at3.classification) << "), k=4 best-found " << format_double(at4.margin)
         << " (" << to_string(at4.classification) << ", expect 1)";
  return make_check("criterion 6 - S^k TP^2 (x) K threshold: semi at k=3, positive at k=4", pass,
                    detail.str());
}

// ---------------------------------------------------------------------------
// criterion 7: hyperbolic cotangent margins
// ---------------------------------------------------------------------------
SuiteCheck check_hyperbolic_cotangent(std::uint64_t) {
  bool pass = true;
  std::ostringstream detail;
  for (int n = 2; n <= 3; ++n) {
    const CurvatureTensor cot = hyperbolic_cotangent(n);
    const Verdict nak = nakano_test(cot);
    const Verdict dual = dual_nakano_test(cot);
    // Expected values on record: nakano margin 1, dual-Nakano margin -1. The
    // dual-Nakano matrix of this tensor is identity + swap, whose spectrum is
    // {0, 2}; the recorded -1 is the bare swap eigenvalue and is not attained
    // by any unit vector, so the second expectation cannot hold. It is kept
    // as stated rather than adjusted; see the test log for the discussion.
    const bool nak_ok = std::abs(nak.margin - 1.0) <= 1e-9;
    const bool dual_ok = std::abs(dual.margin - (-1.0)) <= 1e-9;
    if (!nak_ok || !dual_ok) pass = false;
    detail << "n=" << n << ": nakano " << format_double(nak.margin) << " (expect 1), dual "
           << format_double(dual.margin) << " (expect -1; " << to_string(dual.classification)
           << ", so still not dual-Nakano-positive); ";
  }
  return make_check("criterion 7 - hyperbolic cotangent: Nakano margin 1, dual-Nakano margin -1",
                    pass, detail.str());
}

// ---------------------------------------------------------------------------
// criterion 8: duality correspondence on random tensors
// ---------------------------------------------------------------------------
SuiteCheck check_duality(std::uint64_t seed) {
  double worst_margin_gap = 0.0, worst_involution = 0.0;
  for (int t = 0; t < 200; ++t) {
    const int n = 1 + (t % 4), r = 1 + ((t / 4) % 4);
    const CurvatureTensor curv =
        random_hermitian_curvature(mix_seed(seed, 800 + t), n, r, -0.4 + 0.01 * (t % 7));
    const CurvatureTensor dual = dual_curvature(curv);

    const double dual_margin = dual_nakano_test(curv).margin;
    const HermitianEigen eig = hermitian_eigensystem(nakano_matrix(dual));
    worst_margin_gap = std::max(worst_margin_gap,
                                std::abs(dual_margin + eig.values(eig.values.size() - 1)));

    const CurvatureTensor round_trip = dual_curvature(dual);
    double diff = 0.0;
    for (std::size_t idx = 0; idx < curv.flat().size(); ++idx)
      diff = std::max(diff, std::abs(curv.flat()[idx] - round_trip.flat()[idx]));
    worst_involution = std::max(worst_involution, diff);
  }
  return make_check("criterion 8 - dual-Nakano margin equals -max Nakano eigenvalue of the dual",
                    worst_margin_gap <= 1e-12 && worst_involution == 0.0,
                    "200 tensors: worst margin gap " + format_double(worst_margin_gap) +
                        ", dual involution exact (max diff " + format_double(worst_involution) + ")",
                    {{"worst_margin_gap", worst_margin_gap},
                     {"worst_involution_diff", worst_involution}});
}

// ---------------------------------------------------------------------------
// criterion 9: Schur complement block lemma
// ---------------------------------------------------------------------------
SuiteCheck check_schur(std::uint64_t seed) {
  double worst_residual = 0.0, worst_min_eig = 1e300;
  for (int t = 0; t < 100; ++t) {
    Rng rng(mix_seed(seed, 900 + t));
    const int size = 2 + static_cast<int>(rng.next_u64() % 11);  // 2..12
    const Eigen::MatrixXcd x = rng.gaussian_matrix(size, size);
    const Eigen::MatrixXcd t_mat =
        x.adjoint() * x / static_cast<double>(size) +
        0.05 * Eigen::MatrixXcd::Identity(size, size);
    const int p = 1 + static_cast<int>(rng.next_u64() % static_cast<std::uint64_t>(size - 1));
    const BlockMatrix blocks = BlockMatrix::split(t_mat, p);

    const Eigen::MatrixXcd complement = schur_complement(blocks);
    worst_min_eig = std::min(worst_min_eig, hermitian_eigensystem(complement).values.minCoeff());

    const Eigen::MatrixXcd inverse = block_inverse(blocks);
    const double residual =
        (t_mat * inverse - Eigen::MatrixXcd::Identity(size, size)).cwiseAbs().maxCoeff();
    worst_residual = std::max(worst_residual, residual);
  }
  return make_check("criterion 9 - Schur complement positivity and block inverse",
                    worst_min_eig > 0.0 && worst_residual < 1e-10,
                    "100 Hermitian PD blocks (size <= 12): min complement eigenvalue " +
                        format_double(worst_min_eig) + ", worst |T T^-1 - I| " +
                        format_double(worst_residual),
                    {{"min_complement_eigenvalue", worst_min_eig},
                     {"max_inverse_residual", worst_residual}});
}

// ---------------------------------------------------------------------------
// criterion 10: positivity transfer to E (x) det E and to symmetric powers
// ---------------------------------------------------------------------------
SuiteCheck check_positivity_transfer(std::uint64_t seed) {
  int accepted = 0, hard_failures = 0, logged_inconclusive = 0;
  double worst_transfer_margin = 1e300;

  for (int t = 0; t < 40; ++t) {
    const int n = 1 + (t % 3), r = 1 + ((t / 3) % 3);
    CurvatureTensor curv = random_hermitian_curvature(mix_seed(seed, 1000 + t), n, r,
                                                      0.1 + 0.2 * (t % 5));
    if (t % 2 == 1 && n == r && n >= 2) {
      // Griffiths-positive tensors that are only semi-Nakano-positive: the FS
      // tangent plus a small random Hermitian perturbation.
      const CurvatureTensor noise =
          random_hermitian_curvature(mix_seed(seed, 1100 + t), n, r, -0.5);
      CurvatureTensor fs = fubini_study_tangent(n);
      for (std::size_t idx = 0; idx < fs.flat().size(); ++idx)
        fs.flat()[idx] += 0.05 * noise.flat()[idx];
      curv = fs;
    }

    GriffithsOptions opts;
    opts.starts = 32;
    opts.seed = mix_seed(seed, 1200 + t);
    const Verdict grif = griffiths_test(curv, opts);
    if (grif.margin <= 0.05) continue;
    ++accepted;

    const CurvatureTensor adjoint = tensor_curvature(curv, det_curvature(curv));
    const double nak = nakano_test(adjoint).margin;
    const double dual = dual_nakano_test(adjoint).margin;
    worst_transfer_margin = std::min({worst_transfer_margin, nak, dual});
    if (nak <= 0.0 || dual <= 0.0) {
      // Distinguish a genuine violation from a heuristic acceptance error:
      // re-examine the Griffiths minimum much harder before calling it hard.
      GriffithsOptions recheck = opts;
      recheck.starts = 256;
      recheck.max_iters = 1000;
      recheck.seed = mix_seed(seed, 1300 + t);
      if (griffiths_test(curv, recheck).margin > 0.05)
        ++hard_failures;
      else
        ++logged_inconclusive;
    }
  }

  double worst_sym_margin = 1e300;
  for (int t = 0; t < 50; ++t) {
    const int n = 1 + (t % 3), r = 1 + ((t / 3) % 3);
    const CurvatureTensor curv =
        random_hermitian_curvature(mix_seed(seed, 1400 + t), n, r, 0.1 + 0.02 * (t % 9));
    for (int k = 2; k <= 3; ++k)
      worst_sym_margin =
          std::min(worst_sym_margin, nakano_test(orthonormal_sym_power(curv, k)).margin);
  }

  const bool pass = accepted >= 10 && hard_failures == 0 && worst_transfer_margin > 0.0 &&
                    worst_sym_margin > 0.0;
  std::ostringstream detail;
  detail << accepted << " Griffiths-positive tensors accepted, " << hard_failures
         << " hard failures, " << logged_inconclusive
         << " logged inconclusive; min E(x)detE margin " << format_double(worst_transfer_margin)
         << "; min S^k (k=2,3) Nakano margin over 50 positive tensors "
         << format_double(worst_sym_margin);
  return make_check("criterion 10 - Griffiths => E(x)detE positive; Nakano => S^k positive", pass,
                    detail.str());
}

// ---------------------------------------------------------------------------
// criterion 11: sharpness of the adjoint twist exponent on P^4
// ---------------------------------------------------------------------------
SuiteCheck check_adjoint_sharpness(std::uint64_t) {
  const Verdict at2 = nakano_test(counterexample_adjoint(4, 2, 2));
  const Verdict at3 = nakano_test(counterexample_adjoint(4, 2, 3));
  const Verdict at1 = nakano_test(counterexample_adjoint(4, 2, 1));
  const bool pass = at2.margin <= at2.tolerance &&
                    at2.classification != Classification::positive &&
                    at3.classification == Classification::positive &&
                    std::abs(at3.margin - 2.0) <= 1e-12 &&
                    at1.classification == Classification::negative &&
                    std::abs(at1.margin + 2.0) <= 1e-12;
  std::ostringstream detail;
  detail << "k0=2: margin " << format_double(at2.margin) << " (" << to_string(at2.classification)
         << "), k0=3: " << format_double(at3.margin) << " (" << to_string(at3.classification)
         << "), k0=1: " << format_double(at1.margin) << " (" << to_string(at1.classification)
         << ")";
  return make_check("criterion 11 - adjoint twist exponent is sharp on P^4 with O(1)+O(1)", pass,
                    detail.str());
}

// ---------------------------------------------------------------------------
// criterion 12: the two symmetric-power curvature formulas agree
// ---------------------------------------------------------------------------

// Independent four-term expansion of the symmetric square, over ordered pairs.
Complex sym2_component_direct(const CurvatureTensor& curv, int i, int j, const SymIndex& a,
                              const SymIndex& b) {
  const int alpha = a.entries[0] - 1, gamma = a.entries[1] - 1;
  const int beta = b.entries[0] - 1, delta = b.entries[1] - 1;
  Complex value(0, 0);
  if (gamma == delta) value += curv.at(i, j, alpha, beta);
  if (alpha == beta) value += curv.at(i, j, gamma, delta);
  if (alpha == delta) value += curv.at(i, j, gamma, beta);
  if (gamma == beta) value += curv.at(i, j, alpha, delta);
  return value;
}

// Grouped quadratic form: sum over weakly increasing (k-1)-tuples C and
// permutations sigma of the insertion sums V, with coefficients u extended by
// zero to non-increasing tuples.
double grouped_sym_form(const CurvatureTensor& curv, int degree,
                        const std::vector<SymIndex>& basis,
                        const std::vector<Eigen::VectorXcd>& u) {
  const int n = curv.base_dim(), r = curv.rank();
  std::map<std::vector<int>, int> position;
  for (std::size_t t = 0; t < basis.size(); ++t) position[basis[t].entries] = static_cast<int>(t);
  auto coefficient = [&](int i, const std::vector<int>& tuple) -> Complex {
    const auto it = position.find(tuple);
    return it == position.end() ? Complex(0, 0) : u[i](it->second);
  };

  Complex total(0, 0);
  std::vector<int> permuted(degree - 1), inserted(degree);
  for (const SymIndex& c : enumerate_sym_indices(r, degree - 1)) {
    std::vector<int> order(degree - 1);
    for (int t = 0; t < degree - 1; ++t) order[t] = t;
    do {
      for (int t = 0; t < degree - 1; ++t) permuted[t] = c.entries[order[t]];
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          for (int a = 1; a <= r; ++a)
            for (int b = 1; b <= r; ++b) {
              Complex vi(0, 0), vj(0, 0);
              for (int s = 0; s < degree; ++s) {
                inserted.assign(permuted.begin(), permuted.begin() + s);
                inserted.push_back(a);
                inserted.insert(inserted.end(), permuted.begin() + s, permuted.end());
                vi += coefficient(i, inserted);
                inserted[s] = b;
                vj += coefficient(j, inserted);
              }
              total += curv.at(i, j, a - 1, b - 1) * vi * std::conj(vj);
            }
    } while (std::next_permutation(order.begin(), order.end()));
  }
  return total.real();
}

SuiteCheck check_sym_power_formulas(std::uint64_t seed) {
  double worst_entry = 0.0;
  for (int n = 1; n <= 3; ++n)
    for (int r = 1; r <= 3; ++r) {
      const CurvatureTensor curv =
          random_hermitian_curvature(mix_seed(seed, 1500 + n * 4 + r), n, r, -0.3);
      const SymPowerCurvature sym = sym_power_curvature(curv, 2);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          for (std::size_t ia = 0; ia < sym.basis.size(); ++ia)
            for (std::size_t ib = 0; ib < sym.basis.size(); ++ib)
              worst_entry = std::max(
                  worst_entry,
                  std::abs(sym.tensor.at(i, j, static_cast<int>(ia), static_cast<int>(ib)) -
                           sym2_component_direct(curv, i, j, sym.basis[ia], sym.basis[ib])));
    }

  double worst_form = 0.0;
  for (int n = 1; n <= 3; ++n)
    for (int r = 1; r <= 3; ++r)
      for (int k = 1; k <= 3; ++k) {
        const CurvatureTensor curv =
            random_hermitian_curvature(mix_seed(seed, 1600 + n * 16 + r * 4 + k), n, r, -0.3);
        const SymPowerCurvature sym = sym_power_curvature(curv, k);
        Rng rng(mix_seed(seed, 1700 + n * 16 + r * 4 + k));
        for (int trial = 0; trial < 50; ++trial) {
          std::vector<Eigen::VectorXcd> u(n);
          double norm2 = 0.0;
          for (int i = 0; i < n; ++i) {
            u[i] = rng.gaussian_matrix(static_cast<int>(sym.basis.size()), 1).col(0);
            norm2 += u[i].squaredNorm();
          }
          for (int i = 0; i < n; ++i) u[i] /= std::sqrt(norm2);
          Eigen::VectorXcd flat(n * static_cast<int>(sym.basis.size()));
          for (int i = 0; i < n; ++i)
            for (std::size_t t = 0; t < sym.basis.size(); ++t)
              flat(i * static_cast<int>(sym.basis.size()) + static_cast<int>(t)) = u[i](t);
          const double direct = nakano_form(sym.tensor, flat).real();
          const double grouped = grouped_sym_form(curv, k, sym.basis, u);
          worst_form = std::max(worst_form, std::abs(direct - grouped));
        }
      }

  return make_check(
      "criterion 12 - symmetric power curvature: componentwise k=2 and grouped-form identities",
      worst_entry <= 1e-12 && worst_form <= 1e-10,
      "k=2 entrywise max diff " + format_double(worst_entry) +
          ", grouped quadratic form max diff " + format_double(worst_form) +
          " (n,r <= 3, k <= 3, 50 unit vectors each)",
      {{"max_entry_diff", worst_entry}, {"max_form_diff", worst_form}});
}

}  // namespace

bool is_known_suite(const std::string& suite) {
  return suite == "identities" || suite == "examples" || suite == "counterexamples" ||
         suite == "all";
}

std::vector<SuiteCheck> run_suite_checks(const std::string& suite, std::uint64_t seed) {
  if (!is_known_suite(suite)) throw std::invalid_argument("unknown suite '" + suite + "'");
  std::vector<SuiteCheck> checks;
  auto timed = [&](SuiteCheck (*check)(std::uint64_t)) {
    const auto start = std::chrono::steady_clock::now();
    SuiteCheck result = check(seed);
    result.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
            .count();
    checks.push_back(std::move(result));
  };
  const bool all = suite == "all";
  if (all || suite == "identities") {
    timed(check_monomial_table);
    timed(check_demailly_skoda_identity);
    timed(check_l2_metric_constant);
    timed(check_duality);
    timed(check_schur);
    timed(check_sym_power_formulas);
  }
  if (all || suite == "examples") {
    timed(check_fubini_study_signature);
    timed(check_sym_power_fs);
    timed(check_adjoint_thresholds);
    timed(check_hyperbolic_cotangent);
    timed(check_positivity_transfer);
  }
  if (all || suite == "counterexamples") {
    timed(check_adjoint_sharpness);
  }
  if (all) {
    // keep the canonical criterion order 1..12 in the combined battery
    std::vector<SuiteCheck> ordered;
    for (int t = 1; t <= 12; ++t) {
      const std::string prefix = "criterion " + std::to_string(t) + " ";
      for (auto& c : checks)
        if (c.name.rfind(prefix, 0) == 0) ordered.push_back(std::move(c));
    }
    return ordered;
  }
  return checks;
}

}  // namespace curvpos
