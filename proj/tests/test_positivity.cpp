#include <doctest.h>

#include <algorithm>

#include "curvpos/constructions.hpp"
#include "curvpos/linalg.hpp"
#include "curvpos/models.hpp"
#include "curvpos/positivity.hpp"
#include "curvpos/rng.hpp"
#include "curvpos/tensor.hpp"

using namespace curvpos;

TEST_CASE("classification table") {
  CHECK(classify(1.0, 2.0, 1e-9) == Classification::positive);
  CHECK(classify(0.0, 2.0, 1e-9) == Classification::semi_positive);
  CHECK(classify(-1.0, 2.0, 1e-9) == Classification::indefinite);
  CHECK(classify(-2.0, 0.0, 1e-9) == Classification::semi_negative);
  CHECK(classify(-2.0, -1.0, 1e-9) == Classification::negative);
  CHECK(classify(0.0, 0.0, 0.0) == Classification::semi_positive);  // vanishing form
}

TEST_CASE("nakano test on the model tensors") {
  // identity Nakano matrix
  const CurvatureTensor id =
      tensor_from_nakano_matrix(Eigen::MatrixXcd::Identity(6, 6), 2, 3);
  const Verdict vid = nakano_test(id);
  CHECK(vid.margin == doctest::Approx(1.0));
  CHECK(vid.classification == Classification::positive);
  CHECK(vid.method == CertMethod::exact_eigen);

  for (int n = 2; n <= 4; ++n) {
    const Verdict fs = nakano_test(fubini_study_tangent(n));
    CHECK(std::abs(fs.margin) <= 1e-12);
    CHECK(fs.classification == Classification::semi_positive);
    CHECK(fs.max_value == doctest::Approx(2.0));

    const Verdict hyp = nakano_test(hyperbolic_cotangent(n));
    CHECK(hyp.margin == doctest::Approx(1.0));
    CHECK(hyp.max_value == doctest::Approx(1.0 + n));
    CHECK(hyp.classification == Classification::positive);
  }
}

TEST_CASE("dual nakano test on the model tensors") {
  for (int n = 2; n <= 4; ++n) {
    const Verdict fs = dual_nakano_test(fubini_study_tangent(n));
    CHECK(fs.margin == doctest::Approx(1.0));
    CHECK(fs.max_value == doctest::Approx(1.0 + n));
    CHECK(fs.classification == Classification::positive);

    // The dual-Nakano matrix of the hyperbolic cotangent is identity + swap:
    // spectrum {0, 2}, so the bundle is semi but not dual-Nakano-positive.
    const Verdict hyp = dual_nakano_test(hyperbolic_cotangent(n));
    CHECK(std::abs(hyp.margin) <= 1e-12);
    CHECK(hyp.max_value == doctest::Approx(2.0));
    CHECK(hyp.classification != Classification::positive);
  }
}

TEST_CASE("witness re-evaluation reproduces the margin") {
  for (int t = 0; t < 12; ++t) {
    const int n = 1 + t % 3, r = 1 + (t / 3) % 4;
    const CurvatureTensor curv = random_hermitian_curvature(1300 + t, n, r, -0.5);
    const Verdict nak = nakano_test(curv);
    CHECK(std::abs(nak.witness.norm() - 1.0) <= 1e-12);
    CHECK(std::abs(nakano_form(curv, nak.witness).real() - nak.margin) <= 1e-9);

    const Verdict dual = dual_nakano_test(curv);
    CHECK(std::abs(dual_nakano_form(curv, dual.witness).real() - dual.margin) <= 1e-9);
  }
}

TEST_CASE("duality identity and decomposable bounds on random tensors") {
  for (int t = 0; t < 200; ++t) {
    const int n = 1 + t % 3, r = 1 + (t / 3) % 3;
    const CurvatureTensor curv = random_hermitian_curvature(1400 + t, n, r, -0.4);

    const double dual_margin = dual_nakano_test(curv).margin;
    const Eigen::VectorXd dual_eigs =
        hermitian_eigensystem(nakano_matrix(dual_curvature(curv))).values;
    CHECK(std::abs(dual_margin + dual_eigs(dual_eigs.size() - 1)) <= 1e-12);

    // decomposable u (x) v directions bound the joint minima from below
    GriffithsOptions opts;
    opts.starts = 8;
    opts.seed = 1500 + t;
    const Verdict grif = griffiths_test(curv, opts);
    CHECK(nakano_test(curv).margin <= grif.margin + 1e-9);
    CHECK(dual_margin <= grif.margin + 1e-9);
  }
}

TEST_CASE("griffiths exact cases and closed-form models") {
  // rank 1: smallest eigenvalue of the line curvature matrix
  const CurvatureTensor line = random_hermitian_curvature(1600, 3, 1, -0.2);
  const Verdict vline = griffiths_test(line);
  CHECK(vline.method == CertMethod::exact_eigen);
  Eigen::MatrixXcd h(3, 3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) h(i, j) = line.at(i, j, 0, 0);
  CHECK(vline.margin == doctest::Approx(hermitian_eigensystem(h).values.minCoeff()));
  // witness re-evaluation in the exact case
  CHECK(std::abs(griffiths_form(line, vline.witness_u, vline.witness_v).real() - vline.margin) <=
        1e-12);

  // FS tangent: minimum 1 at orthogonal pairs
  for (int n = 2; n <= 4; ++n) {
    GriffithsOptions opts;
    opts.starts = 16;
    opts.seed = 1700 + n;
    const Verdict fs = griffiths_test(fubini_study_tangent(n), opts);
    CHECK(fs.method == CertMethod::multistart_heuristic);
    CHECK(fs.converged);
    CHECK(fs.margin == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(fs.classification == Classification::positive);
    // witness factors recombine into the flattened witness
    CHECK(std::abs(griffiths_form(fubini_study_tangent(n), fs.witness_u, fs.witness_v).real() -
                   fs.margin) <= 1e-9);
  }

  // O(1) + O(-1) on P^1: decomposable, margin -1, indefinite
  const CurvatureTensor split = direct_sum_lines(1, {1, -1});
  const Verdict vsplit = griffiths_test(split);
  CHECK(vsplit.method == CertMethod::exact_eigen);  // n = 1 is exact
  CHECK(vsplit.margin == doctest::Approx(-1.0));
  CHECK(vsplit.max_value == doctest::Approx(1.0));
  CHECK(vsplit.classification == Classification::indefinite);
}

TEST_CASE("griffiths multistart merge is deterministic") {
  const CurvatureTensor curv = random_hermitian_curvature(1800, 3, 3, -0.6);
  GriffithsOptions opts;
  opts.starts = 12;
  opts.seed = 99;
  const Verdict a = griffiths_test(curv, opts);
  const Verdict b = griffiths_test(curv, opts);
  CHECK(a.margin == b.margin);
  CHECK(a.max_value == b.max_value);
  CHECK((a.witness - b.witness).norm() == 0.0);
  CHECK(a.starts_used == b.starts_used);
  CHECK(a.starts_used == 2 * (3 * 3 + 12));  // both directions, coordinate pairs + random
}

TEST_CASE("nakano positivity transfers to the symmetric square (spot property)") {
  for (int t = 0; t < 10; ++t) {
    const int n = 1 + t % 2, r = 2 + t % 2;
    const CurvatureTensor curv = random_hermitian_curvature(1900 + t, n, r, 0.3);
    CHECK(nakano_test(orthonormal_sym_power(curv, 2)).margin > 0.0);
  }
}

TEST_CASE("schur complement: worked example and degenerate blocks") {
  Eigen::MatrixXcd t(2, 2);
  t << 2, 1, 1, 2;
  const BlockMatrix blocks = BlockMatrix::split(t, 1);
  const Eigen::MatrixXcd complement = schur_complement(blocks);
  REQUIRE(complement.rows() == 1);
  CHECK(complement(0, 0).real() == doctest::Approx(1.5));
  CHECK((block_inverse(blocks) - t.inverse()).cwiseAbs().maxCoeff() <= 1e-14);

  // B = C = 0: complement is A, inverse is block diagonal
  Eigen::MatrixXcd diag = Eigen::MatrixXcd::Zero(4, 4);
  diag.topLeftCorner(2, 2) << 3, 0, 0, 5;
  diag.bottomRightCorner(2, 2) << 2, 1, 1, 2;
  const BlockMatrix diag_blocks = BlockMatrix::split(diag, 2);
  CHECK((schur_complement(diag_blocks) - diag.topLeftCorner(2, 2)).cwiseAbs().maxCoeff() == 0.0);
  CHECK((block_inverse(diag_blocks) - diag.inverse()).cwiseAbs().maxCoeff() <= 1e-14);

  // singular D is rejected
  Eigen::MatrixXcd bad = Eigen::MatrixXcd::Identity(3, 3);
  bad(2, 2) = 0.0;
  CHECK_THROWS_AS(schur_complement(BlockMatrix::split(bad, 1)), std::invalid_argument);
}

TEST_CASE("schur complement positivity on random Hermitian PD matrices") {
  for (int t = 0; t < 100; ++t) {
    Rng rng(2000 + t);
    const int size = 2 + static_cast<int>(rng.next_u64() % 11);
    const Eigen::MatrixXcd x = rng.gaussian_matrix(size, size);
    const Eigen::MatrixXcd mat = x.adjoint() * x / static_cast<double>(size) +
                                 0.05 * Eigen::MatrixXcd::Identity(size, size);
    const int p = 1 + static_cast<int>(rng.next_u64() % static_cast<std::uint64_t>(size - 1));
    const BlockMatrix blocks = BlockMatrix::split(mat, p);
    CHECK(hermitian_eigensystem(schur_complement(blocks)).values.minCoeff() > 0.0);
    CHECK((mat * block_inverse(blocks) - Eigen::MatrixXcd::Identity(size, size))
              .cwiseAbs()
              .maxCoeff() < 1e-10);
  }
}
