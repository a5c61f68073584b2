#include <doctest.h>

#include <algorithm>

#include "curvpos/constructions.hpp"
#include "curvpos/linalg.hpp"
#include "curvpos/models.hpp"
#include "curvpos/positivity.hpp"
#include "curvpos/rng.hpp"

using namespace curvpos;

namespace {
CurvatureTensor random_tensor(std::uint64_t seed, int n, int r, double shift = -0.3) {
  return random_hermitian_curvature(seed, n, r, shift);
}

double max_abs_diff(const CurvatureTensor& a, const CurvatureTensor& b) {
  REQUIRE(a.base_dim() == b.base_dim());
  REQUIRE(a.rank() == b.rank());
  double worst = 0.0;
  for (std::size_t t = 0; t < a.flat().size(); ++t)
    worst = std::max(worst, std::abs(a.flat()[t] - b.flat()[t]));
  return worst;
}
}  // namespace

TEST_CASE("every construction preserves the Hermitian curvature symmetry") {
  for (int t = 0; t < 12; ++t) {
    const int n = 1 + (t % 3), r = 1 + ((t / 3) % 3);
    const CurvatureTensor a = random_tensor(100 + t, n, r);
    const CurvatureTensor b = random_tensor(200 + t, n, r + 1);
    CHECK(a.hermitian_symmetry_error() <= 1e-12);
    CHECK(dual_curvature(a).hermitian_symmetry_error() <= 1e-12);
    CHECK(tensor_curvature(a, b).hermitian_symmetry_error() <= 1e-12);
    CHECK(direct_sum_curvature(a, b).hermitian_symmetry_error() <= 1e-12);
    CHECK(twist_by_line(a, det_curvature(b)).hermitian_symmetry_error() <= 1e-12);
    CHECK(sym_power_curvature(a, 2).tensor.hermitian_symmetry_error() <= 1e-11);
    CHECK(orthonormal_sym_power(a, 2).hermitian_symmetry_error() <= 1e-11);
  }
}

TEST_CASE("dual curvature is an involution and flips the FS sign") {
  const CurvatureTensor zero(2, 2);
  CHECK(max_abs_diff(dual_curvature(zero), zero) == 0.0);

  const CurvatureTensor fs1 = fubini_study_tangent(1);
  CHECK(dual_curvature(fs1).at(0, 0, 0, 0) == Complex(-2.0, 0.0));

  for (int t = 0; t < 6; ++t) {
    const CurvatureTensor r = random_tensor(300 + t, 1 + t % 3, 1 + (t / 2) % 3);
    CHECK(max_abs_diff(dual_curvature(dual_curvature(r)), r) == 0.0);
  }
}

TEST_CASE("tensor product with lines") {
  const CurvatureTensor fs = fubini_study_tangent(2);

  // zero line leaves the tensor unchanged
  const CurvatureTensor zero_line(2, 1);
  CHECK(max_abs_diff(tensor_curvature(fs, zero_line), fs) == 0.0);

  // FS tangent (x) its determinant: entries gain 3 delta_ij delta_ab
  const CurvatureTensor adjoint = tensor_curvature(fs, det_curvature(fs).as_tensor());
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) {
          const Complex expected =
              fs.at(i, j, a, b) + (i == j && a == b ? Complex(3.0, 0.0) : Complex(0.0, 0.0));
          CHECK(adjoint.at(i, j, a, b) == expected);
        }

  // two rank-1 lines multiply to the sum of their curvatures
  const CurvatureTensor la = projective_line_bundle(3, 2).as_tensor();
  const CurvatureTensor lb = projective_line_bundle(3, -5).as_tensor();
  CHECK(max_abs_diff(tensor_curvature(la, lb), projective_line_bundle(3, -3).as_tensor()) == 0.0);

  CHECK_THROWS_AS(tensor_curvature(fs, fubini_study_tangent(3)), std::invalid_argument);
}

TEST_CASE("determinant line: traces, additivity, twist rule") {
  for (int n = 1; n <= 4; ++n) {
    const LineCurvature det = det_curvature(fubini_study_tangent(n));
    CHECK((det.values - static_cast<double>(n + 1) * Eigen::MatrixXcd::Identity(n, n))
              .cwiseAbs()
              .maxCoeff() == 0.0);
  }
  CHECK(det_curvature(CurvatureTensor(3, 2)).values.cwiseAbs().maxCoeff() == 0.0);

  for (int t = 0; t < 6; ++t) {
    const int n = 1 + t % 3;
    const CurvatureTensor a = random_tensor(400 + t, n, 2), b = random_tensor(500 + t, n, 3);
    const Eigen::MatrixXcd sum_det = det_curvature(direct_sum_curvature(a, b)).values;
    CHECK((sum_det - det_curvature(a).values - det_curvature(b).values).cwiseAbs().maxCoeff() <=
          1e-14);

    // det(R twist c) = det(R) + rank * c
    const LineCurvature c = det_curvature(b);
    const Eigen::MatrixXcd twisted = det_curvature(twist_by_line(a, c)).values;
    CHECK((twisted - det_curvature(a).values - 2.0 * c.values).cwiseAbs().maxCoeff() <= 1e-13);
  }
}

TEST_CASE("direct sum spectra are unions of the block spectra") {
  for (int t = 0; t < 6; ++t) {
    const int n = 1 + t % 3;
    const CurvatureTensor a = random_tensor(600 + t, n, 2), b = random_tensor(700 + t, n, 3);
    const CurvatureTensor sum = direct_sum_curvature(a, b);

    Eigen::VectorXd merged(nakano_matrix(a).rows() + nakano_matrix(b).rows());
    merged << hermitian_eigensystem(nakano_matrix(a)).values,
        hermitian_eigensystem(nakano_matrix(b)).values;
    std::sort(merged.begin(), merged.end());
    const Eigen::VectorXd actual = hermitian_eigensystem(nakano_matrix(sum)).values;
    CHECK((merged - actual).cwiseAbs().maxCoeff() <= 1e-11);
  }
}

TEST_CASE("twist by a line and its negation is the identity") {
  const CurvatureTensor r = random_tensor(800, 2, 3);
  const LineCurvature c = projective_line_bundle(2, 4);
  const LineCurvature minus_c(-c.values);
  // add-then-subtract of the twist constant can lose one low bit
  CHECK(max_abs_diff(twist_by_line(twist_by_line(r, c), minus_c), r) <= 1e-15);
  CHECK(max_abs_diff(twist_by_line(r, LineCurvature(Eigen::MatrixXcd::Zero(2, 2))), r) == 0.0);
}

TEST_CASE("symmetric power basics") {
  const CurvatureTensor r = random_tensor(900, 2, 3);
  const SymPowerCurvature s1 = sym_power_curvature(r, 1);
  CHECK(max_abs_diff(s1.tensor, r) == 0.0);
  CHECK((s1.gram.values - Eigen::MatrixXcd::Identity(3, 3)).cwiseAbs().maxCoeff() == 0.0);

  CHECK_THROWS_AS(sym_power_curvature(r, 0), std::invalid_argument);

  // degree-2 component of the FS tangent on P^2 at i=j=0, A=B=(1,1)
  const SymPowerCurvature s2 = sym_power_curvature(fubini_study_tangent(2), 2);
  CHECK(s2.tensor.at(0, 0, 0, 0) == Complex(8.0, 0.0));
  CHECK(s2.gram.values(0, 0) == Complex(2.0, 0.0));
  CHECK(s2.gram.values(1, 1) == Complex(1.0, 0.0));
}

TEST_CASE("orthonormalize_frame: identity Gram, scaling law, PD guard") {
  const CurvatureTensor r = random_tensor(1000, 2, 3);
  CHECK(max_abs_diff(orthonormalize_frame(r, MetricGram::identity(3)), r) <= 1e-13);

  // scaling the Gram by lambda scales margins by 1/lambda, classification fixed
  const MetricGram scaled(4.0 * Eigen::MatrixXcd::Identity(3, 3));
  const Verdict base = nakano_test(r);
  const Verdict quartered = nakano_test(orthonormalize_frame(r, scaled));
  CHECK(quartered.margin == doctest::Approx(base.margin / 4.0).epsilon(1e-12));
  CHECK(quartered.classification == base.classification);

  Eigen::MatrixXcd degenerate = Eigen::MatrixXcd::Identity(3, 3);
  degenerate(2, 2) = 1e-13;
  CHECK_THROWS_AS(orthonormalize_frame(r, MetricGram(degenerate)), std::invalid_argument);
}

TEST_CASE("orthonormalize_frame undoes an arbitrary frame change up to unitary") {
  // Push an orthonormal-frame tensor into a random frame Q (columns = new
  // frame), transport the Gram accordingly, and check the orthonormalized
  // result has the same Nakano spectrum.
  for (int t = 0; t < 8; ++t) {
    const int n = 1 + t % 2, r = 2 + t % 3;
    const CurvatureTensor original = random_tensor(1100 + t, n, r);
    Rng rng(1200 + t);
    Eigen::MatrixXcd q = rng.gaussian_matrix(r, r);
    q += 3.0 * Eigen::MatrixXcd::Identity(r, r);  // keep well-conditioned

    CurvatureTensor pushed(n, r);
    Eigen::MatrixXcd block(r, r);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        for (int a = 0; a < r; ++a)
          for (int b = 0; b < r; ++b) block(a, b) = original.at(i, j, a, b);
        const Eigen::MatrixXcd moved = q.transpose() * block * q.conjugate();
        for (int a = 0; a < r; ++a)
          for (int b = 0; b < r; ++b) pushed.at(i, j, a, b) = moved(a, b);
      }
    const MetricGram gram(q.transpose() * q.conjugate());

    const CurvatureTensor recovered = orthonormalize_frame(pushed, gram);
    CHECK(recovered.hermitian_symmetry_error() <= 1e-10);
    const Eigen::VectorXd expected = hermitian_eigensystem(nakano_matrix(original)).values;
    const Eigen::VectorXd actual = hermitian_eigensystem(nakano_matrix(recovered)).values;
    CHECK((expected - actual).cwiseAbs().maxCoeff() <= 1e-9);
  }
}

TEST_CASE("eigensolver handles the larger matrices the sym-power path produces") {
  Rng rng(4100);
  const int dim = 400;
  const Eigen::MatrixXcd x = rng.gaussian_matrix(dim, dim);
  const Eigen::MatrixXcd m = (x + x.adjoint()) / 2.0;
  const HermitianEigen eig = hermitian_eigensystem(m);
  const Eigen::MatrixXcd reconstructed =
      eig.vectors * eig.values.asDiagonal() * eig.vectors.adjoint();
  CHECK((reconstructed - m).cwiseAbs().maxCoeff() <= 1e-10 * m.cwiseAbs().maxCoeff() * dim);
  CHECK((eig.vectors.adjoint() * eig.vectors - Eigen::MatrixXcd::Identity(dim, dim))
            .cwiseAbs()
            .maxCoeff() <= 1e-11);
}

TEST_CASE("random tensor generator: determinism and margin shift") {
  const CurvatureTensor a = random_hermitian_curvature(7, 2, 3, 0.5);
  const CurvatureTensor b = random_hermitian_curvature(7, 2, 3, 0.5);
  CHECK(max_abs_diff(a, b) == 0.0);

  CHECK(nakano_test(a).margin >= 0.5);
  const CurvatureTensor c = random_hermitian_curvature(8, 2, 3, -10.0);
  CHECK(nakano_test(c).classification == Classification::negative);
}
