#pragma once

#include <Eigen/Dense>
#include <complex>
#include <span>
#include <vector>

namespace curvpos {

using Complex = std::complex<double>;

/// Pointwise Chern curvature R_{i jbar alpha betabar} of a Hermitian bundle at
/// a point, expressed in orthonormal frames of both the base tangent space and
/// the fiber, with the sqrt(-1)/2pi form prefactor stripped.
///
/// Index convention: at(i, j, a, b) with 0-based i, j in 0..base_dim-1 (base
/// directions, j conjugated) and a, b in 0..rank-1 (fiber directions, b
/// conjugated). The defining symmetry is at(i,j,a,b) == conj(at(j,i,b,a)),
/// which is exactly Hermiticity of the flattened (i,a) x (j,b) matrix.
class CurvatureTensor {
 public:
  CurvatureTensor(int base_dim, int rank);

  int base_dim() const { return base_dim_; }
  int rank() const { return rank_; }

  Complex& at(int i, int j, int a, int b) { return values_[offset(i, j, a, b)]; }
  const Complex& at(int i, int j, int a, int b) const { return values_[offset(i, j, a, b)]; }

  std::span<const Complex> flat() const { return values_; }
  std::span<Complex> flat() { return values_; }

  /// max |at(i,j,a,b) - conj(at(j,i,b,a))| over all indices.
  double hermitian_symmetry_error() const;

  /// Throws std::invalid_argument on NaN/Inf entries or symmetry error > tol.
  void check_valid(double tol = 1e-12) const;

 private:
  std::size_t offset(int i, int j, int a, int b) const {
    return ((static_cast<std::size_t>(i) * base_dim_ + j) * rank_ + a) * rank_ + b;
  }
  int base_dim_;
  int rank_;
  std::vector<Complex> values_;
};

/// Curvature of a Hermitian line bundle: an n x n Hermitian matrix c[i][j].
/// Equivalent to a rank-1 CurvatureTensor.
struct LineCurvature {
  Eigen::MatrixXcd values;

  LineCurvature() = default;
  explicit LineCurvature(Eigen::MatrixXcd v);

  int base_dim() const { return static_cast<int>(values.rows()); }
  CurvatureTensor as_tensor() const;
};

/// Hermitian positive definite Gram matrix of a fiber frame.
struct MetricGram {
  Eigen::MatrixXcd values;

  MetricGram() = default;
  explicit MetricGram(Eigen::MatrixXcd v);

  int dim() const { return static_cast<int>(values.rows()); }
  static MetricGram identity(int dim);
};

/// Hermitian (n*r) x (n*r) matrix M with M[(i,a)][(j,b)] = R(i,j,a,b), pair
/// index p = i*rank + a. The Nakano form is u* M u for u = (u^{ia}).
Eigen::MatrixXcd nakano_matrix(const CurvatureTensor& curv);

/// Hermitian matrix D with D[(i,a)][(j,b)] = R(j,i,a,b); the dual-Nakano form
/// sum R(i,j,a,b) u^{ib} conj(u^{ja}) equals u* D u under the same pair index.
Eigen::MatrixXcd dual_nakano_matrix(const CurvatureTensor& curv);

/// Rebuilds a tensor from a Hermitian nakano matrix (inverse of nakano_matrix).
CurvatureTensor tensor_from_nakano_matrix(const Eigen::MatrixXcd& m, int base_dim, int rank);

Complex nakano_form(const CurvatureTensor& curv, const Eigen::VectorXcd& u);
Complex dual_nakano_form(const CurvatureTensor& curv, const Eigen::VectorXcd& u);

/// Biquadratic form sum R(i,j,a,b) u^i conj(u^j) v^a conj(v^b).
Complex griffiths_form(const CurvatureTensor& curv, const Eigen::VectorXcd& u,
                       const Eigen::VectorXcd& v);

}  // namespace curvpos
