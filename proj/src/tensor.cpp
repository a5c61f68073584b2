#include "curvpos/tensor.hpp"

#include <cmath>
#include <stdexcept>

namespace curvpos {

CurvatureTensor::CurvatureTensor(int base_dim, int rank)
    : base_dim_(base_dim), rank_(rank) {
  if (base_dim < 1) throw std::invalid_argument("CurvatureTensor: base_dim must be >= 1");
  if (rank < 1) throw std::invalid_argument("CurvatureTensor: rank must be >= 1");
  values_.assign(static_cast<std::size_t>(base_dim) * base_dim * rank * rank, Complex(0, 0));
}

double CurvatureTensor::hermitian_symmetry_error() const {
  double worst = 0.0;
  for (int i = 0; i < base_dim_; ++i)
    for (int j = 0; j < base_dim_; ++j)
      for (int a = 0; a < rank_; ++a)
        for (int b = 0; b < rank_; ++b)
          worst = std::max(worst, std::abs(at(i, j, a, b) - std::conj(at(j, i, b, a))));
  return worst;
}

void CurvatureTensor::check_valid(double tol) const {
  for (const Complex& v : values_) {
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
      throw std::invalid_argument("CurvatureTensor: non-finite entry");
  }
  if (hermitian_symmetry_error() > tol)
    throw std::invalid_argument("CurvatureTensor: Hermitian curvature symmetry violated");
}

LineCurvature::LineCurvature(Eigen::MatrixXcd v) : values(std::move(v)) {
  if (values.rows() != values.cols() || values.rows() < 1)
    throw std::invalid_argument("LineCurvature: matrix must be square and nonempty");
  const double scale = std::max(1.0, values.cwiseAbs().maxCoeff());
  if ((values - values.adjoint()).cwiseAbs().maxCoeff() > 1e-12 * scale)
    throw std::invalid_argument("LineCurvature: matrix must be Hermitian");
}

CurvatureTensor LineCurvature::as_tensor() const {
  CurvatureTensor out(base_dim(), 1);
  for (int i = 0; i < base_dim(); ++i)
    for (int j = 0; j < base_dim(); ++j) out.at(i, j, 0, 0) = values(i, j);
  return out;
}

MetricGram::MetricGram(Eigen::MatrixXcd v) : values(std::move(v)) {
  if (values.rows() != values.cols() || values.rows() < 1)
    throw std::invalid_argument("MetricGram: matrix must be square and nonempty");
  const double scale = std::max(1.0, values.cwiseAbs().maxCoeff());
  if ((values - values.adjoint()).cwiseAbs().maxCoeff() > 1e-12 * scale)
    throw std::invalid_argument("MetricGram: matrix must be Hermitian");
}

MetricGram MetricGram::identity(int dim) {
  return MetricGram(Eigen::MatrixXcd::Identity(dim, dim));
}

Eigen::MatrixXcd nakano_matrix(const CurvatureTensor& curv) {
  const int n = curv.base_dim(), r = curv.rank();
  Eigen::MatrixXcd m(n * r, n * r);
  for (int i = 0; i < n; ++i)
    for (int a = 0; a < r; ++a)
      for (int j = 0; j < n; ++j)
        for (int b = 0; b < r; ++b) m(i * r + a, j * r + b) = curv.at(i, j, a, b);
  return m;
}

Eigen::MatrixXcd dual_nakano_matrix(const CurvatureTensor& curv) {
  const int n = curv.base_dim(), r = curv.rank();
  Eigen::MatrixXcd m(n * r, n * r);
  for (int i = 0; i < n; ++i)
    for (int a = 0; a < r; ++a)
      for (int j = 0; j < n; ++j)
        for (int b = 0; b < r; ++b) m(i * r + a, j * r + b) = curv.at(j, i, a, b);
  return m;
}

CurvatureTensor tensor_from_nakano_matrix(const Eigen::MatrixXcd& m, int base_dim, int rank) {
  if (m.rows() != m.cols() || m.rows() != static_cast<long>(base_dim) * rank)
    throw std::invalid_argument("tensor_from_nakano_matrix: size mismatch");
  CurvatureTensor out(base_dim, rank);
  for (int i = 0; i < base_dim; ++i)
    for (int a = 0; a < rank; ++a)
      for (int j = 0; j < base_dim; ++j)
        for (int b = 0; b < rank; ++b) out.at(i, j, a, b) = m(i * rank + a, j * rank + b);
  return out;
}

Complex nakano_form(const CurvatureTensor& curv, const Eigen::VectorXcd& u) {
  const int n = curv.base_dim(), r = curv.rank();
  if (u.size() != static_cast<long>(n) * r)
    throw std::invalid_argument("nakano_form: vector size mismatch");
  Complex total(0, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int a = 0; a < r; ++a)
        for (int b = 0; b < r; ++b)
          total += curv.at(i, j, a, b) * u(i * r + a) * std::conj(u(j * r + b));
  return total;
}

Complex dual_nakano_form(const CurvatureTensor& curv, const Eigen::VectorXcd& u) {
  const int n = curv.base_dim(), r = curv.rank();
  if (u.size() != static_cast<long>(n) * r)
    throw std::invalid_argument("dual_nakano_form: vector size mismatch");
  Complex total(0, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int a = 0; a < r; ++a)
        for (int b = 0; b < r; ++b)
          total += curv.at(i, j, a, b) * u(i * r + b) * std::conj(u(j * r + a));
  return total;
}

Complex griffiths_form(const CurvatureTensor& curv, const Eigen::VectorXcd& u,
                       const Eigen::VectorXcd& v) {
  const int n = curv.base_dim(), r = curv.rank();
  if (u.size() != n || v.size() != r)
    throw std::invalid_argument("griffiths_form: vector size mismatch");
  Complex total(0, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int a = 0; a < r; ++a)
        for (int b = 0; b < r; ++b)
          total += curv.at(i, j, a, b) * u(i) * std::conj(u(j)) * v(a) * std::conj(v(b));
  return total;
}

}  // namespace curvpos
