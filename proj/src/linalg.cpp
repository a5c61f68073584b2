#include "curvpos/linalg.hpp"

#include <stdexcept>

namespace curvpos {

HermitianEigen hermitian_eigensystem(const Eigen::MatrixXcd& m) {
  if (m.rows() != m.cols())
    throw std::invalid_argument("hermitian_eigensystem: matrix must be square");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("hermitian_eigensystem: eigensolver did not converge");
  return {solver.eigenvalues(), solver.eigenvectors()};
}

Eigen::MatrixXcd hermitian_inverse_sqrt(const Eigen::MatrixXcd& g, double min_eigenvalue) {
  const HermitianEigen eig = hermitian_eigensystem(g);
  if (eig.values.minCoeff() <= min_eigenvalue)
    throw std::invalid_argument("hermitian_inverse_sqrt: matrix is not positive definite");
  Eigen::VectorXd inv_sqrt = eig.values.array().sqrt().inverse();
  return eig.vectors * inv_sqrt.asDiagonal() * eig.vectors.adjoint();
}

}  // namespace curvpos
