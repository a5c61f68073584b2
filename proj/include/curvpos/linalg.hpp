#pragma once

#include <Eigen/Dense>

namespace curvpos {

struct HermitianEigen {
  Eigen::VectorXd values;   // ascending
  Eigen::MatrixXcd vectors; // columns
};

/// Full eigendecomposition of a Hermitian matrix. Throws std::runtime_error if
/// the solver does not converge; failures are never silently ignored.
HermitianEigen hermitian_eigensystem(const Eigen::MatrixXcd& m);

/// Hermitian principal inverse square root g^{-1/2}. Throws if any eigenvalue
/// of g is <= min_eigenvalue (near-singular Grams are an error, not repaired).
Eigen::MatrixXcd hermitian_inverse_sqrt(const Eigen::MatrixXcd& g,
                                        double min_eigenvalue = 1e-12);

}  // namespace curvpos
