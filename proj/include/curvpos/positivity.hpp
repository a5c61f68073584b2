#pragma once

#include <cstdint>
#include <string>

#include "curvpos/tensor.hpp"

namespace curvpos {

enum class Classification { positive, semi_positive, indefinite, semi_negative, negative };
enum class CertMethod { exact_eigen, multistart_heuristic };

std::string to_string(Classification c);
std::string to_string(CertMethod m);

/// Outcome of a positivity test. margin is the minimum of the certified form
/// over the unit sphere of its domain (best found, for the heuristic method);
/// max_value the corresponding maximum, used to separate indefinite from
/// semi-definite forms. The witness attains the margin and has unit norm.
///
/// tolerance is the effective threshold used for classification: the
/// caller-supplied relative tolerance times the largest |form value| seen.
/// A form that vanishes identically within tolerance classifies as
/// semi_positive (the enum carries no dedicated zero class).
struct Verdict {
  Classification classification = Classification::indefinite;
  double margin = 0.0;
  double max_value = 0.0;
  Eigen::VectorXcd witness;     // (i, alpha) pairs flattened, i major
  CertMethod method = CertMethod::exact_eigen;
  double tolerance = 0.0;       // effective absolute threshold
  int starts_used = 0;          // heuristic only
  bool converged = true;        // false = inconclusive heuristic

  Eigen::VectorXcd witness_u;   // heuristic only: base factor of the witness
  Eigen::VectorXcd witness_v;   // heuristic only: fiber factor
};

Classification classify(double min_value, double max_value, double tolerance);

inline constexpr double kDefaultRelTolerance = 1e-9;

/// Exact certification of sum R(i,j,a,b) u^{ia} conj(u^{jb}) > 0 by a full
/// eigendecomposition of the Nakano matrix.
Verdict nakano_test(const CurvatureTensor& curv, double rel_tolerance = kDefaultRelTolerance);

/// Exact certification of the index-swapped form sum R(i,j,a,b) u^{ib} conj(u^{ja}).
Verdict dual_nakano_test(const CurvatureTensor& curv, double rel_tolerance = kDefaultRelTolerance);

struct GriffithsOptions {
  int starts = 16;          // random restarts, on top of all coordinate pairs
  int max_iters = 200;      // alternating sweeps per start
  double rel_tolerance = kDefaultRelTolerance;
  std::uint64_t seed = 0;
};

/// Minimizes the biquadratic form over |u| = |v| = 1 by alternating exact
/// eigensteps from multiple starts. Exact (single Hermitian eigenproblem) when
/// base_dim == 1 or rank == 1; a heuristic upper bound on the true minimum
/// otherwise, flagged through Verdict::method. The maximum is estimated the
/// same way on the negated tensor, so the classification of an indefinite
/// form is also heuristic.
Verdict griffiths_test(const CurvatureTensor& curv, const GriffithsOptions& options = {});

/// 2x2 block partition of a square matrix: T = [A B; C D], A is p x p.
struct BlockMatrix {
  Eigen::MatrixXcd a, b, c, d;

  BlockMatrix() = default;
  BlockMatrix(Eigen::MatrixXcd a_, Eigen::MatrixXcd b_, Eigen::MatrixXcd c_,
              Eigen::MatrixXcd d_);
  static BlockMatrix split(const Eigen::MatrixXcd& t, int p);

  Eigen::MatrixXcd assembled() const;
};

/// A - B D^{-1} C. Throws if the smallest singular value of D is
/// <= sv_tolerance * max(1, largest singular value of D).
Eigen::MatrixXcd schur_complement(const BlockMatrix& t, double sv_tolerance = 1e-12);

/// Inverse of the assembled matrix built from the Schur complement S:
///   [ S^{-1}            -S^{-1} B D^{-1}                ]
///   [ -D^{-1} C S^{-1}   D^{-1} C S^{-1} B D^{-1} + D^{-1} ]
/// Throws if D or the assembled matrix is numerically singular.
Eigen::MatrixXcd block_inverse(const BlockMatrix& t, double sv_tolerance = 1e-12);

}  // namespace curvpos
