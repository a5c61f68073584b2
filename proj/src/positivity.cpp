#include "curvpos/positivity.hpp"

#include <cmath>
#include <stdexcept>

#include "curvpos/constructions.hpp"
#include "curvpos/linalg.hpp"
#include "curvpos/rng.hpp"

namespace curvpos {

std::string to_string(Classification c) {
  switch (c) {
    case Classification::positive: return "positive";
    case Classification::semi_positive: return "semi_positive";
    case Classification::indefinite: return "indefinite";
    case Classification::semi_negative: return "semi_negative";
    case Classification::negative: return "negative";
  }
  return "unknown";
}

std::string to_string(CertMethod m) {
  return m == CertMethod::exact_eigen ? "exact_eigen" : "multistart_heuristic";
}

Classification classify(double min_value, double max_value, double tolerance) {
  if (min_value > tolerance) return Classification::positive;
  if (max_value < -tolerance) return Classification::negative;
  if (min_value >= -tolerance) return Classification::semi_positive;
  if (max_value <= tolerance) return Classification::semi_negative;
  return Classification::indefinite;
}

namespace {

Verdict eigen_verdict(const Eigen::MatrixXcd& matrix, double rel_tolerance,
                      bool conjugate_witness = false) {
  const HermitianEigen eig = hermitian_eigensystem(matrix);
  const long dim = eig.values.size();
  Verdict verdict;
  verdict.margin = eig.values(0);
  verdict.max_value = eig.values(dim - 1);
  verdict.witness = eig.vectors.col(0);
  // When the certified form conjugates the opposite slot from the matrix
  // quadratic form, the attaining unit vector is the conjugate eigenvector.
  if (conjugate_witness) verdict.witness = verdict.witness.conjugate().eval();
  verdict.method = CertMethod::exact_eigen;
  verdict.tolerance = rel_tolerance * std::max(std::abs(verdict.margin), std::abs(verdict.max_value));
  verdict.classification = classify(verdict.margin, verdict.max_value, verdict.tolerance);
  return verdict;
}

}  // namespace

Verdict nakano_test(const CurvatureTensor& curv, double rel_tolerance) {
  return eigen_verdict(nakano_matrix(curv), rel_tolerance, /*conjugate_witness=*/true);
}

Verdict dual_nakano_test(const CurvatureTensor& curv, double rel_tolerance) {
  return eigen_verdict(dual_nakano_matrix(curv), rel_tolerance);
}

namespace {

// Matrix of the u-subproblem at fixed v: f(u, v) = u^* conj(H) u with
// H[i][j] = sum_{ab} R(i,j,a,b) v^a conj(v^b).
Eigen::MatrixXcd base_direction_matrix(const CurvatureTensor& curv, const Eigen::VectorXcd& v) {
  const int n = curv.base_dim(), r = curv.rank();
  Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Complex sum(0, 0);
      for (int a = 0; a < r; ++a)
        for (int b = 0; b < r; ++b) sum += curv.at(i, j, a, b) * v(a) * std::conj(v(b));
      h(i, j) = sum;
    }
  return h.conjugate();
}

// Matrix of the v-subproblem at fixed u.
Eigen::MatrixXcd fiber_direction_matrix(const CurvatureTensor& curv, const Eigen::VectorXcd& u) {
  const int n = curv.base_dim(), r = curv.rank();
  Eigen::MatrixXcd g = Eigen::MatrixXcd::Zero(r, r);
  for (int a = 0; a < r; ++a)
    for (int b = 0; b < r; ++b) {
      Complex sum(0, 0);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) sum += curv.at(i, j, a, b) * u(i) * std::conj(u(j));
      g(a, b) = sum;
    }
  return g.conjugate();
}

// Smallest eigenvector; on a degenerate smallest eigenvalue picks the vector
// in the eigenspace with maximal overlap with prev, for continuity of the
// alternating iteration.
Eigen::VectorXcd smallest_eigenvector(const Eigen::MatrixXcd& m, const Eigen::VectorXcd* prev) {
  const HermitianEigen eig = hermitian_eigensystem(m);
  const long dim = eig.values.size();
  const double scale = std::max({1.0, std::abs(eig.values(0)), std::abs(eig.values(dim - 1))});
  const double degeneracy_tol = 1e-12 * scale;
  long multiplicity = 1;
  while (multiplicity < dim && eig.values(multiplicity) - eig.values(0) <= degeneracy_tol)
    ++multiplicity;
  if (multiplicity == 1 || prev == nullptr || prev->size() != dim)
    return eig.vectors.col(0);
  Eigen::VectorXcd projected = Eigen::VectorXcd::Zero(dim);
  for (long c = 0; c < multiplicity; ++c)
    projected += eig.vectors.col(c) * (eig.vectors.col(c).adjoint() * (*prev));
  const double norm = projected.norm();
  if (norm < 1e-8) return eig.vectors.col(0);
  return projected / norm;
}

struct StartResult {
  double value = 0.0;
  Eigen::VectorXcd u, v;
  bool converged = false;
};

StartResult run_alternating_start(const CurvatureTensor& curv, Eigen::VectorXcd u,
                                  Eigen::VectorXcd v, int max_iters) {
  StartResult result;
  double value = griffiths_form(curv, u, v).real();
  for (int iter = 0; iter < max_iters; ++iter) {
    u = smallest_eigenvector(base_direction_matrix(curv, v), &u);
    v = smallest_eigenvector(fiber_direction_matrix(curv, u), &v);
    const double next = griffiths_form(curv, u, v).real();
    const bool settled = std::abs(value - next) < 1e-12;
    value = next;
    if (settled) {
      result.converged = true;
      break;
    }
  }
  result.value = value;
  result.u = std::move(u);
  result.v = std::move(v);
  return result;
}

struct MultistartOutcome {
  double best = 0.0;
  Eigen::VectorXcd u, v;
  bool any_converged = false;
  int starts_used = 0;
};

MultistartOutcome minimize_biquadratic(const CurvatureTensor& curv,
                                       const GriffithsOptions& options) {
  const int n = curv.base_dim(), r = curv.rank();
  MultistartOutcome outcome;
  bool have_result = false;

  auto consider = [&](Eigen::VectorXcd u0, Eigen::VectorXcd v0) {
    StartResult res = run_alternating_start(curv, std::move(u0), std::move(v0), options.max_iters);
    ++outcome.starts_used;
    outcome.any_converged = outcome.any_converged || res.converged;
    if (!have_result || res.value < outcome.best) {
      have_result = true;
      outcome.best = res.value;
      outcome.u = std::move(res.u);
      outcome.v = std::move(res.v);
    }
  };

  for (int i = 0; i < n; ++i)
    for (int a = 0; a < r; ++a) {
      Eigen::VectorXcd u0 = Eigen::VectorXcd::Zero(n);
      Eigen::VectorXcd v0 = Eigen::VectorXcd::Zero(r);
      u0(i) = 1.0;
      v0(a) = 1.0;
      consider(std::move(u0), std::move(v0));
    }
  for (int s = 0; s < options.starts; ++s) {
    Rng rng(mix_seed(options.seed, static_cast<std::uint64_t>(s)));
    consider(rng.sphere_point(n), rng.sphere_point(r));
  }
  return outcome;
}

}  // namespace

Verdict griffiths_test(const CurvatureTensor& curv, const GriffithsOptions& options) {
  if (options.starts < 1) throw std::invalid_argument("griffiths_test: starts must be >= 1");
  const int n = curv.base_dim(), r = curv.rank();

  // A line factor reduces the biquadratic form to a single Hermitian eigenproblem.
  if (n == 1 || r == 1) {
    const Eigen::MatrixXcd m = (n == 1)
        ? fiber_direction_matrix(curv, Eigen::VectorXcd::Ones(1))
        : base_direction_matrix(curv, Eigen::VectorXcd::Ones(1));
    Verdict verdict = eigen_verdict(m, options.rel_tolerance);
    if (n == 1) {
      verdict.witness_u = Eigen::VectorXcd::Ones(1);
      verdict.witness_v = verdict.witness;
    } else {
      verdict.witness_u = verdict.witness;
      verdict.witness_v = Eigen::VectorXcd::Ones(1);
    }
    Eigen::VectorXcd w(n * r);
    for (int i = 0; i < n; ++i)
      for (int a = 0; a < r; ++a) w(i * r + a) = verdict.witness_u(i) * verdict.witness_v(a);
    verdict.witness = std::move(w);
    return verdict;
  }

  const MultistartOutcome low = minimize_biquadratic(curv, options);
  GriffithsOptions flipped = options;
  flipped.seed = mix_seed(options.seed, 0x6d61786dULL);
  const MultistartOutcome high = minimize_biquadratic(scale_curvature(curv, -1.0), flipped);

  Verdict verdict;
  verdict.method = CertMethod::multistart_heuristic;
  verdict.margin = low.best;
  verdict.max_value = -high.best;
  verdict.witness_u = low.u;
  verdict.witness_v = low.v;
  Eigen::VectorXcd w(n * r);
  for (int i = 0; i < n; ++i)
    for (int a = 0; a < r; ++a) w(i * r + a) = low.u(i) * low.v(a);
  verdict.witness = std::move(w);
  verdict.starts_used = low.starts_used + high.starts_used;
  verdict.converged = low.any_converged && high.any_converged;
  verdict.tolerance =
      options.rel_tolerance * std::max(std::abs(verdict.margin), std::abs(verdict.max_value));
  verdict.classification = classify(verdict.margin, verdict.max_value, verdict.tolerance);
  return verdict;
}

BlockMatrix::BlockMatrix(Eigen::MatrixXcd a_, Eigen::MatrixXcd b_, Eigen::MatrixXcd c_,
                         Eigen::MatrixXcd d_)
    : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)), d(std::move(d_)) {
  if (a.rows() != b.rows() || c.rows() != d.rows() || a.cols() != c.cols() ||
      b.cols() != d.cols())
    throw std::invalid_argument("BlockMatrix: inconsistent block dimensions");
}

BlockMatrix BlockMatrix::split(const Eigen::MatrixXcd& t, int p) {
  if (t.rows() != t.cols()) throw std::invalid_argument("BlockMatrix::split: matrix not square");
  const int total = static_cast<int>(t.rows());
  if (p < 1 || p >= total)
    throw std::invalid_argument("BlockMatrix::split: block size out of range");
  const int q = total - p;
  return BlockMatrix(t.topLeftCorner(p, p), t.topRightCorner(p, q), t.bottomLeftCorner(q, p),
                     t.bottomRightCorner(q, q));
}

Eigen::MatrixXcd BlockMatrix::assembled() const {
  const long p = a.rows(), q = d.rows();
  Eigen::MatrixXcd t(p + q, p + q);
  t.topLeftCorner(p, p) = a;
  t.topRightCorner(p, q) = b;
  t.bottomLeftCorner(q, p) = c;
  t.bottomRightCorner(q, q) = d;
  return t;
}

namespace {
void require_invertible(const Eigen::MatrixXcd& m, double sv_tolerance, const char* what) {
  const Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m);
  const double smallest = svd.singularValues()(svd.singularValues().size() - 1);
  const double largest = svd.singularValues()(0);
  if (smallest <= sv_tolerance * std::max(1.0, largest))
    throw std::invalid_argument(std::string(what) + " is numerically singular");
}
}  // namespace

Eigen::MatrixXcd schur_complement(const BlockMatrix& t, double sv_tolerance) {
  if (t.a.rows() != t.a.cols() || t.d.rows() != t.d.cols())
    throw std::invalid_argument("schur_complement: diagonal blocks must be square");
  require_invertible(t.d, sv_tolerance, "schur_complement: block D");
  return t.a - t.b * t.d.partialPivLu().solve(t.c);
}

Eigen::MatrixXcd block_inverse(const BlockMatrix& t, double sv_tolerance) {
  require_invertible(t.assembled(), sv_tolerance, "block_inverse: assembled matrix");
  const Eigen::MatrixXcd complement = schur_complement(t, sv_tolerance);
  require_invertible(complement, sv_tolerance, "block_inverse: Schur complement");

  const Eigen::PartialPivLU<Eigen::MatrixXcd> lu_d(t.d);
  const Eigen::PartialPivLU<Eigen::MatrixXcd> lu_s(complement);
  const long p = t.a.rows(), q = t.d.rows();
  const Eigen::MatrixXcd s_inv = lu_s.solve(Eigen::MatrixXcd::Identity(p, p));
  const Eigen::MatrixXcd d_inv = lu_d.solve(Eigen::MatrixXcd::Identity(q, q));
  const Eigen::MatrixXcd d_inv_c = lu_d.solve(t.c);
  const Eigen::MatrixXcd b_d_inv = t.b * d_inv;

  Eigen::MatrixXcd inv(p + q, p + q);
  inv.topLeftCorner(p, p) = s_inv;
  inv.topRightCorner(p, q) = -s_inv * b_d_inv;
  inv.bottomLeftCorner(q, p) = -d_inv_c * s_inv;
  inv.bottomRightCorner(q, q) = d_inv_c * s_inv * b_d_inv + d_inv;
  return inv;
}

}  // namespace curvpos
