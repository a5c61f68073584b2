#include "curvpos/constructions.hpp"

#include <stdexcept>

#include "curvpos/linalg.hpp"
#include "curvpos/rng.hpp"

namespace curvpos {

namespace {
void require_same_base(const CurvatureTensor& lhs, const CurvatureTensor& rhs,
                       const char* what) {
  if (lhs.base_dim() != rhs.base_dim())
    throw std::invalid_argument(std::string(what) + ": base dimension mismatch");
}
}  // namespace

CurvatureTensor dual_curvature(const CurvatureTensor& curv) {
  const int n = curv.base_dim(), r = curv.rank();
  CurvatureTensor out(n, r);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int a = 0; a < r; ++a)
        for (int b = 0; b < r; ++b) out.at(i, j, a, b) = -curv.at(i, j, b, a);
  return out;
}

CurvatureTensor tensor_curvature(const CurvatureTensor& lhs, const CurvatureTensor& rhs) {
  require_same_base(lhs, rhs, "tensor_curvature");
  const int n = lhs.base_dim(), r1 = lhs.rank(), r2 = rhs.rank();
  CurvatureTensor out(n, r1 * r2);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int a = 0; a < r1; ++a)
        for (int b = 0; b < r1; ++b)
          for (int c = 0; c < r2; ++c)
            for (int d = 0; d < r2; ++d) {
              Complex value(0, 0);
              if (c == d) value += lhs.at(i, j, a, b);
              if (a == b) value += rhs.at(i, j, c, d);
              out.at(i, j, a * r2 + c, b * r2 + d) = value;
            }
  return out;
}

CurvatureTensor tensor_curvature(const CurvatureTensor& lhs, const LineCurvature& rhs) {
  return twist_by_line(lhs, rhs);
}

LineCurvature det_curvature(const CurvatureTensor& curv) {
  const int n = curv.base_dim(), r = curv.rank();
  Eigen::MatrixXcd trace = Eigen::MatrixXcd::Zero(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int a = 0; a < r; ++a) trace(i, j) += curv.at(i, j, a, a);
  return LineCurvature(std::move(trace));
}

CurvatureTensor direct_sum_curvature(const CurvatureTensor& lhs, const CurvatureTensor& rhs) {
  require_same_base(lhs, rhs, "direct_sum_curvature");
  const int n = lhs.base_dim(), r1 = lhs.rank(), r2 = rhs.rank();
  CurvatureTensor out(n, r1 + r2);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      for (int a = 0; a < r1; ++a)
        for (int b = 0; b < r1; ++b) out.at(i, j, a, b) = lhs.at(i, j, a, b);
      for (int c = 0; c < r2; ++c)
        for (int d = 0; d < r2; ++d) out.at(i, j, r1 + c, r1 + d) = rhs.at(i, j, c, d);
    }
  return out;
}

CurvatureTensor twist_by_line(const CurvatureTensor& curv, const LineCurvature& line) {
  if (curv.base_dim() != line.base_dim())
    throw std::invalid_argument("twist_by_line: base dimension mismatch");
  const int n = curv.base_dim(), r = curv.rank();
  CurvatureTensor out(n, r);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int a = 0; a < r; ++a)
        for (int b = 0; b < r; ++b)
          out.at(i, j, a, b) = curv.at(i, j, a, b) + (a == b ? line.values(i, j) : Complex(0, 0));
  return out;
}

CurvatureTensor scale_curvature(const CurvatureTensor& curv, double factor) {
  CurvatureTensor out = curv;
  for (Complex& v : out.flat()) v *= factor;
  return out;
}

SymPowerCurvature sym_power_curvature(const CurvatureTensor& curv, int degree) {
  if (degree < 1)
    throw std::invalid_argument("sym_power_curvature: degree must be >= 1 (use a trivial line for k = 0)");
  const int n = curv.base_dim(), r = curv.rank();
  std::vector<SymIndex> basis = enumerate_sym_indices(r, degree);
  const int dim = static_cast<int>(basis.size());

  CurvatureTensor out(n, dim);
  for (int ia = 0; ia < dim; ++ia) {
    const SymIndex& index_a = basis[ia];
    for (int ib = 0; ib < dim; ++ib) {
      const SymIndex& index_b = basis[ib];
      for (int s = 0; s < degree; ++s) {
        const SymIndex dropped_a = index_a.drop(s);
        for (int t = 0; t < degree; ++t) {
          const std::uint64_t weight = generalized_delta(dropped_a, index_b.drop(t));
          if (weight == 0) continue;
          const int a = index_a.entries[s] - 1;
          const int b = index_b.entries[t] - 1;
          for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
              out.at(i, j, ia, ib) += static_cast<double>(weight) * curv.at(i, j, a, b);
        }
      }
    }
  }

  Eigen::MatrixXcd gram(dim, dim);
  for (int ia = 0; ia < dim; ++ia)
    for (int ib = 0; ib < dim; ++ib)
      gram(ia, ib) = static_cast<double>(generalized_delta(basis[ia], basis[ib]));

  return {std::move(out), MetricGram(std::move(gram)), std::move(basis)};
}

CurvatureTensor orthonormalize_frame(const CurvatureTensor& curv, const MetricGram& gram) {
  if (gram.dim() != curv.rank())
    throw std::invalid_argument("orthonormalize_frame: Gram dimension does not match fiber rank");
  const Eigen::MatrixXcd s = hermitian_inverse_sqrt(gram.values);
  const int n = curv.base_dim(), r = curv.rank();
  CurvatureTensor out(n, r);
  Eigen::MatrixXcd block(r, r);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      for (int a = 0; a < r; ++a)
        for (int b = 0; b < r; ++b) block(a, b) = curv.at(i, j, a, b);
      block = s * block * s;
      for (int a = 0; a < r; ++a)
        for (int b = 0; b < r; ++b) out.at(i, j, a, b) = block(a, b);
    }
  return out;
}

CurvatureTensor orthonormal_sym_power(const CurvatureTensor& curv, int degree) {
  SymPowerCurvature sym = sym_power_curvature(curv, degree);
  return orthonormalize_frame(sym.tensor, sym.gram);
}

CurvatureTensor random_hermitian_curvature(std::uint64_t seed, int base_dim, int rank,
                                           double shift) {
  if (base_dim < 1 || rank < 1)
    throw std::invalid_argument("random_hermitian_curvature: base_dim and rank must be >= 1");
  Rng rng(seed);
  const int dim = base_dim * rank;
  const Eigen::MatrixXcd x = rng.gaussian_matrix(dim, dim);
  Eigen::MatrixXcd m = (x.adjoint() * x) / static_cast<double>(dim);
  m += shift * Eigen::MatrixXcd::Identity(dim, dim);
  return tensor_from_nakano_matrix(m, base_dim, rank);
}

}  // namespace curvpos
