#include "curvpos/models.hpp"

#include <stdexcept>

#include "curvpos/constructions.hpp"

namespace curvpos {

CurvatureTensor fubini_study_tangent(int n) {
  if (n < 1) throw std::invalid_argument("fubini_study_tangent: n must be >= 1");
  CurvatureTensor out(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l)
          out.at(i, j, k, l) = static_cast<double>((i == j && k == l) + (i == l && k == j));
  return out;
}

LineCurvature projective_line_bundle(int n, int m) {
  if (n < 1) throw std::invalid_argument("projective_line_bundle: n must be >= 1");
  return LineCurvature(static_cast<double>(m) * Eigen::MatrixXcd::Identity(n, n));
}

LineCurvature canonical_bundle(int n) { return projective_line_bundle(n, -(n + 1)); }

CurvatureTensor hyperbolic_cotangent(int n) {
  if (n < 2) throw std::invalid_argument("hyperbolic_cotangent: n must be >= 2");
  return dual_curvature(scale_curvature(fubini_study_tangent(n), -1.0));
}

CurvatureTensor direct_sum_lines(int n, const std::vector<int>& degrees) {
  if (degrees.empty()) throw std::invalid_argument("direct_sum_lines: need at least one degree");
  CurvatureTensor out = projective_line_bundle(n, degrees[0]).as_tensor();
  for (std::size_t t = 1; t < degrees.size(); ++t)
    out = direct_sum_curvature(out, projective_line_bundle(n, degrees[t]).as_tensor());
  return out;
}

CurvatureTensor counterexample_adjoint(int n, int r, int k0) {
  if (!((n == 4 && r == 2) || (n == 3 && r == 2)))
    throw std::invalid_argument(
        "counterexample_adjoint: only (n, r) = (4, 2) and (3, 2) are supported");
  CurvatureTensor bundle = direct_sum_lines(n, std::vector<int>(r, 1));
  const LineCurvature det = det_curvature(bundle);  // O(2)
  const LineCurvature det_power(static_cast<double>(k0) * det.values);
  return twist_by_line(twist_by_line(bundle, det_power), canonical_bundle(n));
}

}  // namespace curvpos
