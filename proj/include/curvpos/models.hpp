#pragma once

#include <vector>

#include "curvpos/tensor.hpp"

namespace curvpos {

/// Tangent bundle of projective n-space with the Fubini-Study metric, at a
/// point in an orthonormal frame: R(i,j,k,l) = d_ij d_kl + d_il d_kj.
/// Semi-Nakano-positive (margin 0), dual-Nakano-positive (margin 1) for n >= 2.
CurvatureTensor fubini_study_tangent(int n);

/// O(m) on projective n-space, normalized so that O(n+1) is the determinant of
/// the Fubini-Study tangent bundle: c[i][j] = m d_ij.
LineCurvature projective_line_bundle(int n, int m);

/// Canonical bundle of projective n-space: O(-(n+1)).
LineCurvature canonical_bundle(int n);

/// Cotangent bundle of a compact quotient of complex hyperbolic space,
/// normalized so the tangent curvature is exactly the negated Fubini-Study
/// tensor: R(i,j,a,b) = d_ij d_ab + d_ia d_jb. Nakano-positive (margin 1)
/// but not dual-Nakano-positive for n >= 2; n = 1 is rejected because the
/// dual-Nakano degeneracy needs two base directions.
CurvatureTensor hyperbolic_cotangent(int n);

/// Direct sum of line bundles O(d_1) + ... + O(d_k) on projective n-space.
CurvatureTensor direct_sum_lines(int n, const std::vector<int>& degrees);

/// E (x) (det E)^k0 (x) K_S for E = O(1) + O(1) on projective n-space: each
/// summand evaluates to O(2 k0 - n). Supported only for the (n, r) pairs
/// (4, 2) and (3, 2); anything else is rejected rather than extrapolated.
CurvatureTensor counterexample_adjoint(int n, int r, int k0);

}  // namespace curvpos
