#pragma once

#include <cstdint>

#include "curvpos/multiindex.hpp"
#include "curvpos/tensor.hpp"

namespace curvpos {

/// Curvature of the dual bundle: out(i,j,a,b) = -R(i,j,b,a). Involution.
CurvatureTensor dual_curvature(const CurvatureTensor& curv);

/// Leibniz rule on the lexicographic product basis (a,c) -> a*r2 + c:
/// out = R1(i,j,a,b) delta_{cd} + delta_{ab} R2(i,j,c,d). Base dims must match.
CurvatureTensor tensor_curvature(const CurvatureTensor& lhs, const CurvatureTensor& rhs);
CurvatureTensor tensor_curvature(const CurvatureTensor& lhs, const LineCurvature& rhs);

/// Fiber trace c[i][j] = sum_a R(i,j,a,a); the determinant line bundle.
LineCurvature det_curvature(const CurvatureTensor& curv);

/// Block-diagonal direct sum in the fiber indices.
CurvatureTensor direct_sum_curvature(const CurvatureTensor& lhs, const CurvatureTensor& rhs);

/// out(i,j,a,b) = R(i,j,a,b) + c(i,j) delta_{ab}. Base dims must match.
CurvatureTensor twist_by_line(const CurvatureTensor& curv, const LineCurvature& line);

CurvatureTensor scale_curvature(const CurvatureTensor& curv, double factor);

struct SymPowerCurvature {
  CurvatureTensor tensor;         // components in the monomial frame
  MetricGram gram;                // Gram of that frame: generalized_delta(A, B)
  std::vector<SymIndex> basis;    // enumerate_sym_indices(rank, degree) order
};

/// Curvature of the degree-k symmetric power in the monomial basis:
///   out(i,j,A,B) = sum_{s,t} R(i,j,A[s],B[t]) * generalized_delta(A_s, B_t)
/// where A_s drops the s-th entry. The input must be in an orthonormal frame;
/// the returned components are paired with the (non-orthonormal) monomial
/// Gram, so positivity tests compose with orthonormalize_frame. k = 0 is
/// rejected (a trivial line carries no fiber data worth the degenerate case).
SymPowerCurvature sym_power_curvature(const CurvatureTensor& curv, int degree);

/// Transports curvature components from a frame with Gram g to an orthonormal
/// frame. With S = g^{-1/2} (Hermitian) the fiber blocks map as F -> S F S,
/// which sends the Gram to the identity and preserves every metric-normalized
/// positivity margin. Throws if g has an eigenvalue <= 1e-12.
CurvatureTensor orthonormalize_frame(const CurvatureTensor& curv, const MetricGram& gram);

/// sym_power_curvature composed with orthonormalize_frame: the orthonormal
/// frame curvature of (S^k E, S^k h).
CurvatureTensor orthonormal_sym_power(const CurvatureTensor& curv, int degree);

/// Deterministic test-data generator: the Nakano matrix of the result is
/// X* X / (n r) + shift * I for a seeded complex Gaussian X, so the Nakano
/// margin is >= shift and the spectrum stays O(1).
CurvatureTensor random_hermitian_curvature(std::uint64_t seed, int base_dim, int rank,
                                           double shift);

}  // namespace curvpos
