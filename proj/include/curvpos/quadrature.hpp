#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <vector>

#include "curvpos/multiindex.hpp"
#include "curvpos/tensor.hpp"

namespace curvpos {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

BigInt factorial(int n);

/// Exact monomial integral over projective (r-1)-space with the Fubini-Study
/// volume normalized to total mass 1/(r-1)!:
///
///   integral of V_A(W) conj(V_B(W)) / |W|^{2k}  =  delta(A, B) / (r+k-1)!
///
/// where V_A(W) = W_{A_1} ... W_{A_k} and delta is the generalized Kronecker
/// delta (permanent). The k = 0 case returns the total mass 1/(r-1)!.
Rational monomial_integral_exact(const SymIndex& a, const SymIndex& b, int rank);

/// Seeded Monte Carlo estimate with standard error; the independent numeric
/// oracle for monomial_integral_exact.
struct MCEstimate {
  Complex value{0.0, 0.0};
  double stderr_value = 0.0;
  std::size_t samples = 0;
  std::uint64_t seed = 0;

  double deviation_sigmas(const Rational& exact) const;
};

/// Averages V_A(W) conj(V_B(W)) over uniform points of the unit sphere of C^r
/// (normalized complex Gaussians; |W| = 1 makes the denominator trivial) and
/// rescales by the total mass 1/(r-1)!. Samples are drawn in fixed batches
/// with per-batch derived seeds and Kahan-summed, so the master seed fully
/// determines the result independent of evaluation order.
MCEstimate monomial_integral_mc(const SymIndex& a, const SymIndex& b, int rank,
                                std::size_t samples, std::uint64_t seed);

/// MC estimates for every basis pair of degree k over rank r, reusing one
/// sample stream; returned row-major over enumerate_sym_indices(rank, degree).
std::vector<MCEstimate> monomial_integral_mc_table(int rank, int degree, std::size_t samples,
                                                   std::uint64_t seed);

/// Exact Gram of the L2 metric induced on the degree-k symmetric power by the
/// canonical fiber polarization (k+r) * omega_FS, in the monomial basis and an
/// orthonormal base frame:
///
///   g[A][B] = (k+r)^{r-1} * monomial_integral_exact(A, B, r)
///           = [(r+k)^{r-1} / (r+k-1)!] * delta(A, B).
std::vector<Rational> l2_induced_metric_exact(int rank, int degree);  // row-major
MetricGram l2_induced_metric(int rank, int degree);

/// Max componentwise residual of the exact identity
///
///   R(i,j,a,b) + d_ab * tr_fiber R(i,j)  =  r! * integral (W_a conj(W_b)/|W|^2) phi_ij
///
/// with phi_ij(W) = (r+1) sum_{cd} R(i,j,c,d) W_d conj(W_c) / |W|^2. The right
/// side is expanded into degree-(2,2) monomials and evaluated with
/// monomial_integral_exact, so the residual is pure round-off.
double demailly_skoda_identity_residual(const CurvatureTensor& curv);

/// Non-zero homogeneous coordinates on the fiber projective space; all uses
/// are invariant under rescaling.
struct HomogeneousPoint {
  Eigen::VectorXcd w;
  explicit HomogeneousPoint(Eigen::VectorXcd coords);
};

enum class ProjectivizationVariant {
  dual_projectivization,   //  sum R(i,j,a,b) W_b conj(W_a) / |W|^2
  direct_projectivization  // -sum R(i,j,a,b) W_a conj(W_b) / |W|^2
};

/// Horizontal Hessian of the induced quotient metric on the tautological line
/// bundle of the projectivized bundle, evaluated at W. Hermitian; positive
/// definite in the dual variant whenever the tensor is Griffiths-positive.
Eigen::MatrixXcd quotient_horizontal_curvature(const CurvatureTensor& curv,
                                               const HomogeneousPoint& point,
                                               ProjectivizationVariant variant);

}  // namespace curvpos
