#pragma once

#include <Eigen/Dense>
#include <complex>
#include <cstdint>

namespace curvpos {

/// splitmix64 mixing step; used to derive independent substream seeds so that a
/// single master seed determines every random quantity in the library.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream);

/// Deterministic random source. Gaussian variates come from an explicit
/// Box-Muller transform on 53-bit uniforms, so results are identical across
/// standard library implementations (std::normal_distribution is not pinned).
class Rng {
 public:
  explicit Rng(std::uint64_t seed);

  std::uint64_t next_u64();
  double uniform();  // [0, 1)
  double gaussian();
  std::complex<double> complex_gaussian();  // E|z|^2 = 2 (unit-variance parts)

  /// Uniform point on the unit sphere of C^dim (normalized complex Gaussian).
  Eigen::VectorXcd sphere_point(int dim);

  Eigen::MatrixXcd gaussian_matrix(int rows, int cols);

 private:
  std::uint64_t state_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace curvpos
