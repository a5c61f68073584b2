#include "curvpos/rng.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace curvpos {

namespace {
std::uint64_t splitmix64_step(std::uint64_t& s) {
  s += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = s;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}
}  // namespace

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t s = seed ^ (0x9e3779b97f4a7c15ULL * (stream + 1));
  return splitmix64_step(s);
}

Rng::Rng(std::uint64_t seed) : state_(seed) {
  // warm up so nearby seeds decorrelate
  for (int t = 0; t < 4; ++t) splitmix64_step(state_);
}

std::uint64_t Rng::next_u64() { return splitmix64_step(state_); }

double Rng::uniform() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double Rng::gaussian() {
  if (have_spare_) {
    have_spare_ = false;
    return spare_;
  }
  double u1 = uniform();
  while (u1 <= 0.0) u1 = uniform();
  const double u2 = uniform();
  const double radius = std::sqrt(-2.0 * std::log(u1));
  const double angle = 2.0 * std::numbers::pi * u2;
  spare_ = radius * std::sin(angle);
  have_spare_ = true;
  return radius * std::cos(angle);
}

std::complex<double> Rng::complex_gaussian() {
  const double re = gaussian();
  const double im = gaussian();
  return {re, im};
}

Eigen::VectorXcd Rng::sphere_point(int dim) {
  if (dim < 1) throw std::invalid_argument("Rng::sphere_point: dim must be >= 1");
  Eigen::VectorXcd w(dim);
  double norm2 = 0.0;
  do {
    for (int t = 0; t < dim; ++t) w(t) = complex_gaussian();
    norm2 = w.squaredNorm();
  } while (norm2 == 0.0);
  return w / std::sqrt(norm2);
}

Eigen::MatrixXcd Rng::gaussian_matrix(int rows, int cols) {
  Eigen::MatrixXcd m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m(i, j) = complex_gaussian();
  return m;
}

}  // namespace curvpos
