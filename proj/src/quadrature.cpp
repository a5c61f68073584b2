#include "curvpos/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <utility>

#include "curvpos/rng.hpp"

namespace curvpos {

BigInt factorial(int n) {
  if (n < 0) throw std::invalid_argument("factorial: negative argument");
  BigInt result = 1;
  for (int t = 2; t <= n; ++t) result *= t;
  return result;
}

namespace {
void require_index_range(const SymIndex& a, int rank, const char* what) {
  for (int e : a.entries)
    if (e < 1 || e > rank) throw std::invalid_argument(std::string(what) + ": index out of range");
}
}  // namespace

Rational monomial_integral_exact(const SymIndex& a, const SymIndex& b, int rank) {
  if (rank < 1) throw std::invalid_argument("monomial_integral_exact: rank must be >= 1");
  if (a.degree() != b.degree())
    throw std::invalid_argument("monomial_integral_exact: index length mismatch");
  require_index_range(a, rank, "monomial_integral_exact");
  require_index_range(b, rank, "monomial_integral_exact");
  const int k = a.degree();
  return Rational(BigInt(generalized_delta(a, b)), factorial(rank + k - 1));
}

double MCEstimate::deviation_sigmas(const Rational& exact) const {
  const double target = static_cast<double>(exact);
  const double distance = std::abs(value - Complex(target, 0.0));
  if (stderr_value == 0.0) return distance == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
  return distance / stderr_value;
}

namespace {

constexpr std::size_t kBatchSize = 8192;

struct KahanAccumulator {
  double sum = 0.0, carry = 0.0;
  void add(double x) {
    const double y = x - carry;
    const double t = sum + y;
    carry = (t - sum) - y;
    sum = t;
  }
};

Complex monomial_value(const Eigen::VectorXcd& w, const SymIndex& index) {
  Complex v(1.0, 0.0);
  for (int e : index.entries) v *= w(e - 1);
  return v;
}

}  // namespace

// Per-pair running sums for one batch: sample sum (re, im) and squared-modulus
// sum. Batches draw from independently derived seeds over a fixed partition
// and are combined in batch-index order, so scheduling can never change the
// result.
struct BatchSums {
  std::vector<double> re, im, sq;
  explicit BatchSums(std::size_t pairs) : re(pairs), im(pairs), sq(pairs) {}
};

BatchSums accumulate_batch(const std::vector<SymIndex>& basis, int rank, Rng& rng,
                           std::size_t count) {
  const std::size_t m = basis.size();
  BatchSums sums(m * m);
  std::vector<KahanAccumulator> acc_re(m * m), acc_im(m * m), acc_sq(m * m);
  std::vector<Complex> monomials(m);
  for (std::size_t s = 0; s < count; ++s) {
    const Eigen::VectorXcd w = rng.sphere_point(rank);
    for (std::size_t t = 0; t < m; ++t) monomials[t] = monomial_value(w, basis[t]);
    for (std::size_t ia = 0; ia < m; ++ia)
      for (std::size_t ib = 0; ib < m; ++ib) {
        const Complex x = monomials[ia] * std::conj(monomials[ib]);
        const std::size_t p = ia * m + ib;
        acc_re[p].add(x.real());
        acc_im[p].add(x.imag());
        acc_sq[p].add(std::norm(x));
      }
  }
  for (std::size_t p = 0; p < m * m; ++p) {
    sums.re[p] = acc_re[p].sum;
    sums.im[p] = acc_im[p].sum;
    sums.sq[p] = acc_sq[p].sum;
  }
  return sums;
}

std::vector<MCEstimate> estimate_pairs(const std::vector<SymIndex>& basis, int rank,
                                       std::size_t samples, std::uint64_t seed) {
  const std::size_t m = basis.size();
  const std::size_t pairs = m * m;
  const std::size_t batches = (samples + kBatchSize - 1) / kBatchSize;

  std::vector<BatchSums> partials;
  partials.reserve(batches);
  std::size_t drawn = 0;
  for (std::size_t batch = 0; batch < batches; ++batch) {
    Rng rng(mix_seed(seed, batch));
    const std::size_t count = std::min(kBatchSize, samples - drawn);
    partials.push_back(accumulate_batch(basis, rank, rng, count));
    drawn += count;
  }

  std::vector<KahanAccumulator> sum_re(pairs), sum_im(pairs), sum_sq(pairs);
  for (const BatchSums& part : partials)
    for (std::size_t p = 0; p < pairs; ++p) {
      sum_re[p].add(part.re[p]);
      sum_im[p].add(part.im[p]);
      sum_sq[p].add(part.sq[p]);
    }

  const double mass = 1.0 / static_cast<double>(factorial(rank - 1));
  const double count = static_cast<double>(samples);
  std::vector<MCEstimate> out(pairs);
  for (std::size_t p = 0; p < pairs; ++p) {
    const Complex mean(sum_re[p].sum / count, sum_im[p].sum / count);
    const double variance = std::max(0.0, sum_sq[p].sum / count - std::norm(mean));
    out[p].value = mass * mean;
    out[p].stderr_value = mass * std::sqrt(variance / count);
    out[p].samples = samples;
    out[p].seed = seed;
  }
  return out;
}

std::vector<MCEstimate> monomial_integral_mc_table(int rank, int degree, std::size_t samples,
                                                   std::uint64_t seed) {
  if (rank < 1) throw std::invalid_argument("monomial_integral_mc_table: rank must be >= 1");
  if (samples < 1000)
    throw std::invalid_argument("monomial_integral_mc_table: need at least 1000 samples");
  return estimate_pairs(enumerate_sym_indices(rank, degree), rank, samples, seed);
}

MCEstimate monomial_integral_mc(const SymIndex& a, const SymIndex& b, int rank,
                                std::size_t samples, std::uint64_t seed) {
  if (rank < 1) throw std::invalid_argument("monomial_integral_mc: rank must be >= 1");
  if (a.degree() != b.degree())
    throw std::invalid_argument("monomial_integral_mc: index length mismatch");
  require_index_range(a, rank, "monomial_integral_mc");
  require_index_range(b, rank, "monomial_integral_mc");
  if (samples < 1000)
    throw std::invalid_argument("monomial_integral_mc: need at least 1000 samples");
  // the (a, b) estimate is the off-diagonal entry of the two-monomial table
  if (a.entries == b.entries) return estimate_pairs({a}, rank, samples, seed)[0];
  return estimate_pairs({a, b}, rank, samples, seed)[1];
}

std::vector<Rational> l2_induced_metric_exact(int rank, int degree) {
  if (rank < 1) throw std::invalid_argument("l2_induced_metric_exact: rank must be >= 1");
  if (degree < 0) throw std::invalid_argument("l2_induced_metric_exact: degree must be >= 0");
  const std::vector<SymIndex> basis = enumerate_sym_indices(rank, degree);
  const std::size_t m = basis.size();
  BigInt polarization = 1;  // (k + r)^{r-1}
  for (int t = 0; t < rank - 1; ++t) polarization *= (degree + rank);
  std::vector<Rational> out;
  out.reserve(m * m);
  for (std::size_t ia = 0; ia < m; ++ia)
    for (std::size_t ib = 0; ib < m; ++ib)
      out.push_back(Rational(polarization) * monomial_integral_exact(basis[ia], basis[ib], rank));
  return out;
}

MetricGram l2_induced_metric(int rank, int degree) {
  const std::vector<Rational> exact = l2_induced_metric_exact(rank, degree);
  const auto m = static_cast<long>(std::llround(std::sqrt(static_cast<double>(exact.size()))));
  Eigen::MatrixXcd gram(m, m);
  for (long ia = 0; ia < m; ++ia)
    for (long ib = 0; ib < m; ++ib) gram(ia, ib) = static_cast<double>(exact[ia * m + ib]);
  return MetricGram(std::move(gram));
}

double demailly_skoda_identity_residual(const CurvatureTensor& curv) {
  const int n = curv.base_dim(), r = curv.rank();
  // r! (r+1) * integral of (W_a conj(W_b) W_d conj(W_c)) / |W|^4, as an exact
  // rational per fiber index combination.
  const Rational front = Rational(factorial(r)) * (r + 1);
  std::vector<double> coefficient(static_cast<std::size_t>(r) * r * r * r);
  for (int a = 0; a < r; ++a)
    for (int b = 0; b < r; ++b)
      for (int c = 0; c < r; ++c)
        for (int d = 0; d < r; ++d) {
          std::vector<int> left = {a + 1, d + 1}, right = {b + 1, c + 1};
          if (left[0] > left[1]) std::swap(left[0], left[1]);
          if (right[0] > right[1]) std::swap(right[0], right[1]);
          const Rational weight =
              front * monomial_integral_exact(SymIndex(left), SymIndex(right), r);
          coefficient[((static_cast<std::size_t>(a) * r + b) * r + c) * r + d] =
              static_cast<double>(weight);
        }

  double worst = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Complex trace(0, 0);
      for (int g = 0; g < r; ++g) trace += curv.at(i, j, g, g);
      for (int a = 0; a < r; ++a)
        for (int b = 0; b < r; ++b) {
          const Complex lhs = curv.at(i, j, a, b) + (a == b ? trace : Complex(0, 0));
          Complex rhs(0, 0);
          for (int c = 0; c < r; ++c)
            for (int d = 0; d < r; ++d)
              rhs += coefficient[((static_cast<std::size_t>(a) * r + b) * r + c) * r + d] *
                     curv.at(i, j, c, d);
          worst = std::max(worst, std::abs(lhs - rhs));
        }
    }
  return worst;
}

HomogeneousPoint::HomogeneousPoint(Eigen::VectorXcd coords) : w(std::move(coords)) {
  if (w.size() < 1 || w.norm() == 0.0)
    throw std::invalid_argument("HomogeneousPoint: coordinates must be nonzero");
}

Eigen::MatrixXcd quotient_horizontal_curvature(const CurvatureTensor& curv,
                                               const HomogeneousPoint& point,
                                               ProjectivizationVariant variant) {
  const int n = curv.base_dim(), r = curv.rank();
  if (point.w.size() != r)
    throw std::invalid_argument("quotient_horizontal_curvature: point dimension mismatch");
  const double norm2 = point.w.squaredNorm();
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Complex sum(0, 0);
      for (int a = 0; a < r; ++a)
        for (int b = 0; b < r; ++b) {
          if (variant == ProjectivizationVariant::dual_projectivization)
            sum += curv.at(i, j, a, b) * point.w(b) * std::conj(point.w(a));
          else
            sum -= curv.at(i, j, a, b) * point.w(a) * std::conj(point.w(b));
        }
      out(i, j) = sum / norm2;
    }
  return out;
}

}  // namespace curvpos
