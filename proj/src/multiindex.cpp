#include "curvpos/multiindex.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace curvpos {

SymIndex SymIndex::validated(std::vector<int> e, int rank) {
  if (rank < 1) throw std::invalid_argument("SymIndex: rank must be >= 1");
  for (std::size_t t = 0; t < e.size(); ++t) {
    if (e[t] < 1 || e[t] > rank)
      throw std::invalid_argument("SymIndex: entry " + std::to_string(e[t]) +
                                  " out of range 1.." + std::to_string(rank));
    if (t > 0 && e[t - 1] > e[t])
      throw std::invalid_argument("SymIndex: entries must be weakly increasing");
  }
  return SymIndex(std::move(e));
}

SymIndex SymIndex::drop(int s) const {
  if (s < 0 || s >= degree()) throw std::out_of_range("SymIndex::drop: position out of range");
  std::vector<int> e;
  e.reserve(entries.size() - 1);
  for (int t = 0; t < degree(); ++t)
    if (t != s) e.push_back(entries[t]);
  return SymIndex(std::move(e));
}

std::uint64_t sym_basis_size(int rank, int degree) {
  if (rank < 1) throw std::invalid_argument("sym_basis_size: rank must be >= 1");
  if (degree < 0) throw std::invalid_argument("sym_basis_size: degree must be >= 0");
  // binomial(rank + degree - 1, degree), exact in 64 bits for all sizes used here
  std::uint64_t result = 1;
  for (int t = 1; t <= degree; ++t) {
    result = result * static_cast<std::uint64_t>(rank - 1 + t) / static_cast<std::uint64_t>(t);
  }
  return result;
}

std::vector<SymIndex> enumerate_sym_indices(int rank, int degree) {
  if (rank < 1) throw std::invalid_argument("enumerate_sym_indices: rank must be >= 1");
  if (degree < 0) throw std::invalid_argument("enumerate_sym_indices: degree must be >= 0");
  std::vector<SymIndex> out;
  out.reserve(sym_basis_size(rank, degree));
  std::vector<int> current(degree, 1);
  while (true) {
    out.emplace_back(current);
    // advance to the next weakly increasing tuple in lex order
    int pos = degree - 1;
    while (pos >= 0 && current[pos] == rank) --pos;
    if (pos < 0) break;
    const int next = current[pos] + 1;
    for (int t = pos; t < degree; ++t) current[t] = next;
  }
  return out;
}

std::uint64_t generalized_delta(std::span<const int> a, std::span<const int> b) {
  if (a.size() != b.size())
    throw std::invalid_argument("generalized_delta: index length mismatch");
  const int k = static_cast<int>(a.size());
  if (k > 20) throw std::invalid_argument("generalized_delta: degree > 20 not supported");
  if (k == 0) return 1;

  // Quick multiset screen; the permanent vanishes unless a and b agree as multisets.
  std::vector<int> sa(a.begin(), a.end()), sb(b.begin(), b.end());
  std::sort(sa.begin(), sa.end());
  std::sort(sb.begin(), sb.end());
  if (sa != sb) return 0;

  std::vector<int> sigma(k);
  std::iota(sigma.begin(), sigma.end(), 0);
  std::uint64_t total = 0;
  do {
    bool hit = true;
    for (int j = 0; j < k; ++j) {
      if (a[j] != b[sigma[j]]) {
        hit = false;
        break;
      }
    }
    if (hit) ++total;
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return total;
}

std::uint64_t generalized_delta(const SymIndex& a, const SymIndex& b) {
  return generalized_delta(std::span<const int>(a.entries), std::span<const int>(b.entries));
}

}  // namespace curvpos
