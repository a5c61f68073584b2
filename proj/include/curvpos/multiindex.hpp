#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace curvpos {

/// Weakly increasing multi-index (a_1 <= ... <= a_k) with entries in 1..rank.
/// Indexes the monomial basis W_{a_1}*...*W_{a_k} of the degree-k symmetric
/// power of a rank-r fiber. Entries are 1-based everywhere in the public API.
struct SymIndex {
  std::vector<int> entries;

  SymIndex() = default;
  explicit SymIndex(std::vector<int> e) : entries(std::move(e)) {}

  int degree() const { return static_cast<int>(entries.size()); }

  /// Throws std::invalid_argument unless weakly increasing with entries in 1..rank.
  static SymIndex validated(std::vector<int> e, int rank);

  /// The (k-1)-index obtained by removing the entry at position s (0-based).
  SymIndex drop(int s) const;

  bool operator==(const SymIndex& other) const { return entries == other.entries; }
  bool operator<(const SymIndex& other) const { return entries < other.entries; }
};

/// Number of weakly increasing k-tuples over 1..r, i.e. binomial(r+k-1, k).
std::uint64_t sym_basis_size(int rank, int degree);

/// All SymIndex of the given degree over 1..rank, in lexicographic order.
/// Rejects rank < 1 or degree < 0.
std::vector<SymIndex> enumerate_sym_indices(int rank, int degree);

/// Permanent of the k x k matrix M[s][t] = [a[s] == b[t]], computed by the
/// direct permutation sum. Symmetric in (a, b); zero unless a and b agree as
/// multisets; equals the product of multiplicity factorials of a when they do.
/// Accepts arbitrary (not necessarily sorted) index tuples of equal length.
/// Throws on length mismatch or length > 20.
std::uint64_t generalized_delta(std::span<const int> a, std::span<const int> b);

std::uint64_t generalized_delta(const SymIndex& a, const SymIndex& b);

}  // namespace curvpos
