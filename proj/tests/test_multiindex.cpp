#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "curvpos/multiindex.hpp"

using curvpos::SymIndex;
using curvpos::enumerate_sym_indices;
using curvpos::generalized_delta;
using curvpos::sym_basis_size;

namespace {

// Independent permanent oracle: Laplace-style expansion along the first row.
std::uint64_t permanent_recursive(const std::vector<int>& a, std::vector<int> b) {
  if (a.empty()) return 1;
  std::uint64_t total = 0;
  for (std::size_t t = 0; t < b.size(); ++t) {
    if (a[0] != b[t]) continue;
    std::vector<int> rest = b;
    rest.erase(rest.begin() + static_cast<long>(t));
    total += permanent_recursive(std::vector<int>(a.begin() + 1, a.end()), std::move(rest));
  }
  return total;
}

std::vector<std::vector<int>> all_tuples(int rank, int length) {
  std::vector<std::vector<int>> out{{}};
  for (int step = 0; step < length; ++step) {
    std::vector<std::vector<int>> next;
    for (const auto& prefix : out)
      for (int e = 1; e <= rank; ++e) {
        auto extended = prefix;
        extended.push_back(e);
        next.push_back(std::move(extended));
      }
    out = std::move(next);
  }
  return out;
}

}  // namespace

TEST_CASE("enumeration matches the stars-and-bars count and brute force") {
  CHECK(enumerate_sym_indices(2, 0).size() == 1);
  CHECK(enumerate_sym_indices(2, 0)[0].degree() == 0);

  const auto r2k2 = enumerate_sym_indices(2, 2);
  REQUIRE(r2k2.size() == 3);
  CHECK(r2k2[0].entries == std::vector<int>{1, 1});
  CHECK(r2k2[1].entries == std::vector<int>{1, 2});
  CHECK(r2k2[2].entries == std::vector<int>{2, 2});

  // brute force: sort-dedupe every 3-tuple over 1..3
  std::set<std::vector<int>> expected;
  for (auto tuple : all_tuples(3, 3)) {
    std::sort(tuple.begin(), tuple.end());
    expected.insert(tuple);
  }
  const auto r3k3 = enumerate_sym_indices(3, 3);
  CHECK(r3k3.size() == 10);
  CHECK(r3k3.size() == expected.size());
  CHECK(sym_basis_size(3, 3) == 10);

  for (int r = 1; r <= 4; ++r)
    for (int k = 0; k <= 4; ++k) {
      const auto basis = enumerate_sym_indices(r, k);
      CHECK(basis.size() == sym_basis_size(r, k));
      CHECK(std::is_sorted(basis.begin(), basis.end()));
      CHECK(std::adjacent_find(basis.begin(), basis.end()) == basis.end());
    }

  CHECK_THROWS_AS(enumerate_sym_indices(0, 2), std::invalid_argument);
}

TEST_CASE("SymIndex validation") {
  CHECK_THROWS_AS(SymIndex::validated({2, 1}, 3), std::invalid_argument);
  CHECK_THROWS_AS(SymIndex::validated({0, 1}, 3), std::invalid_argument);
  CHECK_THROWS_AS(SymIndex::validated({1, 4}, 3), std::invalid_argument);
  CHECK(SymIndex::validated({1, 2, 2}, 3).entries == std::vector<int>{1, 2, 2});
}

TEST_CASE("generalized delta on the worked pairs") {
  CHECK(generalized_delta(SymIndex({1, 2}), SymIndex({1, 2})) == 1);
  CHECK(generalized_delta(SymIndex({1, 1}), SymIndex({1, 1})) == 2);
  CHECK(generalized_delta(SymIndex({1, 1, 2}), SymIndex({1, 2, 2})) == 0);
  CHECK(generalized_delta(SymIndex({1, 1, 2}), SymIndex({1, 1, 2})) == 2);
  CHECK(generalized_delta(SymIndex{}, SymIndex{}) == 1);
  CHECK_THROWS_AS(generalized_delta(SymIndex({1}), SymIndex({1, 1})), std::invalid_argument);
}

TEST_CASE("generalized delta symmetry and multiset support, exhaustive r<=3 k<=4") {
  for (int r = 1; r <= 3; ++r)
    for (int k = 0; k <= 4; ++k) {
      const auto basis = enumerate_sym_indices(r, k);
      for (const auto& a : basis)
        for (const auto& b : basis) {
          const auto ab = generalized_delta(a, b);
          CHECK(ab == generalized_delta(b, a));
          CHECK((ab > 0) == (a.entries == b.entries));
        }
    }
}

TEST_CASE("diagonal value is the product of multiplicity factorials") {
  for (int r = 1; r <= 3; ++r)
    for (int k = 0; k <= 4; ++k)
      for (const auto& a : enumerate_sym_indices(r, k)) {
        std::map<int, std::uint64_t> multiplicity;
        for (int e : a.entries) ++multiplicity[e];
        std::uint64_t expected = 1;
        for (const auto& [entry, count] : multiplicity) {
          (void)entry;
          for (std::uint64_t t = 2; t <= count; ++t) expected *= t;
        }
        CHECK(generalized_delta(a, a) == expected);
      }
}

TEST_CASE("row sums over all tuples equal k!") {
  // sum_B delta(A, B) over unsorted tuples B counts the distinct orderings of
  // A weighted by the diagonal value, which is k! for every A; the classical
  // statement is for A with k distinct entries.
  for (int r = 2; r <= 4; ++r)
    for (int k = 0; k <= 4; ++k) {
      std::uint64_t k_factorial = 1;
      for (int t = 2; t <= k; ++t) k_factorial *= static_cast<std::uint64_t>(t);
      for (const auto& a : enumerate_sym_indices(r, k)) {
        std::uint64_t row_sum = 0;
        for (const auto& b : all_tuples(r, k))
          row_sum += generalized_delta(std::span<const int>(a.entries), std::span<const int>(b));
        CHECK(row_sum == k_factorial);
      }
    }
}

TEST_CASE("permutation-sum permanent matches the recursive oracle up to k = 6") {
  for (int r = 2; r <= 3; ++r)
    for (int k = 4; k <= 6; ++k)
      for (const auto& a : enumerate_sym_indices(r, k)) {
        for (const auto& b : enumerate_sym_indices(r, k)) {
          CHECK(generalized_delta(a, b) == permanent_recursive(a.entries, b.entries));
        }
      }
  // also on unsorted tuples
  const std::vector<int> a{2, 1, 2, 3}, b{1, 2, 3, 2};
  CHECK(generalized_delta(std::span<const int>(a), std::span<const int>(b)) ==
        permanent_recursive(a, b));
}
