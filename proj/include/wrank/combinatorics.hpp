#pragma once

// Subsets of a ground set {0, ..., m-1}, their colex ranks, and exact
// binomial coefficients. Every vector in the library is indexed by colex
// rank of the subset naming its coordinate.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace wrank {

using BigInt = boost::multiprecision::cpp_int;

/// Largest n served from the memoized Pascal table.
inline constexpr int kBinomialCacheCap = 128;

/// C(n, k) with C(n, k) = 0 for k < 0 or k > n. Requires n >= 0.
BigInt binomial(std::int64_t n, std::int64_t k);

/// C(n, k) as a machine word; throws std::overflow_error if it does not fit.
std::uint64_t binomial_u64(std::int64_t n, std::int64_t k);

/// A k-subset of {0, ..., m-1} stored as strictly increasing elements.
class KSubset {
public:
  KSubset() = default;
  /// Validates; throws ParameterError on unsorted, duplicate or out-of-range elements.
  KSubset(std::vector<int> elements, int m);

  /// From 1-based elements in any order (the CLI convention).
  static KSubset from_one_based(std::span<const int> elements, int m);

  [[nodiscard]] int m() const { return m_; }
  [[nodiscard]] int size() const { return static_cast<int>(elements_.size()); }
  [[nodiscard]] const std::vector<int>& elements() const { return elements_; }
  [[nodiscard]] bool contains(int x) const;

  /// X \ S.
  [[nodiscard]] KSubset complement() const;

  /// "{1,3,4}" in 1-based notation.
  [[nodiscard]] std::string to_string() const;

  friend bool operator==(const KSubset&, const KSubset&) = default;

private:
  std::vector<int> elements_;
  int m_ = 0;
};

/// Colex rank: sum over positions j of C(s_j, j+1).
std::uint64_t subset_rank(const KSubset& s);

/// Rank of a sorted element list without building a KSubset.
std::uint64_t subset_rank(std::span<const int> sorted_elements);

/// Inverse of subset_rank; throws std::out_of_range unless r < C(m, k).
KSubset subset_unrank(std::uint64_t r, int k, int m);

/// Visits the k-subsets of {0..m-1} in colex order. The callback sees the
/// sorted element buffer; return false to stop early.
void for_each_subset(int k, int m, const std::function<bool(std::span<const int>)>& visit);

/// Visits the size-r subsets of an arbitrary sorted pool, in colex order of
/// positions within the pool.
void for_each_subset_of(std::span<const int> pool, int r,
                        const std::function<void(std::span<const int>)>& visit);

}  // namespace wrank
