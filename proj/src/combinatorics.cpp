#include "wrank/combinatorics.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "wrank/errors.hpp"

namespace wrank {
namespace {

const std::vector<std::vector<BigInt>>& pascal_table() {
  static const auto table = [] {
    std::vector<std::vector<BigInt>> rows(kBinomialCacheCap + 1);
    for (int n = 0; n <= kBinomialCacheCap; ++n) {
      rows[n].resize(n + 1);
      rows[n][0] = rows[n][n] = 1;
      for (int k = 1; k < n; ++k) rows[n][k] = rows[n - 1][k - 1] + rows[n - 1][k];
    }
    return rows;
  }();
  return table;
}

// Machine-word Pascal triangle; C(62, k) is the last full row below 2^63.
constexpr int kWordCap = 62;

const std::array<std::array<std::uint64_t, kWordCap + 1>, kWordCap + 1>& word_table() {
  static const auto table = [] {
    std::array<std::array<std::uint64_t, kWordCap + 1>, kWordCap + 1> t{};
    for (int n = 0; n <= kWordCap; ++n) {
      t[n][0] = t[n][n] = 1;
      for (int k = 1; k < n; ++k) t[n][k] = t[n - 1][k - 1] + t[n - 1][k];
    }
    return t;
  }();
  return table;
}

}  // namespace

BigInt binomial(std::int64_t n, std::int64_t k) {
  if (n < 0) throw ParameterError("binomial: n must be nonnegative");
  if (k < 0 || k > n) return 0;
  if (n <= kBinomialCacheCap) return pascal_table()[n][k];
  k = std::min(k, n - k);
  BigInt r = 1;
  for (std::int64_t t = 1; t <= k; ++t) {
    r *= n - k + t;
    r /= t;
  }
  return r;
}

std::uint64_t binomial_u64(std::int64_t n, std::int64_t k) {
  if (n < 0) throw ParameterError("binomial: n must be nonnegative");
  if (k < 0 || k > n) return 0;
  if (n <= kWordCap) return word_table()[n][k];
  const BigInt b = binomial(n, k);
  if (b > std::numeric_limits<std::uint64_t>::max()) throw std::overflow_error("binomial does not fit 64 bits");
  return static_cast<std::uint64_t>(b);
}

KSubset::KSubset(std::vector<int> elements, int m) : elements_(std::move(elements)), m_(m) {
  if (m < 0) throw ParameterError("ground set size must be nonnegative");
  for (std::size_t j = 0; j < elements_.size(); ++j) {
    if (elements_[j] < 0 || elements_[j] >= m) throw ParameterError("subset element outside [0, m)");
    if (j > 0 && elements_[j - 1] >= elements_[j]) throw ParameterError("subset elements must be strictly increasing");
  }
}

KSubset KSubset::from_one_based(std::span<const int> elements, int m) {
  std::vector<int> zero_based;
  zero_based.reserve(elements.size());
  for (int x : elements) zero_based.push_back(x - 1);
  std::sort(zero_based.begin(), zero_based.end());
  return KSubset(std::move(zero_based), m);
}

bool KSubset::contains(int x) const { return std::binary_search(elements_.begin(), elements_.end(), x); }

KSubset KSubset::complement() const {
  std::vector<int> rest;
  rest.reserve(m_ - elements_.size());
  std::size_t pos = 0;
  for (int x = 0; x < m_; ++x) {
    if (pos < elements_.size() && elements_[pos] == x) {
      ++pos;
    } else {
      rest.push_back(x);
    }
  }
  return KSubset(std::move(rest), m_);
}

std::string KSubset::to_string() const {
  std::ostringstream out;
  out << '{';
  for (std::size_t j = 0; j < elements_.size(); ++j) {
    if (j) out << ',';
    out << elements_[j] + 1;
  }
  out << '}';
  return out.str();
}

std::uint64_t subset_rank(std::span<const int> sorted_elements) {
  std::uint64_t r = 0;
  for (std::size_t j = 0; j < sorted_elements.size(); ++j) {
    r += binomial_u64(sorted_elements[j], static_cast<std::int64_t>(j) + 1);
  }
  return r;
}

std::uint64_t subset_rank(const KSubset& s) { return subset_rank(std::span<const int>(s.elements())); }

KSubset subset_unrank(std::uint64_t r, int k, int m) {
  if (k < 0 || m < 0 || k > m || r >= binomial_u64(m, k)) {
    throw std::out_of_range("subset_unrank: rank " + std::to_string(r) + " invalid for C(" +
                            std::to_string(m) + "," + std::to_string(k) + ")");
  }
  // Greedy: the largest element is the largest c with C(c, k) <= r.
  std::vector<int> elements(k);
  int upper = m;
  for (int pos = k; pos >= 1; --pos) {
    int c = upper - 1;
    while (binomial_u64(c, pos) > r) --c;
    elements[pos - 1] = c;
    r -= binomial_u64(c, pos);
    upper = c;
  }
  return KSubset(std::move(elements), m);
}

void for_each_subset(int k, int m, const std::function<bool(std::span<const int>)>& visit) {
  if (k < 0 || k > m) return;
  std::vector<int> s(k);
  for (int j = 0; j < k; ++j) s[j] = j;
  while (true) {
    if (!visit(s)) return;
    // Colex successor: bump the first element that can move up.
    int j = 0;
    while (j < k && ((j + 1 < k) ? s[j] + 1 == s[j + 1] : s[j] + 1 == m)) ++j;
    if (j == k) return;
    ++s[j];
    for (int t = 0; t < j; ++t) s[t] = t;
  }
}

void for_each_subset_of(std::span<const int> pool, int r,
                        const std::function<void(std::span<const int>)>& visit) {
  const int size = static_cast<int>(pool.size());
  std::vector<int> picked(std::max(r, 0));
  for_each_subset(r, size, [&](std::span<const int> positions) {
    for (int j = 0; j < r; ++j) picked[j] = pool[positions[j]];
    visit(picked);
    return true;
  });
}

}  // namespace wrank
