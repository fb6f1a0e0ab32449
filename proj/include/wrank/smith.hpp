#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "wrank/combinatorics.hpp"

namespace wrank {

/// Dense row-major integer matrix.
class IntMatrix {
public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  [[nodiscard]] std::size_t rows() const { return rows_; }
  [[nodiscard]] std::size_t cols() const { return cols_; }
  BigInt& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const BigInt& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<BigInt> data_;
};

inline constexpr std::size_t kDefaultSnfCap = 500;

struct SNFResult {
  /// min(rows, cols) entries: d_1 | d_2 | ... | d_r, then zeros.
  std::vector<BigInt> diagonal;
  /// Rank over the rationals (number of nonzero entries).
  std::size_t rank = 0;

  /// Number of diagonal entries not divisible by p, i.e. the p-rank.
  [[nodiscard]] std::size_t p_rank(std::uint64_t p) const;
};

/// Smith normal form by exact pivoting on the smallest-magnitude entry.
/// Throws SizeCapError if either dimension exceeds `cap`.
SNFResult smith_normal_form(IntMatrix matrix, std::size_t cap = kDefaultSnfCap);

/// Normalizes an arbitrary diagonal (signs, order, divisibility) into the
/// Smith form of diag(entries).
std::vector<BigInt> smith_form_of_diagonal(std::vector<BigInt> entries);

}  // namespace wrank
