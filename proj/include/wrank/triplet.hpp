#pragma once

// Sparse triplet text format:
//
//   rows cols M        M = modulus, or 0 for integer entries
//   r c v              one line per nonzero entry, 1-based indices
//   ...
//   0 0 0              terminator

#include <cstddef>
#include <cstdint>
#include <istream>
#include <ostream>
#include <vector>

#include "wrank/smith.hpp"

namespace wrank {

struct Triplet {
  std::size_t row = 0;  // 0-based in memory
  std::size_t col = 0;
  std::int64_t value = 0;

  friend bool operator==(const Triplet&, const Triplet&) = default;
};

struct TripletMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::uint32_t modulus = 0;
  std::vector<Triplet> entries;

  friend bool operator==(const TripletMatrix&, const TripletMatrix&) = default;
};

void write_triplets(std::ostream& out, const TripletMatrix& matrix);

/// Throws StructuralError on a malformed stream, an out-of-range index or a
/// missing terminator.
TripletMatrix read_triplets(std::istream& in);

IntMatrix to_dense(const TripletMatrix& matrix);

}  // namespace wrank
