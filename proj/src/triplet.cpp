#include "wrank/triplet.hpp"

#include <string>

#include "wrank/errors.hpp"

namespace wrank {

void write_triplets(std::ostream& out, const TripletMatrix& matrix) {
  out << matrix.rows << ' ' << matrix.cols << ' ' << matrix.modulus << '\n';
  for (const auto& e : matrix.entries) {
    if (e.value == 0) continue;
    out << e.row + 1 << ' ' << e.col + 1 << ' ' << e.value << '\n';
  }
  out << "0 0 0\n";
}

TripletMatrix read_triplets(std::istream& in) {
  TripletMatrix m;
  if (!(in >> m.rows >> m.cols >> m.modulus)) throw StructuralError("triplet header must be 'rows cols M'");
  while (true) {
    std::size_t r = 0, c = 0;
    std::int64_t v = 0;
    if (!(in >> r >> c >> v)) throw StructuralError("triplet stream ended before the '0 0 0' terminator");
    if (r == 0 && c == 0 && v == 0) break;
    if (r == 0 || c == 0 || r > m.rows || c > m.cols) {
      throw StructuralError("triplet index (" + std::to_string(r) + "," + std::to_string(c) + ") out of range");
    }
    m.entries.push_back({r - 1, c - 1, v});
  }
  return m;
}

IntMatrix to_dense(const TripletMatrix& matrix) {
  IntMatrix dense(matrix.rows, matrix.cols);
  for (const auto& e : matrix.entries) {
    dense(e.row, e.col) += e.value;
    if (matrix.modulus) dense(e.row, e.col) %= matrix.modulus;
  }
  return dense;
}

}  // namespace wrank
