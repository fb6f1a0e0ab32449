#include "wrank/smith.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "wrank/errors.hpp"

namespace wrank {
namespace {

void swap_rows(IntMatrix& a, std::size_t r1, std::size_t r2) {
  if (r1 == r2) return;
  for (std::size_t c = 0; c < a.cols(); ++c) std::swap(a(r1, c), a(r2, c));
}

void swap_cols(IntMatrix& a, std::size_t c1, std::size_t c2) {
  if (c1 == c2) return;
  for (std::size_t r = 0; r < a.rows(); ++r) std::swap(a(r, c1), a(r, c2));
}

}  // namespace

std::size_t SNFResult::p_rank(std::uint64_t p) const {
  return static_cast<std::size_t>(
      std::count_if(diagonal.begin(), diagonal.end(), [p](const BigInt& d) { return d % p != 0; }));
}

SNFResult smith_normal_form(IntMatrix a, std::size_t cap) {
  if (a.rows() > cap || a.cols() > cap) {
    throw SizeCapError("smith_normal_form: " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                       " exceeds cap " + std::to_string(cap));
  }
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  const std::size_t diag = std::min(rows, cols);
  SNFResult result;
  result.diagonal.assign(diag, 0);

  for (std::size_t t = 0; t < diag; ++t) {
    bool exhausted = false;
    while (true) {
      // Smallest nonzero magnitude in the trailing block becomes the pivot.
      std::size_t pr = rows, pc = cols;
      BigInt best = 0;
      for (std::size_t r = t; r < rows; ++r) {
        for (std::size_t c = t; c < cols; ++c) {
          const BigInt& x = a(r, c);
          if (x == 0) continue;
          const BigInt mag = abs(x);
          if (pr == rows || mag < best) {
            best = mag;
            pr = r;
            pc = c;
            if (best == 1) break;
          }
        }
        if (best == 1) break;
      }
      if (pr == rows) {
        exhausted = true;
        break;
      }
      swap_rows(a, t, pr);
      swap_cols(a, t, pc);
      const BigInt pivot = a(t, t);

      bool clean = true;
      for (std::size_t r = t + 1; r < rows; ++r) {
        if (a(r, t) == 0) continue;
        const BigInt q = a(r, t) / pivot;
        if (q != 0) {
          for (std::size_t c = t; c < cols; ++c) {
            if (a(t, c) != 0) a(r, c) -= q * a(t, c);
          }
        }
        if (a(r, t) != 0) clean = false;
      }
      for (std::size_t c = t + 1; c < cols; ++c) {
        if (a(t, c) == 0) continue;
        const BigInt q = a(t, c) / pivot;
        if (q != 0) {
          for (std::size_t r = t; r < rows; ++r) {
            if (a(r, t) != 0) a(r, c) -= q * a(r, t);
          }
        }
        if (a(t, c) != 0) clean = false;
      }
      if (!clean) continue;

      // Row and column are clear; enforce divisibility of the trailing block.
      std::size_t offender = rows;
      for (std::size_t r = t + 1; r < rows && offender == rows; ++r) {
        for (std::size_t c = t + 1; c < cols; ++c) {
          if (a(r, c) % pivot != 0) {
            offender = r;
            break;
          }
        }
      }
      if (offender == rows) break;
      for (std::size_t c = t; c < cols; ++c) a(t, c) += a(offender, c);
    }
    if (exhausted) break;
    result.diagonal[t] = abs(a(t, t));
    ++result.rank;
  }
  return result;
}

std::vector<BigInt> smith_form_of_diagonal(std::vector<BigInt> d) {
  for (auto& x : d) x = abs(x);
  for (std::size_t i = 0; i < d.size(); ++i) {
    for (std::size_t j = i + 1; j < d.size(); ++j) {
      if (d[i] == 0 && d[j] == 0) continue;
      const BigInt g = gcd(d[i], d[j]);
      const BigInt l = (d[i] == 0 || d[j] == 0) ? BigInt(0) : d[i] / g * d[j];
      d[i] = g;
      d[j] = l;
    }
  }
  return d;
}

}  // namespace wrank
