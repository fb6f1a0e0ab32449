#pragma once

// Two-row tableaux, j-polytabloids and the Specht filtration of the
// 2-subset module M^(m-2,2), with exact dimension bookkeeping.

#include <cstdint>
#include <string>
#include <vector>

#include "wrank/combinatorics.hpp"
#include "wrank/echelon.hpp"
#include "wrank/field.hpp"
#include "wrank/incidence.hpp"

namespace wrank {

/// A tableau of shape (m-r, r). Column c pairs first_row[c] (top) with
/// second_row[c] (bottom) for c < r; the tabloid is the set of second-row
/// entries.
class TwoRowTableau {
public:
  /// Rows given explicitly; together they must list {0..m-1} once, with
  /// second_row no longer than first_row.
  TwoRowTableau(int m, std::vector<int> first_row, std::vector<int> second_row);

  /// First row is the complement of `second_row` in increasing order.
  static TwoRowTableau canonical(int m, std::vector<int> second_row);

  [[nodiscard]] int m() const { return m_; }
  [[nodiscard]] int second_length() const { return static_cast<int>(second_.size()); }
  [[nodiscard]] const std::vector<int>& first_row() const { return first_; }
  [[nodiscard]] const std::vector<int>& second_row() const { return second_; }
  [[nodiscard]] KSubset tabloid() const;

  /// Moves the last r-j entries of the second row to the end of the first
  /// row, giving a tableau of shape (m-j, j) with the same first j columns.
  [[nodiscard]] TwoRowTableau truncated(int j) const;

  /// "1 2 3 4 / 5 6", 1-based.
  [[nodiscard]] std::string to_string() const;

  friend bool operator==(const TwoRowTableau&, const TwoRowTableau&) = default;

private:
  int m_;
  std::vector<int> first_;
  std::vector<int> second_;
};

/// e_t^j: the signed sum over the 2^j ways of swapping entries within the
/// first j columns of t, each term the tabloid of the swapped tableau.
/// Throws ParameterError if j exceeds the second-row length.
ModuleVector polytabloid_vector(const TwoRowTableau& t, int j, FieldSpec field);

/// dim S^(m-j, j) = C(m, j) - C(m, j-1). Requires 0 <= 2j <= m.
BigInt specht_dim(int m, int j);

/// sum_l (-1)^(j-l) C(j,l) C(n-j, i-l) C(m-n-j, k-i-j+l).
/// Requires 0 <= i <= k <= n <= m/2 and 0 <= j <= k.
BigInt lemma_coefficient(int m, int n, int k, int i, int j);

struct LemmaCheck {
  bool match = false;
  BigInt coefficient;
  TwoRowTableau target;  // s
  ModuleVector image;    // psi_{k,j}(tau_{n,k}^i(e_t^j))
  ModuleVector expected; // coefficient * e_s
};

/// Pushes e_t^j through tau_{n,k}^i and psi_{k,j} and compares it, as an
/// exact vector, with lemma_coefficient(m,n,k,i,j) e_s where s is
/// t.truncated(j).
LemmaCheck verify_lemma_image(int m, int n, int k, int i, int j, const TwoRowTableau& t, FieldSpec field);

/// Composition multiplicity [S^(m-i_top, i_top) : D^(m-j, j)] for two-row
/// shapes with i_top <= 2 and m > 2 i_top. Anything else throws.
int james_multiplicity(int m, std::uint64_t p, int i_top, int j_factor);

/// Generators of S^{(m-r, j)(m-r, r)}: one j-polytabloid per choice of the
/// first j columns and the remaining second-row entries.
ColumnSource polytabloid_family(int m, int r, int j, FieldSpec field);

/// Dimension of the span of the j-polytabloids of shape (m-r, r). With
/// `early_stop` in characteristic 0 the stream stops at the known dimension.
std::size_t polytabloid_span_dim(int m, int r, int j, FieldSpec field, bool early_stop = false);

inline constexpr int kDefaultLayerCap = 12;

struct LayerDims {
  std::size_t l0 = 0;
  std::size_t l1 = 0;
  std::size_t l2 = 0;
  std::size_t rank = 0;  // dim im rho_{n,2}

  friend bool operator==(const LayerDims&, const LayerDims&) = default;
};

/// Dimensions of L^j = P^j / P^{j+1}, P^j = im rho_{n,2} ∩ S^{(m-2,j)(m-2,2)}.
/// Requires a normalized (m, 2, n, 1) spec with 1 <= n <= m/2; throws
/// SizeCapError when m > max_m.
LayerDims layer_dims(const IncidenceSpec& spec, FieldSpec field, int max_m = kDefaultLayerCap);

}  // namespace wrank
