#pragma once

// Streaming rank computation. Columns are pushed one at a time into an
// incrementally maintained echelon basis, so memory stays at
// O(length x rank) regardless of how many columns a matrix has.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "wrank/combinatorics.hpp"
#include "wrank/field.hpp"

namespace wrank {

/// Reduced row-echelon basis of a subspace of GF(p)^length.
///
/// Every row has leading coefficient 1 in its own pivot column and is zero
/// in every other row's pivot column. GF(2) rows are bit-packed and reduced
/// with word XORs; other primes use 32-bit residues.
class EchelonBasis {
public:
  /// `field` must be a prime field; throws ParameterError otherwise.
  EchelonBasis(std::size_t length, FieldSpec field);

  [[nodiscard]] std::size_t length() const { return length_; }
  [[nodiscard]] FieldSpec field() const { return field_; }
  [[nodiscard]] std::size_t rank() const { return pivots_.size(); }
  /// Pivot columns in increasing order.
  [[nodiscard]] std::vector<std::size_t> pivot_columns() const;

  /// Adds v to the span. Returns true iff v was already in the span
  /// ("absorbed"). Throws StructuralError on a length or field mismatch;
  /// integer vectors are reduced into the basis field first.
  bool insert(const ModuleVector& v);
  bool insert(std::span<const std::int64_t> coeffs);

  /// Inserts a batch: candidates are first reduced against a frozen snapshot
  /// of the basis on up to `threads` workers, survivors are then inserted
  /// serially. Returns the number of new rows.
  std::size_t insert_batch(std::span<const ModuleVector> batch, unsigned threads);

  [[nodiscard]] bool contains(std::span<const std::int64_t> coeffs) const;

  /// Basis rows as residue vectors, ordered by pivot column.
  [[nodiscard]] std::vector<std::vector<std::int64_t>> rows() const;

private:
  using Words = std::vector<std::uint64_t>;
  using Residues = std::vector<std::uint32_t>;

  [[nodiscard]] bool binary() const { return field_.characteristic() == 2; }
  [[nodiscard]] Words pack(std::span<const std::int64_t> coeffs) const;
  [[nodiscard]] Residues to_residues(std::span<const std::int64_t> coeffs) const;
  void reduce(Words& w) const;
  void reduce(Residues& r) const;
  bool insert_reduced(Words w);
  bool insert_reduced(Residues r);
  void check(const ModuleVector& v) const;

  std::size_t length_;
  FieldSpec field_;
  std::vector<std::size_t> pivots_;
  std::vector<Words> bit_rows_;
  std::vector<Residues> rows_;
};

/// Exact echelon basis over the rationals, kept as primitive integer rows
/// (fraction-free elimination with content removal).
class IntegerEchelon {
public:
  explicit IntegerEchelon(std::size_t length);

  [[nodiscard]] std::size_t length() const { return length_; }
  [[nodiscard]] std::size_t rank() const { return rows_.size(); }

  bool insert(const ModuleVector& v);
  bool insert(std::span<const std::int64_t> coeffs);
  bool insert(std::vector<BigInt> row);

  [[nodiscard]] const std::vector<std::vector<BigInt>>& rows() const { return rows_; }

private:
  std::size_t length_;
  std::vector<std::vector<BigInt>> rows_;  // sorted by pivot
  std::vector<std::size_t> pivots_;
};

/// dim(A + B). Throws StructuralError on length or field mismatch.
std::size_t sum_dim(const EchelonBasis& a, const EchelonBasis& b);
std::size_t sum_dim(const IntegerEchelon& a, const IntegerEchelon& b);
/// dim(A ∩ B) = dim A + dim B - dim(A + B).
std::size_t intersect_dim(const EchelonBasis& a, const EchelonBasis& b);
std::size_t intersect_dim(const IntegerEchelon& a, const IntegerEchelon& b);

/// Called once per column; return false to stop the stream.
using ColumnVisitor = std::function<bool(const ModuleVector&)>;
/// Produces a column sequence by calling the visitor. Must be replayable.
using ColumnSource = std::function<void(const ColumnVisitor&)>;

ColumnSource columns_of(std::span<const ModuleVector> columns);

struct StreamingOptions {
  /// Stop as soon as the rank reaches this value.
  std::optional<std::size_t> early_stop;
  /// Workers used to pre-reduce candidate batches.
  unsigned threads = 1;
  std::size_t batch_size = 256;
};

struct StreamingRank {
  std::size_t rank = 0;
  std::size_t columns_seen = 0;
  bool stopped_early = false;
};

/// Rank of the span of the streamed columns over GF(p). An empty stream has
/// rank 0. Integer columns are reduced mod p on the fly.
StreamingRank rank_streaming(const ColumnSource& columns, FieldSpec field, const StreamingOptions& options = {});
StreamingRank rank_streaming(std::span<const ModuleVector> columns, FieldSpec field,
                             const StreamingOptions& options = {});

inline constexpr std::uint64_t kDefaultSeed = 20240521;

struct RationalRankOptions {
  std::uint64_t seed = kDefaultSeed;
  /// Fraction-free confirmation runs when both dimensions are at most this.
  std::size_t confirm_cap = 300;
  unsigned threads = 1;
};

struct RationalRank {
  std::size_t rank = 0;
  std::uint32_t probe_prime = 0;
  bool confirmed = false;
};

/// A random prime in [2^30, 2^31) drawn from the seed.
std::uint32_t random_probe_prime(std::uint64_t seed);

/// Rank over Q of integer columns: rank modulo a random 31-bit prime,
/// confirmed by exact fraction-free elimination at small scale. Throws
/// InternalError if the two disagree.
RationalRank rank_rational(const ColumnSource& columns, const RationalRankOptions& options = {});
RationalRank rank_rational(std::span<const ModuleVector> columns, const RationalRankOptions& options = {});

}  // namespace wrank
