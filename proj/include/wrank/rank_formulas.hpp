#pragma once

// Closed-form rank predictions for W_{2,n}^1(m), the lower bound for general
// W_{k,n}^i(m), and the report types that tie predictions to computation.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "wrank/combinatorics.hpp"
#include "wrank/echelon.hpp"
#include "wrank/field.hpp"
#include "wrank/incidence.hpp"
#include "wrank/smith.hpp"
#include "wrank/specht.hpp"

namespace wrank {

/// Which row of the rank table applies, in table order.
enum class RankCase {
  kChar0Generic,       // 2n < m
  kChar0Balanced,      // 2n = m
  kChar2MOdd,
  kChar2MEvenNEven,
  kChar2MEvenNOdd,
  kOddPGeneric,        // p ∤ m-2n, p ∤ n(m-n)
  kOddPDividesNMN,     // p ∤ m-2n, p | n(m-n)
  kOddPDividesBothM,   // p | m-2n, p | m
  kOddPDividesMinus,   // p | m-2n, p ∤ m
};

std::string to_string(RankCase c);

/// Table row for (m, n, field). Requires 2 <= n <= m/2.
RankCase rank_case(int m, int n, FieldSpec field);

/// Rank of W_{2,n}^1(m) from the table. Requires 2 <= n <= m/2; an
/// unnormalized n is refused, not complemented.
std::uint64_t predicted_rank(int m, int n, FieldSpec field);

/// C(m,k) - C(m,k-1) when char = 0 or p ∤ C(k,i), else 0 (no claim).
/// Requires 0 <= i <= k <= n <= m/2.
BigInt rank_lower_bound(int m, int k, int n, int i, FieldSpec field);

enum class Verdict { kMatch, kMismatch, kNoPrediction };
std::string to_string(Verdict v);

struct RankReport {
  IncidenceSpec spec;             // as requested
  IncidenceSpec normalized;       // what was computed
  std::string normalization;      // rule applied
  FieldSpec field = FieldSpec::rational();
  std::uint64_t computed_rank = 0;
  std::optional<std::uint64_t> predicted_rank;
  std::optional<BigInt> lower_bound;
  std::optional<LayerDims> layers;
  Verdict verdict = Verdict::kNoPrediction;
  double elapsed_ms = 0;
  std::uint32_t probe_prime = 0;  // characteristic 0 only
};

struct RankOptions {
  std::uint64_t seed = kDefaultSeed;
  unsigned threads = 1;
  bool with_layers = false;
  int layer_cap = kDefaultLayerCap;
};

/// Normalizes, computes the rank by streaming (rational rank in
/// characteristic 0), and attaches the prediction and bound where they apply.
RankReport compute_rank_report(const IncidenceSpec& spec, FieldSpec field, const RankOptions& options = {});

/// Rank of W_{k,n}^i(m) over the field, with the parameters as given.
std::uint64_t incidence_rank(const IncidenceSpec& spec, FieldSpec field, const RankOptions& options = {});

/// Dense integer matrix of W_{k,n}^i(m).
IntMatrix incidence_matrix(const IncidenceSpec& spec);

struct PrimeComparison {
  std::uint64_t p = 0;
  std::size_t candidate_units = 0;  // candidate entries not divisible by p
  std::size_t snf_p_rank = 0;
  std::size_t streaming_rank = 0;
  bool candidate_matches = false;   // candidate_units == streaming_rank
  bool snf_consistent = false;      // snf_p_rank == streaming_rank
};

struct DiagonalComparison {
  int m = 0;
  int n = 0;
  /// Candidate diagonal: lemma coefficient for j with multiplicity
  /// dim S^(m-j,j), j = 0, 1, 2 (signed, padded with zeros).
  std::vector<BigInt> candidate;
  std::vector<BigInt> snf;
  std::vector<PrimeComparison> primes;
  /// Sorted absolute values coincide entry for entry.
  bool multisets_equal = false;
  /// diag(candidate) is equivalent to the matrix over Z (same Smith form).
  bool equivalent = false;
};

/// Compares the coefficient-based candidate diagonal with the true Smith
/// form of W_{2,n}^1(m). Disagreement is reported, never thrown.
DiagonalComparison diagonal_form_compare(int m, int n, std::size_t snf_cap = kDefaultSnfCap);

}  // namespace wrank
