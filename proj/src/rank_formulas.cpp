#include "wrank/rank_formulas.hpp"

#include <algorithm>
#include <chrono>

#include "wrank/errors.hpp"

namespace wrank {
namespace {

bool divides(std::uint64_t p, std::int64_t x) { return x % static_cast<std::int64_t>(p) == 0; }

}  // namespace

std::string to_string(RankCase c) {
  switch (c) {
    case RankCase::kChar0Generic: return "char 0, 2n < m";
    case RankCase::kChar0Balanced: return "char 0, 2n = m";
    case RankCase::kChar2MOdd: return "char 2, m odd";
    case RankCase::kChar2MEvenNEven: return "char 2, m even, n even";
    case RankCase::kChar2MEvenNOdd: return "char 2, m even, n odd";
    case RankCase::kOddPGeneric: return "char p > 2, p !| m-2n, p !| n(m-n)";
    case RankCase::kOddPDividesNMN: return "char p > 2, p !| m-2n, p | n(m-n)";
    case RankCase::kOddPDividesBothM: return "char p > 2, p | m-2n, p | m";
    case RankCase::kOddPDividesMinus: return "char p > 2, p | m-2n, p !| m";
  }
  return "?";
}

RankCase rank_case(int m, int n, FieldSpec field) {
  if (n < 2 || 2 * n > m) {
    throw ParameterError("rank table needs 2 <= n <= m/2 (normalize first); got m=" + std::to_string(m) +
                         ", n=" + std::to_string(n));
  }
  const std::uint64_t p = field.characteristic();
  if (p == 0) return 2 * n < m ? RankCase::kChar0Generic : RankCase::kChar0Balanced;
  if (p == 2) {
    if (m % 2 == 1) return RankCase::kChar2MOdd;
    return n % 2 == 0 ? RankCase::kChar2MEvenNEven : RankCase::kChar2MEvenNOdd;
  }
  const std::int64_t mm = m;
  const std::int64_t nn = n;
  if (!divides(p, mm - 2 * nn)) {
    return divides(p, nn * (mm - nn)) ? RankCase::kOddPDividesNMN : RankCase::kOddPGeneric;
  }
  return divides(p, mm) ? RankCase::kOddPDividesBothM : RankCase::kOddPDividesMinus;
}

std::uint64_t predicted_rank(int m, int n, FieldSpec field) {
  const std::uint64_t mm = static_cast<std::uint64_t>(m);
  switch (rank_case(m, n, field)) {
    case RankCase::kChar0Generic:
    case RankCase::kOddPGeneric:
      return mm * (mm - 1) / 2;
    case RankCase::kChar0Balanced:
    case RankCase::kOddPDividesMinus:
      return (mm - 1) * (mm - 2) / 2;
    case RankCase::kChar2MOdd:
    case RankCase::kChar2MEvenNOdd:
      return mm - 1;
    case RankCase::kChar2MEvenNEven:
      return mm - 2;
    case RankCase::kOddPDividesNMN:
      return (mm + 1) * (mm - 2) / 2;
    case RankCase::kOddPDividesBothM:
      return mm * (mm - 3) / 2;
  }
  throw InternalError("unhandled rank case");
}

BigInt rank_lower_bound(int m, int k, int n, int i, FieldSpec field) {
  if (!(0 <= i && i <= k && k <= n && 2 * n <= m)) {
    throw ParameterError("rank_lower_bound needs 0 <= i <= k <= n <= m/2");
  }
  const std::uint64_t p = field.characteristic();
  if (p != 0 && binomial(k, i) % p == 0) return 0;
  return binomial(m, k) - binomial(m, k - 1);
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::kMatch: return "match";
    case Verdict::kMismatch: return "MISMATCH";
    case Verdict::kNoPrediction: return "no-prediction";
  }
  return "?";
}

std::uint64_t incidence_rank(const IncidenceSpec& spec, FieldSpec field, const RankOptions& options) {
  spec.validate();
  const LinearMap map = LinearMap::intersection(spec, field);
  if (field.is_rational()) {
    RationalRankOptions rational;
    rational.seed = options.seed;
    rational.threads = options.threads;
    return rank_rational(map.columns(), rational).rank;
  }
  StreamingOptions streaming;
  streaming.threads = options.threads;
  streaming.early_stop = std::min(spec.rows(), spec.cols());
  return rank_streaming(map.columns(), field, streaming).rank;
}

RankReport compute_rank_report(const IncidenceSpec& spec, FieldSpec field, const RankOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  const NormalizedSpec normalized = normalize_spec(spec);
  const IncidenceSpec& s = normalized.spec;

  RankReport report;
  report.spec = spec;
  report.normalized = s;
  report.normalization = normalized.rule;
  report.field = field;
  report.computed_rank = incidence_rank(s, field, options);
  if (field.is_rational()) report.probe_prime = random_probe_prime(options.seed);

  if (s.k == 2 && s.i == 1 && s.n >= 2 && 2 * s.n <= s.m) {
    report.predicted_rank = predicted_rank(s.m, s.n, field);
    report.verdict = report.computed_rank == *report.predicted_rank ? Verdict::kMatch : Verdict::kMismatch;
    if (options.with_layers && s.m <= options.layer_cap) report.layers = layer_dims(s, field, options.layer_cap);
  }
  // Both specs describe the same matrix up to column order, so either may
  // supply the bound.
  for (const IncidenceSpec* candidate : {&s, &spec}) {
    const auto& c = *candidate;
    if (c.i <= c.k && c.k <= c.n && 2 * c.n <= c.m) {
      const BigInt bound = rank_lower_bound(c.m, c.k, c.n, c.i, field);
      if (!report.lower_bound || bound > *report.lower_bound) report.lower_bound = bound;
    }
  }
  report.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return report;
}

IntMatrix incidence_matrix(const IncidenceSpec& spec) {
  spec.validate();
  IntMatrix out(spec.rows(), spec.cols());
  const LinearMap map = LinearMap::intersection(spec, FieldSpec::rational());
  std::size_t col = 0;
  map.columns()([&](const ModuleVector& v) {
    for (std::size_t row = 0; row < v.size(); ++row) out(row, col) = v[row];
    ++col;
    return true;
  });
  return out;
}

DiagonalComparison diagonal_form_compare(int m, int n, std::size_t snf_cap) {
  if (n < 2 || 2 * n > m) throw ParameterError("diagonal_form_compare needs 2 <= n <= m/2");
  const IncidenceSpec spec{m, 2, n, 1};
  DiagonalComparison out;
  out.m = m;
  out.n = n;
  for (int j = 0; j <= 2; ++j) {
    const BigInt coeff = lemma_coefficient(m, n, 2, 1, j);
    const auto mult = static_cast<std::size_t>(specht_dim(m, j));
    out.candidate.insert(out.candidate.end(), mult, coeff);
  }
  const std::size_t diag_len = std::min(spec.rows(), spec.cols());
  out.candidate.resize(std::max(out.candidate.size(), diag_len), 0);

  const SNFResult snf = smith_normal_form(incidence_matrix(spec), snf_cap);
  out.snf = snf.diagonal;

  std::vector<BigInt> cand_abs;
  for (const auto& x : out.candidate) cand_abs.push_back(abs(x));
  std::vector<BigInt> snf_sorted = out.snf;
  auto nonzero_first = [](const BigInt& a, const BigInt& b) {
    if ((a == 0) != (b == 0)) return a != 0;
    return a < b;
  };
  std::sort(cand_abs.begin(), cand_abs.end(), nonzero_first);
  std::sort(snf_sorted.begin(), snf_sorted.end(), nonzero_first);
  out.multisets_equal = cand_abs == snf_sorted;
  out.equivalent = smith_form_of_diagonal(out.candidate) == out.snf;

  for (int p = 2; p <= m; ++p) {
    if (!is_prime(static_cast<std::uint64_t>(p))) continue;
    PrimeComparison pc;
    pc.p = static_cast<std::uint64_t>(p);
    pc.candidate_units = static_cast<std::size_t>(
        std::count_if(out.candidate.begin(), out.candidate.end(), [p](const BigInt& d) { return d % p != 0; }));
    pc.snf_p_rank = snf.p_rank(pc.p);
    pc.streaming_rank = incidence_rank(spec, FieldSpec::prime(pc.p));
    pc.candidate_matches = pc.candidate_units == pc.streaming_rank;
    pc.snf_consistent = pc.snf_p_rank == pc.streaming_rank;
    out.primes.push_back(pc);
  }
  return out;
}

}  // namespace wrank
