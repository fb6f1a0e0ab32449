#include "wrank/echelon.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <random>
#include <thread>

#include "wrank/errors.hpp"

namespace wrank {

// ---------------------------------------------------------------------------
// EchelonBasis

EchelonBasis::EchelonBasis(std::size_t length, FieldSpec field) : length_(length), field_(field) {
  if (field.is_rational()) throw ParameterError("EchelonBasis needs a prime field; use IntegerEchelon over Q");
}

std::vector<std::size_t> EchelonBasis::pivot_columns() const {
  auto sorted = pivots_;
  std::sort(sorted.begin(), sorted.end());
  return sorted;
}

EchelonBasis::Words EchelonBasis::pack(std::span<const std::int64_t> coeffs) const {
  Words w((length_ + 63) / 64, 0);
  for (std::size_t idx = 0; idx < coeffs.size(); ++idx) {
    if (coeffs[idx] & 1) w[idx / 64] |= std::uint64_t{1} << (idx % 64);
  }
  return w;
}

EchelonBasis::Residues EchelonBasis::to_residues(std::span<const std::int64_t> coeffs) const {
  Residues r(coeffs.size());
  for (std::size_t idx = 0; idx < coeffs.size(); ++idx) r[idx] = static_cast<std::uint32_t>(field_.reduce(coeffs[idx]));
  return r;
}

void EchelonBasis::reduce(Words& w) const {
  for (std::size_t row = 0; row < bit_rows_.size(); ++row) {
    const std::size_t c = pivots_[row];
    if ((w[c / 64] >> (c % 64)) & 1) {
      const Words& r = bit_rows_[row];
      for (std::size_t k = c / 64; k < w.size(); ++k) w[k] ^= r[k];
    }
  }
}

void EchelonBasis::reduce(Residues& v) const {
  const std::uint64_t p = field_.characteristic();
  for (std::size_t row = 0; row < rows_.size(); ++row) {
    const std::size_t c = pivots_[row];
    if (v[c] == 0) continue;
    const std::uint64_t factor = p - v[c];
    const Residues& r = rows_[row];
    for (std::size_t k = c; k < length_; ++k) {
      if (r[k]) v[k] = static_cast<std::uint32_t>((v[k] + factor * r[k]) % p);
    }
  }
}

bool EchelonBasis::insert_reduced(Words w) {
  std::size_t lead = length_;
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (w[k]) {
      lead = k * 64 + static_cast<std::size_t>(std::countr_zero(w[k]));
      break;
    }
  }
  if (lead == length_) return true;
  for (auto& r : bit_rows_) {
    if ((r[lead / 64] >> (lead % 64)) & 1) {
      for (std::size_t k = 0; k < r.size(); ++k) r[k] ^= w[k];
    }
  }
  bit_rows_.push_back(std::move(w));
  pivots_.push_back(lead);
  return false;
}

bool EchelonBasis::insert_reduced(Residues v) {
  const auto it = std::find_if(v.begin(), v.end(), [](std::uint32_t x) { return x != 0; });
  if (it == v.end()) return true;
  const std::size_t lead = static_cast<std::size_t>(it - v.begin());
  const std::uint64_t p = field_.characteristic();
  const std::uint64_t inv = static_cast<std::uint64_t>(field_.inverse(v[lead]));
  for (std::size_t k = lead; k < length_; ++k) v[k] = static_cast<std::uint32_t>(v[k] * inv % p);
  for (auto& r : rows_) {
    if (r[lead] == 0) continue;
    const std::uint64_t factor = p - r[lead];
    for (std::size_t k = lead; k < length_; ++k) {
      if (v[k]) r[k] = static_cast<std::uint32_t>((r[k] + factor * v[k]) % p);
    }
  }
  rows_.push_back(std::move(v));
  pivots_.push_back(lead);
  return false;
}

void EchelonBasis::check(const ModuleVector& v) const {
  if (v.size() != length_) throw StructuralError("vector length does not match the basis");
  if (!v.field().is_rational() && v.field() != field_) throw StructuralError("vector field does not match the basis");
}

bool EchelonBasis::insert(const ModuleVector& v) {
  check(v);
  return insert(std::span<const std::int64_t>(v.coeffs()));
}

bool EchelonBasis::insert(std::span<const std::int64_t> coeffs) {
  if (coeffs.size() != length_) throw StructuralError("vector length does not match the basis");
  if (binary()) {
    Words w = pack(coeffs);
    reduce(w);
    return insert_reduced(std::move(w));
  }
  Residues r = to_residues(coeffs);
  reduce(r);
  return insert_reduced(std::move(r));
}

bool EchelonBasis::contains(std::span<const std::int64_t> coeffs) const {
  if (coeffs.size() != length_) throw StructuralError("vector length does not match the basis");
  if (binary()) {
    Words w = pack(coeffs);
    reduce(w);
    return std::all_of(w.begin(), w.end(), [](std::uint64_t x) { return x == 0; });
  }
  Residues r = to_residues(coeffs);
  reduce(r);
  return std::all_of(r.begin(), r.end(), [](std::uint32_t x) { return x == 0; });
}

std::size_t EchelonBasis::insert_batch(std::span<const ModuleVector> batch, unsigned threads) {
  for (const auto& v : batch) check(v);
  const std::size_t before = rank();
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(batch.size())));

  // Pre-reduction against the frozen basis is read-only and runs in parallel.
  auto pre_reduce = [&](auto& out) {
    auto work = [&](std::size_t begin, std::size_t end) {
      for (std::size_t idx = begin; idx < end; ++idx) {
        if constexpr (std::is_same_v<std::decay_t<decltype(out)>, std::vector<Words>>) {
          out[idx] = pack(batch[idx].coeffs());
        } else {
          out[idx] = to_residues(batch[idx].coeffs());
        }
        reduce(out[idx]);
      }
    };
    if (threads == 1) {
      work(0, batch.size());
      return;
    }
    std::vector<std::jthread> pool;
    const std::size_t chunk = (batch.size() + threads - 1) / threads;
    for (unsigned t = 0; t < threads; ++t) {
      const std::size_t begin = t * chunk;
      const std::size_t end = std::min(batch.size(), begin + chunk);
      if (begin < end) pool.emplace_back(work, begin, end);
    }
  };

  if (binary()) {
    std::vector<Words> reduced(batch.size());
    pre_reduce(reduced);
    for (auto& w : reduced) {
      reduce(w);
      insert_reduced(std::move(w));
    }
  } else {
    std::vector<Residues> reduced(batch.size());
    pre_reduce(reduced);
    for (auto& r : reduced) {
      reduce(r);
      insert_reduced(std::move(r));
    }
  }
  return rank() - before;
}

std::vector<std::vector<std::int64_t>> EchelonBasis::rows() const {
  std::vector<std::size_t> order(pivots_.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return pivots_[a] < pivots_[b]; });
  std::vector<std::vector<std::int64_t>> out;
  out.reserve(order.size());
  for (std::size_t row : order) {
    std::vector<std::int64_t> v(length_);
    for (std::size_t k = 0; k < length_; ++k) {
      v[k] = binary() ? static_cast<std::int64_t>((bit_rows_[row][k / 64] >> (k % 64)) & 1) : rows_[row][k];
    }
    out.push_back(std::move(v));
  }
  return out;
}

// ---------------------------------------------------------------------------
// IntegerEchelon

IntegerEchelon::IntegerEchelon(std::size_t length) : length_(length) {}

bool IntegerEchelon::insert(const ModuleVector& v) {
  if (!v.field().is_rational()) throw StructuralError("IntegerEchelon takes integer vectors");
  return insert(std::span<const std::int64_t>(v.coeffs()));
}

bool IntegerEchelon::insert(std::span<const std::int64_t> coeffs) {
  return insert(std::vector<BigInt>(coeffs.begin(), coeffs.end()));
}

bool IntegerEchelon::insert(std::vector<BigInt> v) {
  if (v.size() != length_) throw StructuralError("vector length does not match the basis");
  for (std::size_t row = 0; row < rows_.size(); ++row) {
    const std::size_t c = pivots_[row];
    if (v[c] == 0) continue;
    const auto& r = rows_[row];
    const BigInt g = gcd(r[c], v[c]);
    const BigInt a = r[c] / g;
    const BigInt b = v[c] / g;
    for (std::size_t k = 0; k < c; ++k) {
      if (v[k] != 0) v[k] *= a;
    }
    for (std::size_t k = c; k < length_; ++k) v[k] = a * v[k] - b * r[k];
  }
  const auto it = std::find_if(v.begin(), v.end(), [](const BigInt& x) { return x != 0; });
  if (it == v.end()) return true;
  const std::size_t lead = static_cast<std::size_t>(it - v.begin());

  BigInt content = 0;
  for (const auto& x : v) {
    if (x != 0) content = gcd(content, x);
  }
  if (v[lead] < 0) content = -content;
  if (content != 1) {
    for (auto& x : v) x /= content;
  }
  const auto pos = std::upper_bound(pivots_.begin(), pivots_.end(), lead);
  const auto offset = pos - pivots_.begin();
  pivots_.insert(pos, lead);
  rows_.insert(rows_.begin() + offset, std::move(v));
  return false;
}

// ---------------------------------------------------------------------------
// Subspace arithmetic

std::size_t sum_dim(const EchelonBasis& a, const EchelonBasis& b) {
  if (a.length() != b.length()) throw StructuralError("sum_dim: ambient lengths differ");
  if (a.field() != b.field()) throw StructuralError("sum_dim: fields differ");
  const EchelonBasis& big = a.rank() >= b.rank() ? a : b;
  const EchelonBasis& small = a.rank() >= b.rank() ? b : a;
  EchelonBasis joined = big;
  for (const auto& row : small.rows()) joined.insert(row);
  return joined.rank();
}

std::size_t sum_dim(const IntegerEchelon& a, const IntegerEchelon& b) {
  if (a.length() != b.length()) throw StructuralError("sum_dim: ambient lengths differ");
  const IntegerEchelon& big = a.rank() >= b.rank() ? a : b;
  const IntegerEchelon& small = a.rank() >= b.rank() ? b : a;
  IntegerEchelon joined = big;
  for (const auto& row : small.rows()) joined.insert(row);
  return joined.rank();
}

std::size_t intersect_dim(const EchelonBasis& a, const EchelonBasis& b) { return a.rank() + b.rank() - sum_dim(a, b); }

std::size_t intersect_dim(const IntegerEchelon& a, const IntegerEchelon& b) {
  return a.rank() + b.rank() - sum_dim(a, b);
}

// ---------------------------------------------------------------------------
// Streaming rank

ColumnSource columns_of(std::span<const ModuleVector> columns) {
  return [columns](const ColumnVisitor& visit) {
    for (const auto& c : columns) {
      if (!visit(c)) return;
    }
  };
}

StreamingRank rank_streaming(const ColumnSource& columns, FieldSpec field, const StreamingOptions& options) {
  if (field.is_rational()) throw ParameterError("rank_streaming needs a prime field; use rank_rational");
  StreamingRank result;
  std::optional<EchelonBasis> basis;
  std::vector<ModuleVector> pending;

  auto reached = [&] { return options.early_stop && basis && basis->rank() >= *options.early_stop; };
  auto flush = [&] {
    if (!pending.empty()) {
      basis->insert_batch(pending, options.threads);
      pending.clear();
    }
  };

  columns([&](const ModuleVector& col) {
    if (!basis) {
      basis.emplace(col.size(), field);
      if (reached()) return false;
    }
    ++result.columns_seen;
    if (options.threads > 1) {
      pending.push_back(col);
      if (pending.size() >= options.batch_size) flush();
    } else {
      basis->insert(col);
    }
    return !reached();
  });
  if (basis) {
    flush();
    result.rank = basis->rank();
    result.stopped_early = reached();
  }
  return result;
}

StreamingRank rank_streaming(std::span<const ModuleVector> columns, FieldSpec field, const StreamingOptions& options) {
  return rank_streaming(columns_of(columns), field, options);
}

// ---------------------------------------------------------------------------
// Rational rank

std::uint32_t random_probe_prime(std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  std::uniform_int_distribution<std::uint32_t> dist(1u << 30, (1u << 31) - 1);
  while (true) {
    const std::uint32_t candidate = dist(gen) | 1u;
    if (is_prime(candidate)) return candidate;
  }
}

RationalRank rank_rational(const ColumnSource& columns, const RationalRankOptions& options) {
  RationalRank result;
  result.probe_prime = random_probe_prime(options.seed);
  const FieldSpec probe = FieldSpec::prime(result.probe_prime);

  std::size_t length = 0;
  columns([&](const ModuleVector& col) {
    length = col.size();
    return false;
  });
  StreamingOptions streaming;
  streaming.threads = options.threads;
  const StreamingRank modular = rank_streaming(columns, probe, streaming);
  result.rank = modular.rank;

  if (length <= options.confirm_cap && modular.columns_seen <= options.confirm_cap) {
    IntegerEchelon exact(length);
    columns([&](const ModuleVector& col) {
      exact.insert(col);
      return true;
    });
    if (exact.rank() != modular.rank) {
      throw InternalError("rational rank mismatch: mod " + std::to_string(result.probe_prime) + " gives " +
                          std::to_string(modular.rank) + ", fraction-free elimination gives " +
                          std::to_string(exact.rank()));
    }
    result.confirmed = true;
  }
  return result;
}

RationalRank rank_rational(std::span<const ModuleVector> columns, const RationalRankOptions& options) {
  return rank_rational(columns_of(columns), options);
}

}  // namespace wrank
