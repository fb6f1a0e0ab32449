#include "wrank/specht.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <optional>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>
#include <tuple>
#include <variant>

#include "wrank/errors.hpp"

namespace wrank {

TwoRowTableau::TwoRowTableau(int m, std::vector<int> first_row, std::vector<int> second_row)
    : m_(m), first_(std::move(first_row)), second_(std::move(second_row)) {
  if (static_cast<int>(first_.size() + second_.size()) != m) throw ParameterError("tableau rows must hold m entries");
  if (second_.size() > first_.size()) throw ParameterError("second row longer than first row");
  std::vector<bool> seen(m, false);
  for (const auto* row : {&first_, &second_}) {
    for (int x : *row) {
      if (x < 0 || x >= m || seen[x]) throw ParameterError("tableau entries must be distinct elements of [0, m)");
      seen[x] = true;
    }
  }
}

TwoRowTableau TwoRowTableau::canonical(int m, std::vector<int> second_row) {
  std::vector<bool> used(std::max(m, 0), false);
  for (int x : second_row) {
    if (x < 0 || x >= m) throw ParameterError("tableau entry outside [0, m)");
    used[x] = true;
  }
  std::vector<int> first;
  for (int x = 0; x < m; ++x) {
    if (!used[x]) first.push_back(x);
  }
  return TwoRowTableau(m, std::move(first), std::move(second_row));
}

KSubset TwoRowTableau::tabloid() const {
  std::vector<int> s = second_;
  std::sort(s.begin(), s.end());
  return KSubset(std::move(s), m_);
}

TwoRowTableau TwoRowTableau::truncated(int j) const {
  if (j < 0 || j > second_length()) throw ParameterError("truncation depth exceeds second-row length");
  std::vector<int> first = first_;
  first.insert(first.end(), second_.begin() + j, second_.end());
  return TwoRowTableau(m_, std::move(first), std::vector<int>(second_.begin(), second_.begin() + j));
}

std::string TwoRowTableau::to_string() const {
  std::ostringstream out;
  for (std::size_t c = 0; c < first_.size(); ++c) out << (c ? " " : "") << first_[c] + 1;
  out << " /";
  for (int x : second_) out << ' ' << x + 1;
  return out.str();
}

ModuleVector polytabloid_vector(const TwoRowTableau& t, int j, FieldSpec field) {
  if (j < 0 || j > t.second_length()) {
    throw ParameterError("polytabloid depth " + std::to_string(j) + " exceeds second-row length " +
                         std::to_string(t.second_length()));
  }
  ModuleVector out(t.second_length(), t.m(), field);
  std::vector<int> row(t.second_row().size());
  for (std::uint32_t mask = 0; mask < (1u << j); ++mask) {
    row = t.second_row();
    for (int c = 0; c < j; ++c) {
      if (mask & (1u << c)) row[c] = t.first_row()[c];
    }
    std::sort(row.begin(), row.end());
    out.add_at(subset_rank(row), (std::popcount(mask) % 2) ? -1 : 1);
  }
  return out;
}

BigInt specht_dim(int m, int j) {
  if (m < 0 || j < 0 || 2 * j > m) {
    throw ParameterError("specht_dim: (m-j, j) must be a partition, got m=" + std::to_string(m) +
                         ", j=" + std::to_string(j));
  }
  return binomial(m, j) - binomial(m, j - 1);
}

BigInt lemma_coefficient(int m, int n, int k, int i, int j) {
  if (!(0 <= i && i <= k && k <= n && 2 * n <= m) || j < 0 || j > k) {
    throw ParameterError("lemma_coefficient needs 0 <= i <= k <= n <= m/2 and 0 <= j <= k");
  }
  BigInt total = 0;
  for (int l = 0; l <= j; ++l) {
    BigInt term = binomial(j, l) * binomial(n - j, i - l) * binomial(m - n - j, k - i - j + l);
    if ((j - l) % 2) term = -term;
    total += term;
  }
  return total;
}

LemmaCheck verify_lemma_image(int m, int n, int k, int i, int j, const TwoRowTableau& t, FieldSpec field) {
  const BigInt coefficient = lemma_coefficient(m, n, k, i, j);
  if (t.m() != m || t.second_length() != n) throw ParameterError("tableau must have shape (m-n, n)");

  const ModuleVector e_t = polytabloid_vector(t, j, field);
  const LinearMap tau = LinearMap::intersection({m, k, n, i}, field);
  const LinearMap psi = LinearMap::inclusion(m, k, j, field);
  ModuleVector image = tau.then(psi).apply(e_t);

  TwoRowTableau target = t.truncated(j);
  const auto c = static_cast<std::int64_t>(coefficient);
  ModuleVector expected = polytabloid_vector(target, j, field).scaled(c);
  const bool match = image == expected;
  return {match, coefficient, std::move(target), std::move(image), std::move(expected)};
}

int james_multiplicity(int m, std::uint64_t p, int i_top, int j_factor) {
  if (!is_prime(p)) throw ParameterError("james_multiplicity: p must be prime");
  if (i_top < 0 || i_top > 2 || j_factor < 0 || j_factor > i_top || m <= 2 * i_top) {
    throw ParameterError("james_multiplicity: only 0 <= j <= i <= 2 with m > 2i is covered");
  }
  const auto mm = static_cast<std::uint64_t>(m);
  if (j_factor == i_top) return 1;
  if (i_top == 1) return mm % p == 0 ? 1 : 0;  // j = 0
  if (j_factor == 1) return mm % p == 2 % p ? 1 : 0;
  // [S^(m-2,2) : D^(m)]
  if (p == 2) return (mm % 4 == 1 || mm % 4 == 2) ? 1 : 0;
  return mm % p == 1 ? 1 : 0;
}

ColumnSource polytabloid_family(int m, int r, int j, FieldSpec field) {
  if (r < 0 || 2 * r > m || j < 0 || j > r) throw ParameterError("polytabloid_family needs 0 <= j <= r <= m/2");
  return [=](const ColumnVisitor& visit) {
    bool stop = false;
    // Bottoms of the first j columns, then their tops as an ordered tuple.
    for_each_subset(j, m, [&](std::span<const int> bottoms) {
      std::vector<int> rest;
      for (int x = 0; x < m; ++x) {
        if (!std::binary_search(bottoms.begin(), bottoms.end(), x)) rest.push_back(x);
      }
      std::vector<int> tops;
      std::vector<bool> taken(m, false);
      std::function<void()> choose_tops = [&] {
        if (stop) return;
        if (static_cast<int>(tops.size()) == j) {
          std::vector<int> pool;
          for (int x : rest) {
            if (!taken[x]) pool.push_back(x);
          }
          for_each_subset_of(pool, r - j, [&](std::span<const int> tail) {
            if (stop) return;
            std::vector<int> second(bottoms.begin(), bottoms.end());
            second.insert(second.end(), tail.begin(), tail.end());
            std::vector<int> first = tops;
            for (int x : pool) {
              if (!std::binary_search(tail.begin(), tail.end(), x)) first.push_back(x);
            }
            if (!visit(polytabloid_vector(TwoRowTableau(m, std::move(first), std::move(second)), j, field))) stop = true;
          });
          return;
        }
        for (int x : rest) {
          if (taken[x]) continue;
          taken[x] = true;
          tops.push_back(x);
          choose_tops();
          tops.pop_back();
          taken[x] = false;
        }
      };
      choose_tops();
      return !stop;
    });
  };
}

namespace {

using AnyBasis = std::variant<EchelonBasis, IntegerEchelon>;

std::size_t basis_rank(const AnyBasis& b) {
  return std::visit([](const auto& x) { return x.rank(); }, b);
}

AnyBasis build_span(const ColumnSource& source, std::size_t length, FieldSpec field, std::optional<std::size_t> stop_at) {
  AnyBasis basis = field.is_rational() ? AnyBasis(IntegerEchelon(length)) : AnyBasis(EchelonBasis(length, field));
  std::visit(
      [&](auto& b) {
        if (stop_at && b.rank() >= *stop_at) return;
        source([&](const ModuleVector& v) {
          b.insert(v);
          return !(stop_at && b.rank() >= *stop_at);
        });
      },
      basis);
  return basis;
}

std::size_t intersect(const AnyBasis& a, const AnyBasis& b) {
  return std::visit(
      [](const auto& x, const auto& y) -> std::size_t {
        if constexpr (std::is_same_v<std::decay_t<decltype(x)>, std::decay_t<decltype(y)>>) {
          return intersect_dim(x, y);
        } else {
          throw InternalError("intersecting bases over different fields");
        }
      },
      a, b);
}

// Specht filtration spans of M^(m-2,2) depend only on (m, j, field).
std::shared_ptr<const AnyBasis> filtration_span(int m, int j, FieldSpec field) {
  static std::mutex mutex;
  static std::map<std::tuple<int, int, std::uint32_t>, std::shared_ptr<const AnyBasis>> cache;
  const auto key = std::make_tuple(m, j, field.characteristic());
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  std::optional<std::size_t> stop_at;
  if (field.is_rational()) stop_at = static_cast<std::size_t>(binomial(m, 2) - binomial(m, j - 1));
  auto span = std::make_shared<const AnyBasis>(
      build_span(polytabloid_family(m, 2, j, field), binomial_u64(m, 2), field, stop_at));
  std::lock_guard lock(mutex);
  cache.emplace(key, span);
  return span;
}

}  // namespace

std::size_t polytabloid_span_dim(int m, int r, int j, FieldSpec field, bool early_stop) {
  std::optional<std::size_t> stop_at;
  if (early_stop && field.is_rational()) stop_at = static_cast<std::size_t>(binomial(m, r) - binomial(m, j - 1));
  return basis_rank(build_span(polytabloid_family(m, r, j, field), binomial_u64(m, r), field, stop_at));
}

LayerDims layer_dims(const IncidenceSpec& spec, FieldSpec field, int max_m) {
  spec.validate();
  if (spec.k != 2 || spec.i != 1) throw ParameterError("layer_dims covers W_{2,n}^1(m) only");
  if (spec.n < 1 || 2 * spec.n > spec.m) throw ParameterError("layer_dims needs a normalized spec with 1 <= n <= m/2");
  if (spec.m > max_m) {
    throw SizeCapError("layer_dims: m=" + std::to_string(spec.m) + " exceeds cap " + std::to_string(max_m));
  }
  const std::size_t length = binomial_u64(spec.m, 2);
  const AnyBasis image = build_span(LinearMap::intersection(spec, field).columns(), length, field, length);
  const auto s1 = filtration_span(spec.m, 1, field);
  const auto s2 = filtration_span(spec.m, 2, field);

  const std::size_t p0 = basis_rank(image);
  const std::size_t p1 = intersect(image, *s1);
  const std::size_t p2 = intersect(image, *s2);
  return {p0 - p1, p1 - p2, p2, p0};
}

}  // namespace wrank
