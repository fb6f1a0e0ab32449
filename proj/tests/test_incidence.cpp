#include <doctest.h>

#include <bit>

#include "oracles.hpp"
#include "wrank/errors.hpp"
#include "wrank/incidence.hpp"

using namespace wrank;

namespace {

KSubset from_mask(std::uint32_t mask, int m) { return KSubset(oracle::elements(mask), m); }

std::uint32_t complement_mask(std::uint32_t mask, int m) { return ((1u << m) - 1) & ~mask; }

// Oracle row index of a k-subset mask in colex order.
std::size_t oracle_index(const std::vector<std::uint32_t>& order, std::uint32_t mask) {
  return static_cast<std::size_t>(std::lower_bound(order.begin(), order.end(), mask) - order.begin());
}

}  // namespace

TEST_CASE("intersection_column example m=4, T={1,2}") {
  const IncidenceSpec spec{4, 2, 2, 1};
  const std::vector<int> t{1, 2};
  const auto col = intersection_column(spec, KSubset::from_one_based(t, 4), FieldSpec::rational());
  // Colex order of 2-subsets: 12, 13, 23, 14, 24, 34.
  CHECK(col.coeffs() == std::vector<std::int64_t>{0, 1, 1, 1, 1, 0});
  CHECK_THROWS_AS(intersection_column(spec, KSubset({0, 1, 2}, 4), FieldSpec::rational()), StructuralError);
}

TEST_CASE("intersection columns agree with the bitmask oracle") {
  const auto q = FieldSpec::rational();
  for (int m = 1; m <= 9; ++m) {
    for (int k = 0; k <= m; ++k) {
      for (int n = 0; n <= m; ++n) {
        for (int i = 0; i <= std::min(k, n); ++i) {
          const IncidenceSpec spec{m, k, n, i};
          const auto w = oracle::incidence(m, k, n, i);
          const auto cols = oracle::colex_subsets(n, m);
          const auto weight = oracle::pascal(n, i) * oracle::pascal(m - n, k - i);
          for (std::size_t c = 0; c < cols.size(); ++c) {
            const auto col = intersection_column(spec, from_mask(cols[c], m), q);
            std::size_t ones = 0;
            for (std::size_t r = 0; r < w.size(); ++r) {
              REQUIRE(col[r] == w[r][c]);
              ones += static_cast<std::size_t>(col[r]);
            }
            REQUIRE(ones == weight);
          }
        }
      }
    }
  }
}

TEST_CASE("i = k = n gives the identity column") {
  for (int m = 1; m <= 8; ++m) {
    for (int k = 0; k <= m; ++k) {
      const IncidenceSpec spec{m, k, k, k};
      for (std::uint32_t mask : oracle::colex_subsets(k, m)) {
        const KSubset t = from_mask(mask, m);
        const auto col = intersection_column(spec, t, FieldSpec::rational());
        REQUIRE(col == ModuleVector::basis(k, m, FieldSpec::rational(), subset_rank(t)));
      }
    }
  }
}

TEST_CASE("inclusion and containment columns") {
  const auto q = FieldSpec::rational();
  SUBCASE("psi_{2,0} sends every pair to the empty set") {
    for_each_subset(2, 6, [&](std::span<const int> s) {
      const auto col = inclusion_column(2, 0, KSubset({s.begin(), s.end()}, 6), 6, q);
      REQUIRE(col.coeffs() == std::vector<std::int64_t>{1});
      return true;
    });
  }
  SUBCASE("psi_{3,1} of {1,2,5} in m=6") {
    const std::vector<int> t{1, 2, 5};
    const auto col = inclusion_column(3, 1, KSubset::from_one_based(t, 6), 6, q);
    CHECK(col.coeffs() == std::vector<std::int64_t>{1, 1, 0, 0, 1, 0});
  }
  SUBCASE("column weights and agreement with the oracle") {
    for (int m = 1; m <= 8; ++m) {
      for (int from = 0; from <= m; ++from) {
        for (int to = 0; to <= from; ++to) {
          const auto to_sets = oracle::colex_subsets(to, m);
          for (std::uint32_t mask : oracle::colex_subsets(from, m)) {
            const auto down = inclusion_column(from, to, from_mask(mask, m), m, q);
            REQUIRE(down.nonzero_count() == oracle::pascal(from, to));
            for (std::size_t r = 0; r < to_sets.size(); ++r) {
              REQUIRE(down[r] == ((to_sets[r] & ~mask) == 0 ? 1 : 0));
            }
          }
          // Containment goes the other way and is the transpose of inclusion.
          for (std::uint32_t mask : to_sets) {
            const auto up = containment_column(to, from, from_mask(mask, m), m, q);
            const auto from_sets = oracle::colex_subsets(from, m);
            for (std::size_t r = 0; r < from_sets.size(); ++r) {
              REQUIRE(up[r] == ((mask & ~from_sets[r]) == 0 ? 1 : 0));
            }
          }
        }
      }
    }
  }
  SUBCASE("size violations") {
    CHECK_THROWS_AS(inclusion_column(1, 2, KSubset({0}, 4), 4, q), StructuralError);
    CHECK_THROWS_AS(inclusion_column(2, 1, KSubset({0}, 4), 4, q), StructuralError);
    CHECK_THROWS_AS(containment_column(2, 1, KSubset({0, 1}, 4), 4, q), StructuralError);
  }
}

TEST_CASE("complement identities hold entrywise for m <= 10") {
  const auto q = FieldSpec::rational();
  for (int m = 1; m <= 10; ++m) {
    for (int k = 1; k <= m; ++k) {
      for (int n = 0; n <= m; ++n) {
        if (k > m - n) continue;  // W^k_{k,m-n} needs k <= m-n
        const auto zero = LinearMap::intersection({m, k, n, 0}, q);
        const auto full = LinearMap::intersection({m, k, m - n, k}, q);
        for (std::uint32_t mask : oracle::colex_subsets(n, m)) {
          const KSubset t = from_mask(mask, m);
          REQUIRE(zero.column(t) == full.column(from_mask(complement_mask(mask, m), m)));
        }
      }
    }
    for (int n = 1; n < m; ++n) {
      const auto a = LinearMap::intersection({m, 2, n, 1}, q);
      const auto b = LinearMap::intersection({m, 2, m - n, 1}, q);
      for (std::uint32_t mask : oracle::colex_subsets(n, m)) {
        REQUIRE(a.column(from_mask(mask, m)) == b.column(from_mask(complement_mask(mask, m), m)));
      }
    }
  }
}

TEST_CASE("over GF(2), rho_{n,2} factors through the 1-subsets") {
  const auto f2 = FieldSpec::prime(2);
  for (int m = 4; m <= 10; ++m) {
    for (int n = 2; 2 * n <= m; ++n) {
      const auto rho = LinearMap::intersection({m, 2, n, 1}, f2);
      const auto factored = LinearMap::inclusion(m, n, 1, f2).then(LinearMap::containment(m, 1, 2, f2));
      CHECK(factored.materialize() == rho.materialize());
    }
  }
}

TEST_CASE("psi_{2,1} after rho_{n,2}: m-n inside T, n outside") {
  const auto q = FieldSpec::rational();
  for (int m = 2; m <= 10; ++m) {
    for (int n = 1; n <= m; ++n) {
      const auto map = LinearMap::intersection({m, 2, n, 1}, q).then(LinearMap::inclusion(m, 2, 1, q));
      for (std::uint32_t mask : oracle::colex_subsets(n, m)) {
        const auto col = map.column(from_mask(mask, m));
        for (int x = 0; x < m; ++x) {
          REQUIRE(col[static_cast<std::size_t>(x)] == ((mask >> x) & 1u ? m - n : n));
        }
      }
    }
  }
}

TEST_CASE("apply extends the column action linearly") {
  const auto q = FieldSpec::rational();
  const int m = 7;
  const int n = 3;
  const auto rho = LinearMap::intersection({m, 2, n, 1}, q);
  const auto to_empty = rho.then(LinearMap::inclusion(m, 2, 0, q));
  for (std::uint64_t idx = 0; idx < binomial_u64(m, n); ++idx) {
    const auto e = ModuleVector::basis(n, m, q, idx);
    REQUIRE(rho.apply(e) == rho.column(subset_unrank(idx, n, m)));
    REQUIRE(to_empty.apply(e).coeffs() == std::vector<std::int64_t>{n * (m - n)});
  }
  // Linearity on a mixed vector, against the oracle matrix.
  ModuleVector v(n, m, q);
  for (std::size_t idx = 0; idx < v.size(); ++idx) v.add_at(idx, static_cast<std::int64_t>(idx % 5) - 2);
  const auto w = oracle::incidence(m, 2, n, 1);
  const auto image = rho.apply(v);
  for (std::size_t r = 0; r < w.size(); ++r) {
    std::int64_t expect = 0;
    for (std::size_t c = 0; c < v.size(); ++c) expect += w[r][c] * v[c];
    REQUIRE(image[r] == expect);
  }
  CHECK_THROWS_AS((void)rho.apply(ModuleVector(2, m, q)), StructuralError);
  CHECK_THROWS_AS((void)rho.apply(ModuleVector(n, m, FieldSpec::prime(3))), StructuralError);
  CHECK_THROWS_AS((void)rho.then(LinearMap::inclusion(m, 3, 1, q)), StructuralError);
}

TEST_CASE("the all-ones vector of 1-subsets is killed by psi_{1,2} over GF(2)") {
  const auto f2 = FieldSpec::prime(2);
  for (int m = 2; m <= 12; ++m) {
    const auto lift = LinearMap::containment(m, 1, 2, f2);
    CHECK(lift.apply(ModuleVector::ones(1, m, f2)).is_zero());
  }
}

TEST_CASE("normalize_spec examples") {
  const auto a = normalize_spec({7, 2, 5, 1});
  CHECK(a.spec == IncidenceSpec{7, 2, 2, 1});
  CHECK(a.complemented);
  const auto b = normalize_spec({8, 3, 2, 0});
  CHECK(b.spec == IncidenceSpec{8, 3, 6, 3});
  CHECK(b.complemented);
  const auto c = normalize_spec({8, 2, 3, 1});
  CHECK(c.spec == IncidenceSpec{8, 2, 3, 1});
  CHECK_FALSE(c.complemented);
  const std::vector<int> t{1, 2};
  CHECK(a.normalized_column(KSubset::from_one_based(t, 7)).to_string() == "{3,4,5,6,7}");
  CHECK_THROWS_AS(normalize_spec({5, 2, 2, 3}), ParameterError);
  CHECK_THROWS_AS(normalize_spec({5, 6, 2, 1}), ParameterError);
}

TEST_CASE("materialize matches the oracle matrix and describes itself") {
  const auto q = FieldSpec::rational();
  const auto map = LinearMap::intersection({6, 2, 3, 1}, q);
  const auto t = map.materialize();
  CHECK(t.rows == 15);
  CHECK(t.cols == 20);
  const auto dense = to_dense(t);
  const auto w = oracle::incidence(6, 2, 3, 1);
  for (std::size_t r = 0; r < 15; ++r) {
    for (std::size_t c = 0; c < 20; ++c) REQUIRE(dense(r, c) == w[r][c]);
  }
  CHECK(map.then(LinearMap::inclusion(6, 2, 1, q)).describe() == "psi_{2,1} o tau^1_{3,2} (m=6, char 0)");
}
