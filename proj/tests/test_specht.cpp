#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "oracles.hpp"
#include "wrank/errors.hpp"
#include "wrank/rank_formulas.hpp"
#include "wrank/specht.hpp"

using namespace wrank;

namespace {

std::size_t idx(std::vector<int> one_based, int m) {
  for (int& x : one_based) --x;
  return subset_rank(KSubset(std::move(one_based), m));
}

// Tableau with rows given 1-based, as printed.
TwoRowTableau tableau(std::vector<int> first, std::vector<int> second) {
  for (int& x : first) --x;
  for (int& x : second) --x;
  const int m = static_cast<int>(first.size() + second.size());
  return TwoRowTableau(m, std::move(first), std::move(second));
}

TwoRowTableau random_tableau(std::mt19937& gen, int m, int r) {
  std::vector<int> perm(m);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), gen);
  return TwoRowTableau(m, {perm.begin() + r, perm.end()}, {perm.begin(), perm.begin() + r});
}

}  // namespace

TEST_CASE("polytabloid examples for shape (4,2)") {
  const auto q = FieldSpec::rational();
  const auto t = tableau({1, 2, 3, 4}, {5, 6});
  CHECK(t.to_string() == "1 2 3 4 / 5 6");

  const auto e0 = polytabloid_vector(t, 0, q);
  CHECK(e0 == ModuleVector::basis(2, 6, q, idx({5, 6}, 6)));

  ModuleVector e1(2, 6, q);
  e1.add_at(idx({5, 6}, 6), 1);
  e1.add_at(idx({1, 6}, 6), -1);
  CHECK(polytabloid_vector(t, 1, q) == e1);

  ModuleVector e2 = e1;
  e2.add_at(idx({2, 5}, 6), -1);
  e2.add_at(idx({1, 2}, 6), 1);
  CHECK(polytabloid_vector(t, 2, q) == e2);

  CHECK_THROWS_AS(polytabloid_vector(t, 3, q), ParameterError);
}

TEST_CASE("polytabloids have 2^j entries of +-1") {
  std::mt19937 gen(17);
  for (int m = 2; m <= 10; ++m) {
    for (int r = 0; 2 * r <= m; ++r) {
      for (int j = 0; j <= r; ++j) {
        const auto v = polytabloid_vector(random_tableau(gen, m, r), j, FieldSpec::rational());
        REQUIRE(v.nonzero_count() == (1u << j));
        for (auto c : v.coeffs()) REQUIRE((c == 0 || c == 1 || c == -1));
      }
    }
  }
}

TEST_CASE("tableau construction") {
  const auto t = TwoRowTableau::canonical(6, {4, 1});
  CHECK(t.first_row() == std::vector<int>{0, 2, 3, 5});
  CHECK(t.tabloid() == KSubset({1, 4}, 6));
  const auto s = tableau({2, 4, 5, 6}, {1, 3}).truncated(1);
  CHECK(s.to_string() == "2 4 5 6 3 / 1");
  CHECK_THROWS_AS(TwoRowTableau(4, {0}, {1, 2, 3}), ParameterError);
  CHECK_THROWS_AS(TwoRowTableau(4, {0, 1}, {1, 3}), ParameterError);
  CHECK_THROWS_AS(TwoRowTableau(3, {0, 1}, {1}), ParameterError);
}

TEST_CASE("specht_dim") {
  CHECK(specht_dim(9, 0) == 1);
  CHECK(specht_dim(7, 1) == 6);
  CHECK(specht_dim(6, 2) == 9);
  CHECK_THROWS_AS(specht_dim(5, 3), ParameterError);
  for (int m = 0; m <= 40; ++m) {
    BigInt total = 0;
    for (int j = 0; 2 * j <= m; ++j) {
      total += specht_dim(m, j);
      // Specht series: dims from j up to r telescope to C(m, r) - C(m, j - 1).
      REQUIRE(total == oracle::pascal(m, j));
    }
  }
}

TEST_CASE("lemma_coefficient examples") {
  CHECK(lemma_coefficient(10, 3, 2, 1, 0) == 21);
  CHECK(lemma_coefficient(10, 3, 2, 1, 1) == 4);
  CHECK(lemma_coefficient(10, 3, 2, 1, 2) == -2);
  CHECK(lemma_coefficient(10, 5, 2, 1, 1) == 0);
  CHECK(lemma_coefficient(12, 4, 3, 3, 2) == 2);
  CHECK_THROWS_AS(lemma_coefficient(10, 6, 2, 1, 0), ParameterError);
  CHECK_THROWS_AS(lemma_coefficient(10, 3, 2, 1, 3), ParameterError);
}

TEST_CASE("lemma_coefficient closed forms") {
  for (int m = 0; m <= 20; ++m) {
    for (int n = 0; 2 * n <= m; ++n) {
      for (int k = 0; k <= n; ++k) {
        for (int i = 0; i <= k; ++i) {
          REQUIRE(lemma_coefficient(m, n, k, i, 0) == oracle::pascal(n, i) * oracle::pascal(m - n, k - i));
        }
        for (int j = 0; j <= k; ++j) REQUIRE(lemma_coefficient(m, n, k, k, j) == oracle::pascal(n - j, k - j));
      }
      if (n >= 2) {
        REQUIRE(lemma_coefficient(m, n, 2, 1, 1) == m - 2 * n);
        REQUIRE(lemma_coefficient(m, n, 2, 1, 2) == -2);
      }
    }
  }
}

TEST_CASE("verify_lemma_image examples") {
  const auto q = FieldSpec::rational();
  SUBCASE("k=2, i=1, j=2 gives 2 e_{s'} with the second column flipped") {
    // t = b d e ... / a c ...; s' = b c ... / a d ...
    const auto t = tableau({2, 4, 6, 7, 8}, {1, 3, 5});
    const auto check = verify_lemma_image(8, 3, 2, 1, 2, t, q);
    CHECK(check.match);
    CHECK(check.coefficient == -2);
    const auto s_prime = tableau({2, 3, 5, 6, 7, 8}, {1, 4});
    CHECK(check.image == polytabloid_vector(s_prime, 2, q).scaled(2));
  }
  SUBCASE("k=2, i=1, j=1, m=2n has zero image") {
    const auto check = verify_lemma_image(8, 4, 2, 1, 1, tableau({5, 6, 7, 8}, {1, 2, 3, 4}), q);
    CHECK(check.match);
    CHECK(check.image.is_zero());
  }
  SUBCASE("i = k = j gives e_s exactly") {
    const auto t = tableau({1, 3, 5, 7, 9}, {2, 4, 6, 8});
    const auto check = verify_lemma_image(9, 4, 3, 3, 3, t, q);
    CHECK(check.match);
    CHECK(check.coefficient == 1);
    CHECK(check.image == polytabloid_vector(check.target, 3, q));
  }
}

TEST_CASE("verify_lemma_image on random tableaux for m <= 8") {
  std::mt19937 gen(23);
  for (int m = 2; m <= 8; ++m) {
    for (int n = 0; 2 * n <= m; ++n) {
      for (int k = 0; k <= std::min(n, 3); ++k) {
        for (int i = 0; i <= k; ++i) {
          for (int j = 0; j <= k; ++j) {
            for (int trial = 0; trial < 2; ++trial) {
              REQUIRE(verify_lemma_image(m, n, k, i, j, random_tableau(gen, m, n), FieldSpec::rational()).match);
            }
          }
        }
      }
    }
  }
}

TEST_CASE("james multiplicities") {
  for (int m = 3; m <= 30; ++m) {
    for (std::uint64_t p : {2, 3, 5, 7}) {
      CHECK(james_multiplicity(m, p, 1, 0) == (m % static_cast<int>(p) == 0 ? 1 : 0));
      CHECK(james_multiplicity(m, p, 0, 0) == 1);
      CHECK(james_multiplicity(m, p, 1, 1) == 1);
      if (m > 4) CHECK(james_multiplicity(m, p, 2, 2) == 1);
    }
    if (m > 4) CHECK(james_multiplicity(m, 2, 2, 0) == (m % 4 == 1 || m % 4 == 2 ? 1 : 0));
  }
  CHECK_THROWS_AS(james_multiplicity(4, 2, 2, 0), ParameterError);
  CHECK_THROWS_AS(james_multiplicity(9, 4, 1, 0), ParameterError);
  CHECK_THROWS_AS(james_multiplicity(9, 3, 3, 0), ParameterError);
}

TEST_CASE("polytabloid spans telescope in characteristic 0") {
  const auto q = FieldSpec::rational();
  for (int m = 4; m <= 8; ++m) {
    const auto c2 = binomial_u64(m, 2);
    CHECK(polytabloid_span_dim(m, 2, 0, q) == c2);
    CHECK(polytabloid_span_dim(m, 2, 1, q) == c2 - 1);
    CHECK(polytabloid_span_dim(m, 2, 2, q) == c2 - static_cast<std::uint64_t>(m));
  }
}

TEST_CASE("layer_dims examples") {
  const auto q = FieldSpec::rational();
  CHECK(layer_dims({7, 2, 3, 1}, q) == LayerDims{1, 6, 14, 21});
  CHECK(layer_dims({8, 2, 4, 1}, q) == LayerDims{1, 0, 20, 21});
  CHECK(layer_dims({9, 2, 3, 1}, FieldSpec::prime(3)) == LayerDims{0, 0, 27, 27});
  CHECK(layer_dims({10, 2, 2, 1}, FieldSpec::prime(3)) == LayerDims{1, 0, 35, 36});
  CHECK(layer_dims({7, 2, 2, 1}, FieldSpec::prime(5)) == LayerDims{0, 6, 14, 20});
  CHECK_THROWS_AS(layer_dims({13, 2, 3, 1}, q), SizeCapError);
  CHECK_THROWS_AS(layer_dims({8, 2, 5, 1}, q), ParameterError);
  CHECK_THROWS_AS(layer_dims({8, 3, 3, 1}, q), ParameterError);
}

TEST_CASE("layer sums equal the independent rank") {
  for (int m = 4; m <= 9; ++m) {
    for (int n = 2; 2 * n <= m; ++n) {
      const auto w = oracle::incidence(m, 2, n, 1);
      for (std::uint64_t p : {2, 3, 5}) {
        const auto layers = layer_dims({m, 2, n, 1}, FieldSpec::prime(p));
        REQUIRE(layers.l0 + layers.l1 + layers.l2 == layers.rank);
        REQUIRE(layers.rank == oracle::rank_mod_p(w, static_cast<std::int64_t>(p)));
      }
    }
  }
}
