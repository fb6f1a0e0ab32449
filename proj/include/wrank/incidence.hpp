#pragma once

// Columns of the subset-intersection matrices W_{k,n}^i(m) and of the
// inclusion maps between tabloid modules, generated lazily from the column
// subset T. No map ever stores its dense matrix.

#include <string>
#include <vector>

#include "wrank/combinatorics.hpp"
#include "wrank/echelon.hpp"
#include "wrank/field.hpp"
#include "wrank/triplet.hpp"

namespace wrank {

/// W_{k,n}^i(m): rows are k-subsets, columns n-subsets of an m-set, entry 1
/// iff |S ∩ T| = i.
struct IncidenceSpec {
  int m = 0;
  int k = 0;
  int n = 0;
  int i = 0;

  /// Throws ParameterError unless 0 <= i <= min(k, n) and k, n <= m.
  void validate() const;
  [[nodiscard]] std::uint64_t rows() const { return binomial_u64(m, k); }
  [[nodiscard]] std::uint64_t cols() const { return binomial_u64(m, n); }
  [[nodiscard]] std::string to_string() const;

  friend bool operator==(const IncidenceSpec&, const IncidenceSpec&) = default;
};

/// An equivalent spec plus the column reindexing that relates the two
/// matrices: column T of the original is column X \ T of the normalized spec
/// when `complemented` is set.
struct NormalizedSpec {
  IncidenceSpec spec;
  bool complemented = false;
  std::string rule;

  [[nodiscard]] KSubset normalized_column(const KSubset& original_column) const {
    return complemented ? original_column.complement() : original_column;
  }
};

/// W_{2,n}^1(m) -> W_{2,m-n}^1(m) when 2n > m; W_{k,n}^0(m) -> W_{k,m-n}^k(m).
NormalizedSpec normalize_spec(const IncidenceSpec& spec);

/// Column T of W_{k,n}^i(m). Built by choosing i elements inside T and k-i
/// outside, so the cost is C(n,i) C(m-n,k-i) rather than C(m,k).
ModuleVector intersection_column(const IncidenceSpec& spec, const KSubset& column, FieldSpec field);

/// psi_{from,to}(T): indicator of the `to`-subsets contained in T.
ModuleVector inclusion_column(int from, int to, const KSubset& column, int m, FieldSpec field);

/// Upward inclusion: indicator of the `to`-supersets of the `from`-subset T.
ModuleVector containment_column(int from, int to, const KSubset& column, int m, FieldSpec field);

/// A homomorphism between tabloid modules M^(m-a,a) -> M^(m-b,b), given as a
/// recipe: one primitive map or a chain of them.
class LinearMap {
public:
  /// tau_{n,k}^i (rho_{n,k} when i = 1): the map with matrix W_{k,n}^i(m).
  static LinearMap intersection(const IncidenceSpec& spec, FieldSpec field);
  /// psi_{from,to} for to <= from.
  static LinearMap inclusion(int m, int from, int to, FieldSpec field);
  /// The upward map sending a subset to the sum of its supersets (to >= from).
  static LinearMap containment(int m, int from, int to, FieldSpec field);

  /// next ∘ *this.
  [[nodiscard]] LinearMap then(const LinearMap& next) const;

  [[nodiscard]] int m() const { return m_; }
  [[nodiscard]] int domain_part() const;
  [[nodiscard]] int codomain_part() const;
  [[nodiscard]] FieldSpec field() const { return field_; }
  [[nodiscard]] std::string describe() const;

  /// Image of the basis vector T.
  [[nodiscard]] ModuleVector column(const KSubset& t) const;
  /// Linear extension of `column`.
  [[nodiscard]] ModuleVector apply(const ModuleVector& v) const;
  /// All columns, T in colex order.
  [[nodiscard]] ColumnSource columns() const;
  [[nodiscard]] TripletMatrix materialize() const;

private:
  enum class Kind { kIntersection, kInclusion, kContainment };
  struct Step {
    Kind kind;
    int from;
    int to;
    int i;  // intersection size, intersection steps only
  };

  LinearMap(int m, FieldSpec field, std::vector<Step> steps) : m_(m), field_(field), steps_(std::move(steps)) {}
  [[nodiscard]] ModuleVector apply_step(const Step& step, const ModuleVector& v) const;
  [[nodiscard]] ModuleVector step_column(const Step& step, const KSubset& t) const;

  int m_;
  FieldSpec field_;
  std::vector<Step> steps_;
};

}  // namespace wrank
