#include "wrank/incidence.hpp"

#include <algorithm>
#include <sstream>

#include "wrank/errors.hpp"

namespace wrank {
namespace {

std::vector<int> merge_sorted(std::span<const int> a, std::span<const int> b) {
  std::vector<int> out(a.size() + b.size());
  std::merge(a.begin(), a.end(), b.begin(), b.end(), out.begin());
  return out;
}

void require_column(const KSubset& t, int size, int m) {
  if (t.m() != m) throw StructuralError("column subset lives in a different ground set");
  if (t.size() != size) {
    throw StructuralError("column subset has size " + std::to_string(t.size()) + ", expected " + std::to_string(size));
  }
}

}  // namespace

void IncidenceSpec::validate() const {
  if (m < 0 || k < 0 || n < 0 || i < 0) throw ParameterError("incidence parameters must be nonnegative");
  if (k > m || n > m) throw ParameterError("k and n must not exceed m in " + to_string());
  if (i > k || i > n) throw ParameterError("intersection size i must not exceed k or n in " + to_string());
}

std::string IncidenceSpec::to_string() const {
  std::ostringstream out;
  out << "W_{" << k << "," << n << "}^" << i << "(" << m << ")";
  return out.str();
}

NormalizedSpec normalize_spec(const IncidenceSpec& spec) {
  spec.validate();
  if (spec.k == 2 && spec.i == 1 && 2 * spec.n > spec.m) {
    return {{spec.m, 2, spec.m - spec.n, 1}, true, "W_{2,n}^1(m) = W_{2,m-n}^1(m), T -> X\\T"};
  }
  if (spec.i == 0 && spec.k > 0) {
    return {{spec.m, spec.k, spec.m - spec.n, spec.k}, true, "W_{k,n}^0(m) = W_{k,m-n}^k(m), T -> X\\T"};
  }
  return {spec, false, "identity"};
}

ModuleVector intersection_column(const IncidenceSpec& spec, const KSubset& column, FieldSpec field) {
  spec.validate();
  require_column(column, spec.n, spec.m);
  ModuleVector out(spec.k, spec.m, field);
  const auto inside = column.elements();
  const auto outside = column.complement().elements();
  for_each_subset_of(inside, spec.i, [&](std::span<const int> a) {
    const std::vector<int> a_copy(a.begin(), a.end());
    for_each_subset_of(outside, spec.k - spec.i, [&](std::span<const int> b) {
      out.add_at(subset_rank(merge_sorted(a_copy, b)), 1);
    });
  });
  return out;
}

ModuleVector inclusion_column(int from, int to, const KSubset& column, int m, FieldSpec field) {
  if (to < 0 || to > from || from > m) throw StructuralError("inclusion map needs 0 <= to <= from <= m");
  require_column(column, from, m);
  ModuleVector out(to, m, field);
  for_each_subset_of(column.elements(), to, [&](std::span<const int> s) { out.add_at(subset_rank(s), 1); });
  return out;
}

ModuleVector containment_column(int from, int to, const KSubset& column, int m, FieldSpec field) {
  if (from < 0 || from > to || to > m) throw StructuralError("containment map needs 0 <= from <= to <= m");
  require_column(column, from, m);
  ModuleVector out(to, m, field);
  const auto outside = column.complement().elements();
  for_each_subset_of(outside, to - from, [&](std::span<const int> extra) {
    out.add_at(subset_rank(merge_sorted(column.elements(), extra)), 1);
  });
  return out;
}

LinearMap LinearMap::intersection(const IncidenceSpec& spec, FieldSpec field) {
  spec.validate();
  return LinearMap(spec.m, field, {{Kind::kIntersection, spec.n, spec.k, spec.i}});
}

LinearMap LinearMap::inclusion(int m, int from, int to, FieldSpec field) {
  if (to < 0 || to > from || from > m) throw StructuralError("inclusion map needs 0 <= to <= from <= m");
  return LinearMap(m, field, {{Kind::kInclusion, from, to, 0}});
}

LinearMap LinearMap::containment(int m, int from, int to, FieldSpec field) {
  if (from < 0 || from > to || to > m) throw StructuralError("containment map needs 0 <= from <= to <= m");
  return LinearMap(m, field, {{Kind::kContainment, from, to, 0}});
}

LinearMap LinearMap::then(const LinearMap& next) const {
  if (next.m_ != m_ || next.field_ != field_) throw StructuralError("cannot compose maps over different modules");
  if (next.domain_part() != codomain_part()) throw StructuralError("composition: codomain does not match next domain");
  auto steps = steps_;
  steps.insert(steps.end(), next.steps_.begin(), next.steps_.end());
  return LinearMap(m_, field_, std::move(steps));
}

int LinearMap::domain_part() const { return steps_.front().from; }
int LinearMap::codomain_part() const { return steps_.back().to; }

std::string LinearMap::describe() const {
  std::ostringstream out;
  for (auto it = steps_.rbegin(); it != steps_.rend(); ++it) {
    if (it != steps_.rbegin()) out << " o ";
    switch (it->kind) {
      case Kind::kIntersection:
        out << "tau^" << it->i << "_{" << it->from << "," << it->to << "}";
        break;
      case Kind::kInclusion:
      case Kind::kContainment:
        out << "psi_{" << it->from << "," << it->to << "}";
        break;
    }
  }
  out << " (m=" << m_ << ", char " << field_.characteristic() << ")";
  return out.str();
}

ModuleVector LinearMap::step_column(const Step& step, const KSubset& t) const {
  switch (step.kind) {
    case Kind::kIntersection:
      return intersection_column({m_, step.to, step.from, step.i}, t, field_);
    case Kind::kInclusion:
      return inclusion_column(step.from, step.to, t, m_, field_);
    case Kind::kContainment:
      return containment_column(step.from, step.to, t, m_, field_);
  }
  throw InternalError("unknown map step");
}

ModuleVector LinearMap::apply_step(const Step& step, const ModuleVector& v) const {
  ModuleVector out(step.to, m_, field_);
  for (std::size_t idx = 0; idx < v.size(); ++idx) {
    if (v[idx] == 0) continue;
    out.add_scaled(step_column(step, subset_unrank(idx, step.from, m_)), v[idx]);
  }
  return out;
}

ModuleVector LinearMap::column(const KSubset& t) const {
  ModuleVector v = step_column(steps_.front(), t);
  for (std::size_t s = 1; s < steps_.size(); ++s) v = apply_step(steps_[s], v);
  return v;
}

ModuleVector LinearMap::apply(const ModuleVector& v) const {
  if (v.m() != m_ || v.part() != domain_part()) throw StructuralError("vector is not in the map's domain");
  if (v.field() != field_) throw StructuralError("vector and map are over different fields");
  ModuleVector out = v;
  for (const auto& step : steps_) out = apply_step(step, out);
  return out;
}

ColumnSource LinearMap::columns() const {
  return [map = *this](const ColumnVisitor& visit) {
    for_each_subset(map.domain_part(), map.m(), [&](std::span<const int> t) {
      return visit(map.column(KSubset(std::vector<int>(t.begin(), t.end()), map.m())));
    });
  };
}

TripletMatrix LinearMap::materialize() const {
  TripletMatrix out;
  out.rows = binomial_u64(m_, codomain_part());
  out.cols = binomial_u64(m_, domain_part());
  out.modulus = field_.characteristic();
  std::size_t col = 0;
  columns()([&](const ModuleVector& v) {
    for (std::size_t row = 0; row < v.size(); ++row) {
      if (v[row] != 0) out.entries.push_back({row, col, v[row]});
    }
    ++col;
    return true;
  });
  return out;
}

}  // namespace wrank
