#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace wrank {

/// Deterministic primality test for 64-bit inputs.
bool is_prime(std::uint64_t n);

/// Coefficient field: the rationals (characteristic 0) or GF(p) with p < 2^31.
class FieldSpec {
public:
  static FieldSpec rational() { return FieldSpec(); }
  /// Throws ParameterError unless p is a prime below 2^31.
  static FieldSpec prime(std::uint64_t p);
  /// 0 selects the rationals, anything else must be a prime.
  static FieldSpec from_characteristic(std::uint64_t c) { return c == 0 ? rational() : prime(c); }

  [[nodiscard]] std::uint32_t characteristic() const { return p_; }
  [[nodiscard]] bool is_rational() const { return p_ == 0; }

  /// Canonical residue in [0, p); identity in characteristic 0.
  [[nodiscard]] std::int64_t reduce(std::int64_t x) const;
  [[nodiscard]] std::int64_t add(std::int64_t a, std::int64_t b) const;
  [[nodiscard]] std::int64_t mul(std::int64_t a, std::int64_t b) const;
  /// Multiplicative inverse of a nonzero residue (prime fields only).
  [[nodiscard]] std::int64_t inverse(std::int64_t a) const;

  [[nodiscard]] std::string name() const { return std::to_string(p_); }

  friend bool operator==(FieldSpec, FieldSpec) = default;

private:
  FieldSpec() = default;
  explicit FieldSpec(std::uint32_t p) : p_(p) {}
  std::uint32_t p_ = 0;
};

/// An element of the tabloid module M^(m-j, j): one coefficient per
/// j-subset, in colex order. In characteristic 0 the coefficients are exact
/// integers (overflow throws); otherwise they are reduced residues.
class ModuleVector {
public:
  ModuleVector(int j, int m, FieldSpec field);
  ModuleVector(int j, int m, FieldSpec field, std::vector<std::int64_t> coeffs);

  /// Standard basis vector for the j-subset with colex rank `index`.
  static ModuleVector basis(int j, int m, FieldSpec field, std::uint64_t index);
  /// The all-one vector (the sum of all tabloids).
  static ModuleVector ones(int j, int m, FieldSpec field);

  [[nodiscard]] int part() const { return j_; }
  [[nodiscard]] int m() const { return m_; }
  [[nodiscard]] FieldSpec field() const { return field_; }
  [[nodiscard]] std::size_t size() const { return coeffs_.size(); }
  [[nodiscard]] const std::vector<std::int64_t>& coeffs() const { return coeffs_; }
  [[nodiscard]] std::int64_t operator[](std::size_t idx) const { return coeffs_[idx]; }

  /// coeffs[idx] += c.
  void add_at(std::size_t idx, std::int64_t c);
  /// *this += c * other. Throws StructuralError on shape or field mismatch.
  void add_scaled(const ModuleVector& other, std::int64_t c);
  [[nodiscard]] ModuleVector scaled(std::int64_t c) const;

  [[nodiscard]] bool is_zero() const;
  [[nodiscard]] std::size_t nonzero_count() const;

  /// Same vector with coefficients reduced into another field.
  [[nodiscard]] ModuleVector reduced_to(FieldSpec target) const;

  void require_same_shape(const ModuleVector& other) const;

  friend bool operator==(const ModuleVector&, const ModuleVector&) = default;

private:
  int j_;
  int m_;
  FieldSpec field_;
  std::vector<std::int64_t> coeffs_;
};

}  // namespace wrank
