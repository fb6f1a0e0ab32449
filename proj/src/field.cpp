#include "wrank/field.hpp"

#include <algorithm>
#include <stdexcept>

#include "wrank/combinatorics.hpp"
#include "wrank/errors.hpp"

namespace wrank {
namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t n) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % n);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t n) {
  std::uint64_t r = 1 % n;
  a %= n;
  while (e) {
    if (e & 1) r = mulmod(r, a, n);
    a = mulmod(a, a, n);
    e >>= 1;
  }
  return r;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("integer coefficient overflow");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("integer coefficient overflow");
  return r;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t small : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % small == 0) return n == small;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // These bases are a deterministic witness set for all 64-bit n.
  for (std::uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

FieldSpec FieldSpec::prime(std::uint64_t p) {
  if (p >= (std::uint64_t{1} << 31) || !is_prime(p)) {
    throw ParameterError("characteristic " + std::to_string(p) + " is not a prime below 2^31");
  }
  return FieldSpec(static_cast<std::uint32_t>(p));
}

std::int64_t FieldSpec::reduce(std::int64_t x) const {
  if (p_ == 0) return x;
  std::int64_t r = x % static_cast<std::int64_t>(p_);
  return r < 0 ? r + p_ : r;
}

std::int64_t FieldSpec::add(std::int64_t a, std::int64_t b) const {
  if (p_ == 0) return checked_add(a, b);
  std::int64_t r = a + b;
  return r >= static_cast<std::int64_t>(p_) ? r - p_ : r;
}

std::int64_t FieldSpec::mul(std::int64_t a, std::int64_t b) const {
  if (p_ == 0) return checked_mul(a, b);
  return static_cast<std::int64_t>(static_cast<std::uint64_t>(a) * static_cast<std::uint64_t>(b) % p_);
}

std::int64_t FieldSpec::inverse(std::int64_t a) const {
  if (p_ == 0) throw ParameterError("inverse requires a prime field");
  if (reduce(a) == 0) throw std::domain_error("inverse of zero");
  return static_cast<std::int64_t>(powmod(static_cast<std::uint64_t>(reduce(a)), p_ - 2, p_));
}

ModuleVector::ModuleVector(int j, int m, FieldSpec field)
    : j_(j), m_(m), field_(field), coeffs_(binomial_u64(m, j), 0) {
  if (j < 0 || m < 0 || j > m) throw ParameterError("module vector needs 0 <= j <= m");
}

ModuleVector::ModuleVector(int j, int m, FieldSpec field, std::vector<std::int64_t> coeffs)
    : j_(j), m_(m), field_(field), coeffs_(std::move(coeffs)) {
  if (j < 0 || m < 0 || j > m) throw ParameterError("module vector needs 0 <= j <= m");
  if (coeffs_.size() != binomial_u64(m, j)) throw StructuralError("coefficient count must equal C(m, j)");
  for (auto& c : coeffs_) c = field_.reduce(c);
}

ModuleVector ModuleVector::basis(int j, int m, FieldSpec field, std::uint64_t index) {
  ModuleVector v(j, m, field);
  if (index >= v.size()) throw std::out_of_range("basis index out of range");
  v.coeffs_[index] = 1;
  return v;
}

ModuleVector ModuleVector::ones(int j, int m, FieldSpec field) {
  ModuleVector v(j, m, field);
  std::fill(v.coeffs_.begin(), v.coeffs_.end(), 1);
  return v;
}

void ModuleVector::add_at(std::size_t idx, std::int64_t c) {
  coeffs_.at(idx) = field_.add(coeffs_[idx], field_.reduce(c));
}

void ModuleVector::require_same_shape(const ModuleVector& other) const {
  if (j_ != other.j_ || m_ != other.m_) throw StructuralError("module vectors live in different modules");
  if (field_ != other.field_) throw StructuralError("module vectors are over different fields");
}

void ModuleVector::add_scaled(const ModuleVector& other, std::int64_t c) {
  require_same_shape(other);
  c = field_.reduce(c);
  if (c == 0) return;
  for (std::size_t idx = 0; idx < coeffs_.size(); ++idx) {
    if (other.coeffs_[idx] != 0) coeffs_[idx] = field_.add(coeffs_[idx], field_.mul(c, other.coeffs_[idx]));
  }
}

ModuleVector ModuleVector::scaled(std::int64_t c) const {
  ModuleVector out(j_, m_, field_);
  out.add_scaled(*this, c);
  return out;
}

bool ModuleVector::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](std::int64_t c) { return c == 0; });
}

std::size_t ModuleVector::nonzero_count() const {
  return static_cast<std::size_t>(std::count_if(coeffs_.begin(), coeffs_.end(), [](std::int64_t c) { return c != 0; }));
}

ModuleVector ModuleVector::reduced_to(FieldSpec target) const {
  if (target == field_) return *this;
  if (!field_.is_rational()) throw StructuralError("only integer vectors can be reduced to another field");
  return ModuleVector(j_, m_, target, coeffs_);
}

}  // namespace wrank
