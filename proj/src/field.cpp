#include "simonlab/field.hpp"

#include <string>

#include "simonlab/error.hpp"

namespace simonlab {

bool is_prime(std::uint64_t value) {
  if (value < 2) return false;
  if (value < 4) return true;
  if (value % 2 == 0) return false;
  for (std::uint64_t d = 3; d * d <= value; d += 2) {
    if (value % d == 0) return false;
  }
  return true;
}

std::optional<std::uint64_t> checked_pow(std::uint64_t base, std::uint64_t exponent) {
  std::uint64_t result = 1;
  for (std::uint64_t i = 0; i < exponent; ++i) {
    if (base != 0 && result > UINT64_MAX / base) return std::nullopt;
    result *= base;
  }
  return result;
}

FieldSpec::FieldSpec(std::uint32_t p, int n) : p_(p), n_(n) {
  if (p > kMaxModulus || !is_prime(p)) {
    throw DomainError("field modulus " + std::to_string(p) + " is not a prime below 2^31");
  }
  if (n < 1) {
    throw DomainError("ambient dimension must be >= 1, got " + std::to_string(n));
  }
}

Residue FieldSpec::inv(Residue a) const {
  a = reduce(a);
  if (a == 0) throw DomainError("zero has no multiplicative inverse");
  // Extended Euclid on (a, p).
  Residue old_r = a, r = p_;
  Residue old_s = 1, s = 0;
  while (r != 0) {
    Residue q = old_r / r;
    Residue tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
  }
  return reduce(old_s);
}

std::uint64_t FieldSpec::space_size() const {
  auto size = checked_pow(p_, static_cast<std::uint64_t>(n_));
  if (!size) throw DomainError("p^n does not fit in 64 bits");
  return *size;
}

std::uint64_t FieldSpec::index_of(const FpVector& v) const {
  if (v.size() != n_) throw DimensionMismatch("vector length does not match n");
  std::uint64_t index = 0;
  for (int i = n_ - 1; i >= 0; --i) {
    index = index * p_ + static_cast<std::uint64_t>(reduce(v[i]));
  }
  return index;
}

FpVector FieldSpec::vector_at(std::uint64_t index) const {
  FpVector v(n_);
  for (int i = 0; i < n_; ++i) {
    v[i] = static_cast<Residue>(index % p_);
    index /= p_;
  }
  return v;
}

FpVector FieldSpec::unit(int i) const {
  FpVector v = zero();
  v[i] = 1 % p_;
  return v;
}

FpVector FieldSpec::normalize(const FpVector& v) const {
  if (v.size() != n_) {
    throw DimensionMismatch("vector of length " + std::to_string(v.size()) +
                            " in F_p^" + std::to_string(n_));
  }
  return v.unaryExpr([this](Residue x) { return reduce(x); });
}

Residue FieldSpec::dot(const FpVector& x, const FpVector& y) const {
  Residue acc = 0;
  for (int i = 0; i < n_; ++i) acc = add(acc, mul(x[i], y[i]));
  return acc;
}

void require_same_field(const FieldSpec& a, const FieldSpec& b, const char* where) {
  if (a != b) {
    throw DimensionMismatch(std::string(where) + ": operands over F_" + std::to_string(a.p()) + "^" +
                            std::to_string(a.n()) + " and F_" + std::to_string(b.p()) + "^" +
                            std::to_string(b.n()));
  }
}

}  // namespace simonlab
