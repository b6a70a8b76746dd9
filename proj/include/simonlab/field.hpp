#ifndef SIMONLAB_FIELD_HPP
#define SIMONLAB_FIELD_HPP

#include <Eigen/Core>

#include <cstdint>
#include <optional>

namespace simonlab {

/// Field elements are stored as machine integers in [0, p) with p < 2^31, so
/// a product of two residues always fits in 63 bits.
using Residue = std::int64_t;

/// A vector in F_p^n (one residue per coordinate).
using FpVector = Eigen::Matrix<Residue, Eigen::Dynamic, 1>;

/// A stack of row vectors over F_p. Used for generator lists, echelon forms
/// and matrices alike.
using FpRows = Eigen::Matrix<Residue, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

/// Deterministic primality test (trial division, fine for p < 2^31).
bool is_prime(std::uint64_t value);

/// Checked integer power; std::nullopt when the result does not fit in 64 bits.
std::optional<std::uint64_t> checked_pow(std::uint64_t base, std::uint64_t exponent);

/// The prime field F_p together with the ambient dimension n of F_p^n.
class FieldSpec {
 public:
  static constexpr std::uint32_t kMaxModulus = 0x7fffffffu;

  FieldSpec(std::uint32_t p, int n);

  std::uint32_t p() const { return p_; }
  int n() const { return n_; }

  Residue reduce(Residue value) const {
    Residue r = value % static_cast<Residue>(p_);
    return r < 0 ? r + p_ : r;
  }
  Residue add(Residue a, Residue b) const { return (a + b) % p_; }
  Residue sub(Residue a, Residue b) const { return (a + p_ - b) % p_; }
  Residue neg(Residue a) const { return a == 0 ? 0 : p_ - a; }
  Residue mul(Residue a, Residue b) const { return (a * b) % p_; }
  /// Multiplicative inverse; `a` must be nonzero mod p.
  Residue inv(Residue a) const;

  /// |F_p^n| = p^n. Throws DomainError when it overflows 64 bits.
  std::uint64_t space_size() const;

  /// Base-p index of a vector, coordinate 0 being the least significant digit.
  std::uint64_t index_of(const FpVector& v) const;
  FpVector vector_at(std::uint64_t index) const;

  FpVector zero() const { return FpVector::Zero(n_); }
  FpVector unit(int i) const;

  /// Reduces every coordinate into [0, p) and checks the length.
  FpVector normalize(const FpVector& v) const;

  /// Standard bilinear form x.y over F_p.
  Residue dot(const FpVector& x, const FpVector& y) const;

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

 private:
  std::uint32_t p_;
  int n_;
};

/// Throws DimensionMismatch unless both fields agree on p and n.
void require_same_field(const FieldSpec& a, const FieldSpec& b, const char* where);

}  // namespace simonlab

#endif  // SIMONLAB_FIELD_HPP
