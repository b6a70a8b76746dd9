#ifndef SIMONLAB_LINALG_HPP
#define SIMONLAB_LINALG_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "simonlab/field.hpp"

namespace simonlab {

/// Reduced row echelon form of a row stack. Zero rows are dropped, so
/// `rows.rows() == rank` and `pivots[r]` is the pivot column of row r.
struct RowEchelon {
  FpRows rows;
  std::vector<int> pivots;
  int rank = 0;
};

/// Gauss-Jordan elimination over F_p. Entries must already be reduced mod p.
RowEchelon rref(const FpRows& rows, const FieldSpec& field);

/// Basis (as RREF rows) of {x : m x = 0} for an arbitrary r x c matrix.
FpRows null_space(const FpRows& m, const FieldSpec& field);

/// A linear map F_p^n -> F_p^n. Column j holds the image of the j-th standard
/// basis vector, so apply(x) = entries * x.
class FpMatrix {
 public:
  FpMatrix(FieldSpec field, const FpRows& entries);

  static FpMatrix zero(const FieldSpec& field);
  static FpMatrix identity(const FieldSpec& field);
  /// The matrix whose row-major entries are the base-p digits of `index`.
  static FpMatrix from_index(const FieldSpec& field, std::uint64_t index);

  const FieldSpec& field() const { return field_; }
  const FpRows& entries() const { return entries_; }
  Residue operator()(int row, int col) const { return entries_(row, col); }

  FpVector apply(const FpVector& x) const;
  FpMatrix negated() const;
  int rank() const;
  std::optional<FpMatrix> inverse() const;

  friend FpMatrix operator*(const FpMatrix& a, const FpMatrix& b);
  friend bool operator==(const FpMatrix& a, const FpMatrix& b) {
    return a.field_ == b.field_ && a.entries_ == b.entries_;
  }

 private:
  FieldSpec field_;
  FpRows entries_;
};

/// A subspace of F_p^n held in canonical form: the RREF basis of the subspace.
/// Equal subspaces have identical representations.
class Subspace {
 public:
  static Subspace zero(const FieldSpec& field);
  static Subspace full(const FieldSpec& field);
  static Subspace span(const FieldSpec& field, const FpRows& generators);
  static Subspace span(const FieldSpec& field, std::span<const FpVector> generators);

  const FieldSpec& field() const { return field_; }
  /// Basis rows in RREF, pivot columns strictly increasing.
  const FpRows& basis() const { return basis_; }
  const std::vector<int>& pivots() const { return pivots_; }
  int dim() const { return static_cast<int>(basis_.rows()); }
  FpVector basis_vector(int i) const { return basis_.row(i).transpose(); }

  /// p^dim; throws DomainError on 64-bit overflow.
  std::uint64_t cardinality() const;

  bool contains(const FpVector& v) const;
  bool contains(const Subspace& other) const;

  /// Every element, ordered by the base-p index of its basis coefficients.
  std::vector<FpVector> elements() const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.field_ == b.field_ && a.basis_ == b.basis_;
  }

 private:
  Subspace(FieldSpec field, RowEchelon echelon);

  FieldSpec field_;
  FpRows basis_;
  std::vector<int> pivots_;
};

Subspace kernel(const FpMatrix& m);
/// Image (column space) of a linear map.
Subspace image(const FpMatrix& m);

Subspace intersect(const Subspace& a, const Subspace& b);
Subspace sum(const Subspace& a, const Subspace& b);

/// Annihilator {y : y.x = 0 for all x in a} under the standard bilinear form.
Subspace annihilator(const Subspace& a);

/// A direct-sum complement Y of z inside k (Y + z = k, Y and z meet in 0).
/// Built by walking k's canonical basis in pivot order and keeping each vector
/// that is independent of what has been collected so far. Requires z within k.
Subspace complement_in(const Subspace& z, const Subspace& k);

}  // namespace simonlab

#endif  // SIMONLAB_LINALG_HPP
