#include "simonlab/linalg.hpp"

#include <string>
#include <utility>

#include "simonlab/error.hpp"

namespace simonlab {

RowEchelon rref(const FpRows& rows, const FieldSpec& field) {
  FpRows m = rows;
  const int nrows = static_cast<int>(m.rows());
  const int ncols = static_cast<int>(m.cols());
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < ncols && r < nrows; ++c) {
    int sel = -1;
    for (int i = r; i < nrows; ++i) {
      if (m(i, c) != 0) {
        sel = i;
        break;
      }
    }
    if (sel < 0) continue;
    if (sel != r) m.row(sel).swap(m.row(r));
    const Residue scale = field.inv(m(r, c));
    for (int j = c; j < ncols; ++j) m(r, j) = field.mul(m(r, j), scale);
    for (int i = 0; i < nrows; ++i) {
      if (i == r || m(i, c) == 0) continue;
      const Residue factor = m(i, c);
      for (int j = c; j < ncols; ++j) {
        m(i, j) = field.sub(m(i, j), field.mul(factor, m(r, j)));
      }
    }
    pivots.push_back(c);
    ++r;
  }
  RowEchelon out;
  out.rows = m.topRows(r);
  out.pivots = std::move(pivots);
  out.rank = r;
  return out;
}

FpRows null_space(const FpRows& m, const FieldSpec& field) {
  const int ncols = static_cast<int>(m.cols());
  RowEchelon e = rref(m, field);
  std::vector<bool> is_pivot(ncols, false);
  for (int c : e.pivots) is_pivot[c] = true;

  FpRows basis(ncols - e.rank, ncols);
  int row = 0;
  for (int free = 0; free < ncols; ++free) {
    if (is_pivot[free]) continue;
    basis.row(row).setZero();
    basis(row, free) = 1;
    for (int r = 0; r < e.rank; ++r) {
      basis(row, e.pivots[r]) = field.neg(e.rows(r, free));
    }
    ++row;
  }
  return rref(basis, field).rows;
}

// ---------------------------------------------------------------------------
// FpMatrix

FpMatrix::FpMatrix(FieldSpec field, const FpRows& entries) : field_(field) {
  if (entries.rows() != field.n() || entries.cols() != field.n()) {
    throw DimensionMismatch("matrix is " + std::to_string(entries.rows()) + "x" +
                            std::to_string(entries.cols()) + ", expected " + std::to_string(field.n()) +
                            "x" + std::to_string(field.n()));
  }
  entries_ = entries.unaryExpr([&field](Residue x) { return field.reduce(x); });
}

FpMatrix FpMatrix::zero(const FieldSpec& field) {
  return FpMatrix(field, FpRows::Zero(field.n(), field.n()));
}

FpMatrix FpMatrix::identity(const FieldSpec& field) {
  return FpMatrix(field, FpRows::Identity(field.n(), field.n()));
}

FpMatrix FpMatrix::from_index(const FieldSpec& field, std::uint64_t index) {
  const int n = field.n();
  FpRows entries(n, n);
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) {
      entries(r, c) = static_cast<Residue>(index % field.p());
      index /= field.p();
    }
  }
  return FpMatrix(field, entries);
}

FpVector FpMatrix::apply(const FpVector& x) const {
  if (x.size() != field_.n()) throw DimensionMismatch("apply: vector length does not match n");
  const int n = field_.n();
  FpVector y(n);
  for (int r = 0; r < n; ++r) {
    Residue acc = 0;
    for (int c = 0; c < n; ++c) acc = field_.add(acc, field_.mul(entries_(r, c), x[c]));
    y[r] = acc;
  }
  return y;
}

FpMatrix FpMatrix::negated() const {
  const FieldSpec& f = field_;
  return FpMatrix(field_, entries_.unaryExpr([&f](Residue x) { return f.neg(x); }));
}

int FpMatrix::rank() const { return rref(entries_, field_).rank; }

std::optional<FpMatrix> FpMatrix::inverse() const {
  const int n = field_.n();
  FpRows augmented(n, 2 * n);
  augmented.leftCols(n) = entries_;
  augmented.rightCols(n) = FpRows::Identity(n, n);
  RowEchelon e = rref(augmented, field_);
  if (e.rank < n || e.pivots[n - 1] != n - 1) return std::nullopt;
  return FpMatrix(field_, e.rows.rightCols(n));
}

FpMatrix operator*(const FpMatrix& a, const FpMatrix& b) {
  require_same_field(a.field_, b.field_, "matrix product");
  const FieldSpec& f = a.field_;
  const int n = f.n();
  FpRows out(n, n);
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) {
      Residue acc = 0;
      for (int k = 0; k < n; ++k) acc = f.add(acc, f.mul(a.entries_(r, k), b.entries_(k, c)));
      out(r, c) = acc;
    }
  }
  return FpMatrix(f, out);
}

// ---------------------------------------------------------------------------
// Subspace

Subspace::Subspace(FieldSpec field, RowEchelon echelon)
    : field_(field), basis_(std::move(echelon.rows)), pivots_(std::move(echelon.pivots)) {}

Subspace Subspace::zero(const FieldSpec& field) {
  return Subspace(field, RowEchelon{FpRows(0, field.n()), {}, 0});
}

Subspace Subspace::full(const FieldSpec& field) {
  return span(field, FpRows(FpRows::Identity(field.n(), field.n())));
}

Subspace Subspace::span(const FieldSpec& field, const FpRows& generators) {
  if (generators.cols() != field.n()) {
    throw DimensionMismatch("generators have " + std::to_string(generators.cols()) +
                            " coordinates, expected " + std::to_string(field.n()));
  }
  FpRows reduced = generators.unaryExpr([&field](Residue x) { return field.reduce(x); });
  return Subspace(field, rref(reduced, field));
}

Subspace Subspace::span(const FieldSpec& field, std::span<const FpVector> generators) {
  FpRows rows(static_cast<Eigen::Index>(generators.size()), field.n());
  for (std::size_t i = 0; i < generators.size(); ++i) {
    rows.row(static_cast<Eigen::Index>(i)) = field.normalize(generators[i]).transpose();
  }
  return span(field, rows);
}

std::uint64_t Subspace::cardinality() const {
  auto size = checked_pow(field_.p(), static_cast<std::uint64_t>(dim()));
  if (!size) throw DomainError("subspace cardinality does not fit in 64 bits");
  return *size;
}

bool Subspace::contains(const FpVector& v) const {
  FpVector rest = field_.normalize(v);
  for (int r = 0; r < dim(); ++r) {
    const Residue coeff = rest[pivots_[r]];
    if (coeff == 0) continue;
    for (int c = 0; c < field_.n(); ++c) {
      rest[c] = field_.sub(rest[c], field_.mul(coeff, basis_(r, c)));
    }
  }
  return rest.isZero();
}

bool Subspace::contains(const Subspace& other) const {
  require_same_field(field_, other.field_, "contains_subspace");
  for (int r = 0; r < other.dim(); ++r) {
    if (!contains(other.basis_vector(r))) return false;
  }
  return true;
}

std::vector<FpVector> Subspace::elements() const {
  const std::uint64_t count = cardinality();
  std::vector<FpVector> out;
  out.reserve(count);
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    FpVector v = field_.zero();
    std::uint64_t digits = idx;
    for (int r = 0; r < dim(); ++r) {
      const Residue coeff = static_cast<Residue>(digits % field_.p());
      digits /= field_.p();
      if (coeff == 0) continue;
      for (int c = 0; c < field_.n(); ++c) {
        v[c] = field_.add(v[c], field_.mul(coeff, basis_(r, c)));
      }
    }
    out.push_back(std::move(v));
  }
  return out;
}

Subspace kernel(const FpMatrix& m) {
  return Subspace::span(m.field(), null_space(m.entries(), m.field()));
}

Subspace image(const FpMatrix& m) {
  return Subspace::span(m.field(), FpRows(m.entries().transpose()));
}

Subspace sum(const Subspace& a, const Subspace& b) {
  require_same_field(a.field(), b.field(), "sum");
  FpRows stacked(a.dim() + b.dim(), a.field().n());
  stacked << a.basis(), b.basis();
  return Subspace::span(a.field(), stacked);
}

Subspace annihilator(const Subspace& a) {
  return Subspace::span(a.field(), null_space(a.basis(), a.field()));
}

Subspace intersect(const Subspace& a, const Subspace& b) {
  require_same_field(a.field(), b.field(), "intersect");
  // The standard form is nondegenerate, so (A^perp + B^perp)^perp = A cap B.
  return annihilator(sum(annihilator(a), annihilator(b)));
}

Subspace complement_in(const Subspace& z, const Subspace& k) {
  require_same_field(z.field(), k.field(), "complement_in");
  if (!k.contains(z)) throw PreconditionError("complement_in: Z is not contained in K");
  const FieldSpec& field = z.field();
  Subspace collected = z;
  std::vector<FpVector> chosen;
  for (int r = 0; r < k.dim() && collected.dim() < k.dim(); ++r) {
    FpVector candidate = k.basis_vector(r);
    if (collected.contains(candidate)) continue;
    chosen.push_back(candidate);
    FpRows stacked(collected.dim() + 1, field.n());
    stacked << collected.basis(), candidate.transpose();
    collected = Subspace::span(field, stacked);
  }
  return Subspace::span(field, std::span<const FpVector>(chosen));
}

}  // namespace simonlab
