#ifndef SIMONLAB_COUNTING_HPP
#define SIMONLAB_COUNTING_HPP

#include <gmpxx.h>

#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "simonlab/field.hpp"
#include "simonlab/linalg.hpp"

namespace simonlab {

inline constexpr std::uint64_t kDefaultEnumerationCap = std::uint64_t{1} << 24;

/// Number of ordered h-tuples of linearly independent vectors in F_p^n:
/// prod_{i<h} (p^n - p^i).
mpz_class alpha(std::uint32_t p, int n, int h);

/// Gaussian binomial: the number of h-dimensional subspaces of F_p^n.
mpz_class beta(std::uint32_t p, int n, int h);

/// |F_D| for D = p^h: linear maps on F_p^n whose kernel has dimension h.
mpz_class count_fd(std::uint32_t p, int n, int h);

/// p^(n^2), checked against `cap`. Throws CapExceeded naming the cap.
std::uint64_t matrix_space_size(const FieldSpec& field, std::uint64_t cap = kDefaultEnumerationCap);

/// Every n x n matrix over F_p, addressable by index so that callers can
/// split the range across workers.
class MatrixSpace {
 public:
  explicit MatrixSpace(FieldSpec field, std::uint64_t cap = kDefaultEnumerationCap);

  const FieldSpec& field() const { return field_; }
  std::uint64_t size() const { return size_; }
  FpMatrix operator[](std::uint64_t index) const { return FpMatrix::from_index(field_, index); }

  void for_each(const std::function<void(const FpMatrix&)>& fn) const;

 private:
  FieldSpec field_;
  std::uint64_t size_;
};

/// All h-dimensional subspaces, generated directly as RREF matrices (choice of
/// pivot columns, then free entries). Each subspace appears exactly once.
std::vector<Subspace> enumerate_subspaces(const FieldSpec& field, int h,
                                          std::uint64_t cap = kDefaultEnumerationCap);

/// Every matrix of F_p^{n x n} with its kernel dimension, computed once and
/// shared by the brute-force probability routines.
class MatrixCensus {
 public:
  explicit MatrixCensus(FieldSpec field, std::uint64_t cap = kDefaultEnumerationCap);

  const FieldSpec& field() const { return field_; }
  std::size_t size() const { return matrices_.size(); }
  const FpMatrix& matrix(std::size_t i) const { return matrices_[i]; }
  int kernel_dim(std::size_t i) const { return kernel_dims_[i]; }
  const Subspace& kernel(std::size_t i) const { return kernels_[i]; }

  /// Number of enumerated matrices with kernel dimension h.
  std::uint64_t count(int h) const { return counts_.at(static_cast<std::size_t>(h)); }

  /// Index of f_i(x) for x given by its index. Served from a lookup table
  /// when #matrices * p^n stays below kImageTableLimit.
  std::uint64_t image(std::size_t i, std::uint64_t x_index) const;

  static constexpr std::uint64_t kImageTableLimit = std::uint64_t{1} << 26;

 private:
  FieldSpec field_;
  std::vector<FpMatrix> matrices_;
  std::vector<Subspace> kernels_;
  std::vector<int> kernel_dims_;
  std::vector<std::uint64_t> counts_;
  std::uint64_t space_size_;
  std::vector<std::uint32_t> images_;
};

/// Uniform ordered tuple of `count` independent vectors (rejection sampling).
std::vector<FpVector> sample_independent(const FieldSpec& field, int count, std::mt19937_64& rng);

/// Uniform member of F_D, D = p^h: uniform kernel, then uniform independent
/// images for the pivot-order complement of that kernel.
FpMatrix sample_fd(const FieldSpec& field, int h, std::mt19937_64& rng);
FpMatrix sample_fd(const FieldSpec& field, int h, std::uint64_t seed);

}  // namespace simonlab

#endif  // SIMONLAB_COUNTING_HPP
