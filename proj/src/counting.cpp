#include "simonlab/counting.hpp"

#include <string>

#include "simonlab/error.hpp"

namespace simonlab {

namespace {

mpz_class power(std::uint32_t p, int e) {
  mpz_class out;
  mpz_ui_pow_ui(out.get_mpz_t(), p, static_cast<unsigned long>(e));
  return out;
}

void require_dim_range(int n, int h, const char* what) {
  if (h < 0 || h > n) {
    throw DomainError(std::string(what) + ": need 0 <= h <= n, got h=" + std::to_string(h) +
                      ", n=" + std::to_string(n));
  }
}

}  // namespace

mpz_class alpha(std::uint32_t p, int n, int h) {
  require_dim_range(n, h, "alpha");
  const mpz_class pn = power(p, n);
  mpz_class out = 1;
  for (int i = 0; i < h; ++i) out *= pn - power(p, i);
  return out;
}

mpz_class beta(std::uint32_t p, int n, int h) {
  require_dim_range(n, h, "beta");
  const mpz_class num = alpha(p, n, h);
  const mpz_class den = alpha(p, h, h);
  if (num % den != 0) throw Error("beta: inexact Gaussian binomial division");
  return num / den;
}

mpz_class count_fd(std::uint32_t p, int n, int h) {
  require_dim_range(n, h, "count_FD");
  return beta(p, n, h) * alpha(p, n, n - h);
}

std::uint64_t matrix_space_size(const FieldSpec& field, std::uint64_t cap) {
  const auto n2 = static_cast<std::uint64_t>(field.n()) * static_cast<std::uint64_t>(field.n());
  auto size = checked_pow(field.p(), n2);
  if (!size || *size > cap) {
    throw CapExceeded("matrix enumeration", cap, size.value_or(UINT64_MAX));
  }
  return *size;
}

MatrixSpace::MatrixSpace(FieldSpec field, std::uint64_t cap)
    : field_(field), size_(matrix_space_size(field, cap)) {}

void MatrixSpace::for_each(const std::function<void(const FpMatrix&)>& fn) const {
  for (std::uint64_t i = 0; i < size_; ++i) fn((*this)[i]);
}

std::vector<Subspace> enumerate_subspaces(const FieldSpec& field, int h, std::uint64_t cap) {
  const int n = field.n();
  require_dim_range(n, h, "enumerate_subspaces");
  matrix_space_size(field, cap);

  std::vector<Subspace> out;
  std::vector<int> pivots(h);
  for (int i = 0; i < h; ++i) pivots[i] = i;

  while (true) {
    // Free slots: entries right of a row's pivot that are not pivot columns.
    std::vector<bool> is_pivot(n, false);
    for (int c : pivots) is_pivot[c] = true;
    std::vector<std::pair<int, int>> free_slots;
    for (int r = 0; r < h; ++r) {
      for (int c = pivots[r] + 1; c < n; ++c) {
        if (!is_pivot[c]) free_slots.emplace_back(r, c);
      }
    }
    const std::uint64_t fills = *checked_pow(field.p(), free_slots.size());
    for (std::uint64_t fill = 0; fill < fills; ++fill) {
      FpRows rows = FpRows::Zero(h, n);
      for (int r = 0; r < h; ++r) rows(r, pivots[r]) = 1;
      std::uint64_t digits = fill;
      for (auto [r, c] : free_slots) {
        rows(r, c) = static_cast<Residue>(digits % field.p());
        digits /= field.p();
      }
      out.push_back(Subspace::span(field, rows));
    }

    // Next h-combination of {0..n-1} in lexicographic order.
    int i = h - 1;
    while (i >= 0 && pivots[i] == n - h + i) --i;
    if (i < 0) break;
    ++pivots[i];
    for (int j = i + 1; j < h; ++j) pivots[j] = pivots[j - 1] + 1;
  }
  return out;
}

MatrixCensus::MatrixCensus(FieldSpec field, std::uint64_t cap)
    : field_(field), counts_(static_cast<std::size_t>(field.n()) + 1, 0) {
  MatrixSpace space(field, cap);
  matrices_.reserve(space.size());
  kernels_.reserve(space.size());
  kernel_dims_.reserve(space.size());
  for (std::uint64_t i = 0; i < space.size(); ++i) {
    matrices_.push_back(space[i]);
    kernels_.push_back(simonlab::kernel(matrices_.back()));
    kernel_dims_.push_back(kernels_.back().dim());
    ++counts_[static_cast<std::size_t>(kernel_dims_.back())];
  }
  space_size_ = field.space_size();
  if (space.size() <= kImageTableLimit / space_size_) {
    images_.resize(space.size() * space_size_);
    for (std::size_t i = 0; i < matrices_.size(); ++i) {
      for (std::uint64_t x = 0; x < space_size_; ++x) {
        images_[i * space_size_ + x] =
            static_cast<std::uint32_t>(field.index_of(matrices_[i].apply(field.vector_at(x))));
      }
    }
  }
}

std::uint64_t MatrixCensus::image(std::size_t i, std::uint64_t x_index) const {
  if (!images_.empty()) return images_[i * space_size_ + x_index];
  return field_.index_of(matrices_[i].apply(field_.vector_at(x_index)));
}

std::vector<FpVector> sample_independent(const FieldSpec& field, int count, std::mt19937_64& rng) {
  std::uniform_int_distribution<Residue> digit(0, static_cast<Residue>(field.p()) - 1);
  std::vector<FpVector> chosen;
  Subspace spanned = Subspace::zero(field);
  while (static_cast<int>(chosen.size()) < count) {
    FpVector v(field.n());
    for (int i = 0; i < field.n(); ++i) v[i] = digit(rng);
    if (spanned.contains(v)) continue;
    chosen.push_back(v);
    spanned = Subspace::span(field, std::span<const FpVector>(chosen));
  }
  return chosen;
}

FpMatrix sample_fd(const FieldSpec& field, int h, std::mt19937_64& rng) {
  const int n = field.n();
  require_dim_range(n, h, "sample_FD");
  const Subspace ker = Subspace::span(field, sample_independent(field, h, rng));
  const Subspace comp = complement_in(ker, Subspace::full(field));
  const std::vector<FpVector> images = sample_independent(field, n - h, rng);

  // Columns of `basis` are the kernel basis followed by the complement basis;
  // the corresponding columns of `targets` are 0 and the sampled images.
  FpRows basis(n, n);
  FpRows targets = FpRows::Zero(n, n);
  for (int j = 0; j < h; ++j) basis.col(j) = ker.basis_vector(j);
  for (int j = 0; j < n - h; ++j) {
    basis.col(h + j) = comp.basis_vector(j);
    targets.col(h + j) = images[static_cast<std::size_t>(j)];
  }
  const auto basis_inv = FpMatrix(field, basis).inverse();
  if (!basis_inv) throw Error("sample_FD: kernel and complement do not form a basis");
  return FpMatrix(field, targets) * *basis_inv;
}

FpMatrix sample_fd(const FieldSpec& field, int h, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return sample_fd(field, h, rng);
}

}  // namespace simonlab
