#ifndef SIMONLAB_POLYNOMIAL_HPP
#define SIMONLAB_POLYNOMIAL_HPP

#include <gmpxx.h>

#include <cstddef>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace simonlab {

/// Univariate polynomial with coefficients lowest degree first. Trailing zero
/// coefficients are stripped, so coefficients().size() - 1 is the degree.
/// Scalar is mpq_class for exact work and double for fitted tables.
template <typename Scalar>
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Scalar> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

  static Polynomial constant(const Scalar& c) { return Polynomial(std::vector<Scalar>{c}); }
  /// x - root
  static Polynomial linear_root(const Scalar& root) {
    return Polynomial(std::vector<Scalar>{Scalar(-root), Scalar(1)});
  }

  const std::vector<Scalar>& coefficients() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

  Scalar operator()(const Scalar& x) const {
    Scalar acc(0);
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
      acc = Scalar(acc * x);
      acc = Scalar(acc + coeffs_[i]);
    }
    return acc;
  }

  Polynomial& operator+=(const Polynomial& other) {
    if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size(), Scalar(0));
    for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] = Scalar(coeffs_[i] + other.coeffs_[i]);
    trim();
    return *this;
  }

  Polynomial& operator*=(const Scalar& s) {
    for (Scalar& c : coeffs_) c = Scalar(c * s);
    trim();
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator*(Polynomial a, const Scalar& s) { return a *= s; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return Polynomial();
    std::vector<Scalar> out(a.coeffs_.size() + b.coeffs_.size() - 1, Scalar(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
        out[i + j] = Scalar(out[i + j] + a.coeffs_[i] * b.coeffs_[j]);
      }
    }
    return Polynomial(std::move(out));
  }
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == Scalar(0)) coeffs_.pop_back();
  }

  std::vector<Scalar> coeffs_;
};

using RationalPoly = Polynomial<mpq_class>;

/// Newton divided-difference interpolation through (xs[i], ys[i]), expanded
/// to the monomial basis. Nodes must be distinct.
template <typename Scalar>
Polynomial<Scalar> interpolate(std::span<const Scalar> xs, std::span<const Scalar> ys) {
  if (xs.size() != ys.size()) throw std::invalid_argument("interpolate: node/value count mismatch");
  const std::size_t count = xs.size();
  std::vector<Scalar> table(ys.begin(), ys.end());
  for (std::size_t level = 1; level < count; ++level) {
    for (std::size_t i = count - 1; i >= level; --i) {
      const Scalar gap = Scalar(xs[i] - xs[i - level]);
      if (gap == Scalar(0)) throw std::invalid_argument("interpolate: duplicate node");
      table[i] = Scalar((table[i] - table[i - 1]) / gap);
    }
  }
  // Horner on the Newton form.
  Polynomial<Scalar> out;
  for (std::size_t i = count; i-- > 0;) {
    out = out * Polynomial<Scalar>::linear_root(xs[i]) + Polynomial<Scalar>::constant(table[i]);
  }
  return out;
}

}  // namespace simonlab

#endif  // SIMONLAB_POLYNOMIAL_HPP
