#ifndef SIMONLAB_INSTANCES_HPP
#define SIMONLAB_INSTANCES_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "simonlab/field.hpp"
#include "simonlab/linalg.hpp"

namespace simonlab {

/// Promise tag of a linear instance. UNRESTRICTED covers kernels of
/// dimension >= 2, which lie outside the decision promise but are still
/// members of some F_D.
enum class PromiseLabel { kOneToOne, kKernelP, kUnrestricted };

std::string_view to_string(PromiseLabel label);
PromiseLabel label_for_kernel_dim(int kernel_dim);

struct LinearInstance {
  FpMatrix matrix;
  Subspace kernel;
  int kernel_dim;
  PromiseLabel label;

  const FieldSpec& field() const { return matrix.field(); }
};

LinearInstance make_linear(const FpMatrix& matrix);

/// A partial function s: dom(s) -> F_p^n, kept as (x, y) pairs in insertion
/// order with pairwise distinct x.
class PartialFn {
 public:
  using Pair = std::pair<FpVector, FpVector>;

  explicit PartialFn(FieldSpec field) : field_(field) {}
  PartialFn(FieldSpec field, std::vector<Pair> pairs);

  const FieldSpec& field() const { return field_; }
  const std::vector<Pair>& pairs() const { return pairs_; }
  std::size_t domain_size() const { return pairs_.size(); }
  bool empty() const { return pairs_.empty(); }

  /// Adds x -> y. Throws PreconditionError if x is already in the domain.
  void insert(const FpVector& x, const FpVector& y);
  std::optional<FpVector> at(const FpVector& x) const;

  /// span(dom(s)).
  Subspace domain_span() const;

  /// True when f(x) = s(x) on the whole domain.
  bool extended_by(const FpMatrix& f) const;

  /// Equality as sets of pairs, independent of insertion order.
  friend bool operator==(const PartialFn& a, const PartialFn& b);

 private:
  FieldSpec field_;
  std::vector<Pair> pairs_;
};

/// The unique linear extension of a consistent partial function to
/// K = span(dom s), expressed on K's canonical basis.
struct LinearExtension {
  Subspace domain_span;       ///< K
  FpRows values;              ///< row i = s(K.basis_vector(i))
  Subspace kernel;            ///< Z = ker of the extension, inside K
};

/// std::nullopt when no linear map agrees with every pair.
std::optional<LinearExtension> linear_consistency(const PartialFn& s);

/// Calls `fn` for every partial function with |dom(s)| <= max_domain. Domains
/// are visited as sets (increasing point index), values in every combination.
void for_each_partial_function(const FieldSpec& field, int max_domain,
                               const std::function<void(const PartialFn&)>& fn);

/// The restriction of f to the distinct points of `queries` (first occurrence order).
PartialFn restrict_to(const LinearInstance& f, const std::vector<FpVector>& queries);

/// A general function {0,1}^n -> {0,1}^n as a truth table of n-bit words.
/// With no shift it is a bijection; with shift s != 0 it satisfies
/// f(x) = f(x ^ s) and is exactly 2-to-1.
struct GeneralInstance {
  int n;
  std::vector<std::uint32_t> table;
  std::optional<std::uint32_t> hidden_shift;

  std::uint32_t operator()(std::uint32_t x) const { return table[x]; }
};

inline constexpr int kMaxGeneralBits = 12;

GeneralInstance make_general(int n, std::optional<std::uint32_t> hidden_shift, std::uint64_t seed);

/// Structural check of the GeneralInstance invariants.
bool is_valid(const GeneralInstance& g);

}  // namespace simonlab

#endif  // SIMONLAB_INSTANCES_HPP
