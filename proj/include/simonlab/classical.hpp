#ifndef SIMONLAB_CLASSICAL_HPP
#define SIMONLAB_CLASSICAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <functional>
#include <optional>
#include <string>

#include "simonlab/instances.hpp"
#include "simonlab/linalg.hpp"

namespace simonlab {

using LinearOracle = std::function<FpVector(const FpVector&)>;

struct BasisSolveResult {
  PromiseLabel label;
  int queries_used;
  FpMatrix reconstructed;
};

/// Queries e_1..e_n, rebuilds the matrix column by column and labels it by
/// its kernel dimension. Always exactly n queries.
BasisSolveResult basis_solve(const FieldSpec& field, const LinearOracle& oracle);

struct CollisionResult {
  bool found = false;
  std::uint32_t x = 0;
  std::uint32_t x_prime = 0;
  std::uint64_t queries_used = 0;
  std::uint64_t budget = 0;
  std::optional<std::string> warning;
};

/// Queries distinct uniformly random points (without replacement) until two
/// share an image or the budget runs out. Budgets above 2^n are clamped.
CollisionResult collision_search(const GeneralInstance& g, std::uint64_t budget, std::uint64_t seed);

/// Exact probability that `budget` distinct uniform queries to a 2-to-1
/// function on n bits hit both points of some coset.
mpq_class collision_probability(int n, std::uint64_t budget);

}  // namespace simonlab

#endif  // SIMONLAB_CLASSICAL_HPP
