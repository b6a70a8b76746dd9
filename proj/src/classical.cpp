#include "simonlab/classical.hpp"

#include <numeric>
#include <random>
#include <unordered_map>

#include "simonlab/error.hpp"

namespace simonlab {

BasisSolveResult basis_solve(const FieldSpec& field, const LinearOracle& oracle) {
  const int n = field.n();
  FpRows columns(n, n);
  int queries = 0;
  for (int j = 0; j < n; ++j) {
    columns.col(j) = field.normalize(oracle(field.unit(j)));
    ++queries;
  }
  FpMatrix m(field, columns);
  const int h = kernel(m).dim();
  return BasisSolveResult{label_for_kernel_dim(h), queries, std::move(m)};
}

CollisionResult collision_search(const GeneralInstance& g, std::uint64_t budget, std::uint64_t seed) {
  const std::uint32_t size = std::uint32_t{1} << g.n;
  CollisionResult result;
  if (budget > size) {
    result.warning = "budget " + std::to_string(budget) + " clamped to 2^n = " + std::to_string(size);
    budget = size;
  }
  result.budget = budget;

  // Partial Fisher-Yates: the first q entries are q distinct uniform points.
  std::vector<std::uint32_t> order(size);
  std::iota(order.begin(), order.end(), 0u);
  std::mt19937_64 rng(seed);
  std::unordered_map<std::uint32_t, std::uint32_t> seen;
  for (std::uint64_t q = 0; q < budget; ++q) {
    std::uniform_int_distribution<std::uint64_t> pick(q, size - 1);
    std::swap(order[q], order[pick(rng)]);
    const std::uint32_t x = order[q];
    ++result.queries_used;
    auto [it, inserted] = seen.emplace(g(x), x);
    if (!inserted) {
      result.found = true;
      result.x = it->second;
      result.x_prime = x;
      return result;
    }
  }
  return result;
}

mpq_class collision_probability(int n, std::uint64_t budget) {
  if (n < 1 || n > kMaxGeneralBits) throw DomainError("collision_probability: n out of range");
  const std::uint64_t size = std::uint64_t{1} << n;
  if (budget > size) budget = size;
  // After j collision-free queries, j of the size - j unqueried points are mates.
  mpq_class none = 1;
  for (std::uint64_t j = 0; j < budget; ++j) {
    none *= mpq_class(mpz_class(static_cast<unsigned long>(size - 2 * j)),
                      mpz_class(static_cast<unsigned long>(size - j)));
    none.canonicalize();
    if (none == 0) break;
  }
  return 1 - none;
}

}  // namespace simonlab
