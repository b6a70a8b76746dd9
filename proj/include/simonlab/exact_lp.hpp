#ifndef SIMONLAB_EXACT_LP_HPP
#define SIMONLAB_EXACT_LP_HPP

#include <gmpxx.h>

#include <string>
#include <vector>

namespace simonlab {

/// The system lhs[i] . x <= rhs[i] over free real variables x.
struct InequalitySystem {
  int variables = 0;
  std::vector<std::vector<mpq_class>> lhs;
  std::vector<mpq_class> rhs;
  std::vector<std::string> names;

  void add(std::vector<mpq_class> row, mpq_class bound, std::string name);
  std::size_t size() const { return rhs.size(); }
};

/// Either a point satisfying every inequality, or Farkas multipliers y >= 0
/// with y^T lhs = 0 and y^T rhs < 0.
struct FeasibilityOutcome {
  bool feasible = false;
  std::vector<mpq_class> point;
  std::vector<mpq_class> farkas;
};

/// Phase-one simplex in exact rational arithmetic with Bland's rule.
FeasibilityOutcome solve_feasibility(const InequalitySystem& system);

bool satisfies(const InequalitySystem& system, const std::vector<mpq_class>& point);

/// Exact check that `y` proves infeasibility: y >= 0, sum y_i lhs_i = 0 and
/// sum y_i rhs_i < 0 (i.e. the combination reads 0 <= negative).
bool is_farkas_certificate(const InequalitySystem& system, const std::vector<mpq_class>& y);

}  // namespace simonlab

#endif  // SIMONLAB_EXACT_LP_HPP
