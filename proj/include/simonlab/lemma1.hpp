#ifndef SIMONLAB_LEMMA1_HPP
#define SIMONLAB_LEMMA1_HPP

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "simonlab/exact_lp.hpp"
#include "simonlab/polynomial.hpp"

namespace simonlab {

/// Degree lower-bound hypothesis at D = p^0..p^n: Q(1) >= accept_lo,
/// Q(p) <= reject_hi, and 0 <= Q(p^k) <= 1 for every k.
struct Lemma1Instance {
  std::uint32_t p;
  int n;
  mpq_class accept_lo{2, 3};
  mpq_class reject_hi{1, 3};

  Lemma1Instance(std::uint32_t p, int n);
  Lemma1Instance(std::uint32_t p, int n, mpq_class accept_lo, mpq_class reject_hi);
};

struct ConstraintCheck {
  std::string name;
  mpz_class d;
  mpq_class value;
  bool pass;
};

/// One entry per constraint: "box k=0" .. "box k=n", then "accept_lo" and
/// "reject_hi" (n + 3 entries).
std::vector<ConstraintCheck> check_hypothesis(const RationalPoly& q, const Lemma1Instance& inst);
bool all_pass(const std::vector<ConstraintCheck>& checks);

/// The hypothesis as linear inequalities in the monomial coefficients
/// c_0..c_d of a degree-<=d polynomial.
InequalitySystem hypothesis_system(const Lemma1Instance& inst, int degree);

struct FeasibilityResult {
  int degree;
  bool feasible;
  RationalPoly witness;                  ///< valid when feasible
  std::vector<mpq_class> certificate;    ///< Farkas multipliers when infeasible
};

FeasibilityResult solve_degree(const Lemma1Instance& inst, int degree);

struct MinDegreeReport {
  Lemma1Instance instance;
  std::vector<FeasibilityResult> per_degree;
  std::optional<int> min_feasible;
  /// Every degree d with 4d < n was solved and certified infeasible.
  bool bound_certified;
};

/// Solves d = 0, 1, ... up to max_degree (<= n), stopping at the first
/// feasible degree.
MinDegreeReport min_feasible_degree(const Lemma1Instance& inst, int max_degree);

}  // namespace simonlab

#endif  // SIMONLAB_LEMMA1_HPP
