#include "simonlab/lemma1.hpp"

#include <string>

#include "simonlab/error.hpp"
#include "simonlab/field.hpp"

namespace simonlab {

namespace {

mpz_class power(std::uint32_t p, int e) {
  mpz_class out;
  mpz_ui_pow_ui(out.get_mpz_t(), p, static_cast<unsigned long>(e));
  return out;
}

std::vector<mpq_class> monomials(const mpz_class& d, int degree) {
  std::vector<mpq_class> row;
  mpz_class t = 1;
  for (int j = 0; j <= degree; ++j) {
    row.emplace_back(t);
    t *= d;
  }
  return row;
}

std::vector<mpq_class> negated(std::vector<mpq_class> row) {
  for (mpq_class& x : row) x = -x;
  return row;
}

}  // namespace

Lemma1Instance::Lemma1Instance(std::uint32_t p, int n) : Lemma1Instance(p, n, mpq_class(2, 3), mpq_class(1, 3)) {}

Lemma1Instance::Lemma1Instance(std::uint32_t p, int n, mpq_class accept_lo, mpq_class reject_hi)
    : p(p), n(n), accept_lo(std::move(accept_lo)), reject_hi(std::move(reject_hi)) {
  static_cast<void>(FieldSpec(p, n));  // validates p prime and n >= 1
  this->accept_lo.canonicalize();
  this->reject_hi.canonicalize();
  if (!(this->reject_hi >= 0 && this->reject_hi < this->accept_lo && this->accept_lo <= 1)) {
    throw DomainError("thresholds must satisfy 0 <= reject_hi < accept_lo <= 1");
  }
}

std::vector<ConstraintCheck> check_hypothesis(const RationalPoly& q, const Lemma1Instance& inst) {
  std::vector<ConstraintCheck> out;
  for (int k = 0; k <= inst.n; ++k) {
    const mpz_class d = power(inst.p, k);
    mpq_class value = q(mpq_class(d));
    const bool pass = value >= 0 && value <= 1;
    out.push_back({"box k=" + std::to_string(k), d, std::move(value), pass});
  }
  mpq_class at_one = q(mpq_class(1));
  out.push_back({"accept_lo", 1, at_one, at_one >= inst.accept_lo});
  mpq_class at_p = q(mpq_class(power(inst.p, 1)));
  out.push_back({"reject_hi", inst.p, at_p, at_p <= inst.reject_hi});
  return out;
}

bool all_pass(const std::vector<ConstraintCheck>& checks) {
  for (const auto& c : checks) {
    if (!c.pass) return false;
  }
  return true;
}

InequalitySystem hypothesis_system(const Lemma1Instance& inst, int degree) {
  if (degree < 0) throw DomainError("degree must be >= 0");
  InequalitySystem sys;
  sys.variables = degree + 1;
  for (int k = 0; k <= inst.n; ++k) {
    const std::vector<mpq_class> row = monomials(power(inst.p, k), degree);
    sys.add(negated(row), 0, "Q(p^" + std::to_string(k) + ") >= 0");
    sys.add(row, 1, "Q(p^" + std::to_string(k) + ") <= 1");
  }
  sys.add(negated(monomials(1, degree)), -inst.accept_lo, "Q(1) >= accept_lo");
  sys.add(monomials(power(inst.p, 1), degree), inst.reject_hi, "Q(p) <= reject_hi");
  return sys;
}

FeasibilityResult solve_degree(const Lemma1Instance& inst, int degree) {
  const InequalitySystem sys = hypothesis_system(inst, degree);
  FeasibilityOutcome outcome = solve_feasibility(sys);
  FeasibilityResult result{degree, outcome.feasible, {}, {}};
  if (outcome.feasible) {
    result.witness = RationalPoly(std::move(outcome.point));
    if (!all_pass(check_hypothesis(result.witness, inst))) {
      throw Error("degree " + std::to_string(degree) + " witness fails the hypothesis");
    }
  } else {
    result.certificate = std::move(outcome.farkas);
  }
  return result;
}

MinDegreeReport min_feasible_degree(const Lemma1Instance& inst, int max_degree) {
  if (max_degree < 0 || max_degree > inst.n) {
    throw DomainError("max degree must lie in [0, n] (degree n is always feasible)");
  }
  MinDegreeReport report{inst, {}, std::nullopt, true};
  for (int d = 0; d <= max_degree; ++d) {
    report.per_degree.push_back(solve_degree(inst, d));
    if (report.per_degree.back().feasible) {
      report.min_feasible = d;
      break;
    }
  }
  for (int d = 0; 4 * d < inst.n; ++d) {
    const auto idx = static_cast<std::size_t>(d);
    if (idx >= report.per_degree.size() || report.per_degree[idx].feasible) {
      report.bound_certified = false;
      break;
    }
    const InequalitySystem sys = hypothesis_system(inst, d);
    if (!is_farkas_certificate(sys, report.per_degree[idx].certificate)) report.bound_certified = false;
  }
  return report;
}

}  // namespace simonlab
