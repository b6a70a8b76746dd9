#include <gtest/gtest.h>

#include <random>

#include "simonlab/error.hpp"
#include "simonlab/exact_lp.hpp"
#include "simonlab/lemma1.hpp"
#include "oracles.hpp"

using namespace simonlab;

namespace {

mpq_class q(long num, long den = 1) {
  mpq_class r(num, den);
  r.canonicalize();
  return r;
}

}  // namespace

TEST(ExactLp, FeasibleAndInfeasibleToySystems) {
  InequalitySystem box;
  box.variables = 2;
  box.add({1, 0}, 3, "x <= 3");
  box.add({-1, 0}, -1, "x >= 1");
  box.add({0, 1}, 2, "y <= 2");
  box.add({1, 1}, 4, "x + y <= 4");
  const FeasibilityOutcome ok = solve_feasibility(box);
  ASSERT_TRUE(ok.feasible);
  EXPECT_TRUE(satisfies(box, ok.point));

  InequalitySystem clash;
  clash.variables = 1;
  clash.add({1}, 1, "x <= 1");
  clash.add({-1}, -2, "x >= 2");
  const FeasibilityOutcome no = solve_feasibility(clash);
  ASSERT_FALSE(no.feasible);
  EXPECT_TRUE(is_farkas_certificate(clash, no.farkas));
  EXPECT_FALSE(is_farkas_certificate(clash, {1, 0}));
  EXPECT_FALSE(is_farkas_certificate(clash, {-1, -1}));
}

TEST(ExactLp, RandomSystemsAgreeWithCertificates) {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<long> coef(-4, 4);
  int feasible = 0, infeasible = 0;
  for (int trial = 0; trial < 300; ++trial) {
    InequalitySystem sys;
    sys.variables = 1 + trial % 3;
    for (int r = 0; r < 2 + trial % 5; ++r) {
      std::vector<mpq_class> row;
      for (int j = 0; j < sys.variables; ++j) row.emplace_back(coef(rng));
      sys.add(row, q(coef(rng), 1 + std::abs(coef(rng))), "r" + std::to_string(r));
    }
    const FeasibilityOutcome out = solve_feasibility(sys);
    if (out.feasible) {
      ++feasible;
      EXPECT_TRUE(satisfies(sys, out.point));
    } else {
      ++infeasible;
      EXPECT_TRUE(is_farkas_certificate(sys, out.farkas));
    }
  }
  EXPECT_GT(feasible, 0);
  EXPECT_GT(infeasible, 0);
}

TEST(Lemma1, InstanceValidation) {
  EXPECT_THROW(Lemma1Instance(4, 3), DomainError);
  EXPECT_THROW(Lemma1Instance(2, 0), DomainError);
  EXPECT_THROW(Lemma1Instance(2, 3, q(1, 3), q(1, 3)), DomainError);
  EXPECT_THROW(Lemma1Instance(2, 3, q(3, 2), q(1, 3)), DomainError);
  EXPECT_NO_THROW(Lemma1Instance(2, 3, q(1, 2), 0));
}

TEST(Lemma1, CheckHypothesisExamples) {
  const Lemma1Instance inst(2, 2);
  const auto half = check_hypothesis(RationalPoly::constant(q(1, 2)), inst);
  ASSERT_EQ(half.size(), 5u);
  for (int k = 0; k <= 2; ++k) EXPECT_TRUE(half[k].pass);
  EXPECT_FALSE(half[3].pass);
  EXPECT_EQ(half[3].name, "accept_lo");
  EXPECT_FALSE(half[4].pass);  // 1/2 > 1/3

  const auto lin = check_hypothesis(RationalPoly({q(-1, 3), q(1, 3)}), inst);
  EXPECT_FALSE(lin[3].pass);
  EXPECT_TRUE(lin[4].pass);  // Q(2) = 1/3 sits on the boundary
  EXPECT_EQ(lin[4].value, q(1, 3));
  EXPECT_FALSE(all_pass(lin));

  // Interpolant of (1, 1) and (p^k, 0) for k >= 1.
  for (int n = 1; n <= 6; ++n) {
    const Lemma1Instance in(3, n);
    std::vector<mpq_class> xs, ys;
    mpz_class d = 1;
    for (int k = 0; k <= n; ++k) {
      xs.emplace_back(d);
      ys.emplace_back(k == 0 ? 1 : 0);
      d *= 3;
    }
    const RationalPoly poly = interpolate<mpq_class>(xs, ys);
    EXPECT_EQ(poly.degree(), n);
    EXPECT_TRUE(all_pass(check_hypothesis(poly, in)));
  }
}

TEST(Lemma1, SystemMatchesReferenceRows) {
  for (int d = 0; d <= 4; ++d) {
    const InequalitySystem sys = hypothesis_system(Lemma1Instance(2, 6), d);
    const auto ref = oracle::lemma1_rows(2, 6, d);
    ASSERT_EQ(sys.size(), ref.size());
    EXPECT_EQ(sys.variables, d + 1);
    for (std::size_t i = 0; i < ref.size(); ++i) {
      EXPECT_EQ(sys.lhs[i], ref[i].first) << sys.names[i];
      EXPECT_EQ(sys.rhs[i], ref[i].second) << sys.names[i];
    }
  }
}

TEST(Lemma1, DegreeZeroAlwaysInfeasible) {
  for (std::uint32_t p : {2u, 3u, 5u})
    for (int n = 1; n <= 6; ++n) {
      const FeasibilityResult r = solve_degree(Lemma1Instance(p, n), 0);
      EXPECT_FALSE(r.feasible);
      EXPECT_TRUE(is_farkas_certificate(hypothesis_system(Lemma1Instance(p, n), 0), r.certificate));
    }
}

TEST(Lemma1, LinearInfeasibleAtN8) {
  const FeasibilityResult r = solve_degree(Lemma1Instance(2, 8), 1);
  EXPECT_FALSE(r.feasible);
  // Recombine against the independent rows.
  const auto ref = oracle::lemma1_rows(2, 8, 1);
  ASSERT_EQ(r.certificate.size(), ref.size());
  mpq_class c0 = 0, c1 = 0, rhs = 0;
  for (std::size_t i = 0; i < ref.size(); ++i) {
    EXPECT_GE(r.certificate[i], 0);
    c0 += r.certificate[i] * ref[i].first[0];
    c1 += r.certificate[i] * ref[i].first[1];
    rhs += r.certificate[i] * ref[i].second;
  }
  EXPECT_EQ(c0, 0);
  EXPECT_EQ(c1, 0);
  EXPECT_LT(rhs, 0);
}

TEST(Lemma1, MinimalDegreeBoundsAndMonotonicity) {
  for (int n : {1, 2, 3, 4, 6, 8}) {
    const Lemma1Instance inst(2, n);
    const MinDegreeReport r = min_feasible_degree(inst, n);
    ASSERT_TRUE(r.min_feasible.has_value()) << n;
    EXPECT_GE(4 * *r.min_feasible, n);
    EXPECT_LE(*r.min_feasible, n);
    EXPECT_TRUE(r.bound_certified);
    const FeasibilityResult& last = r.per_degree.back();
    ASSERT_TRUE(last.feasible);
    EXPECT_TRUE(all_pass(check_hypothesis(last.witness, inst)));
    for (const auto& res : r.per_degree) {
      if (!res.feasible) EXPECT_TRUE(is_farkas_certificate(hypothesis_system(inst, res.degree), res.certificate));
    }
    // Once feasible, every higher degree stays feasible.
    for (int d = *r.min_feasible; d <= n; ++d) EXPECT_TRUE(solve_degree(inst, d).feasible) << "n=" << n << " d=" << d;
  }
  EXPECT_THROW(min_feasible_degree(Lemma1Instance(2, 4), 5), DomainError);
  EXPECT_THROW(min_feasible_degree(Lemma1Instance(2, 4), -1), DomainError);
}

TEST(Lemma1, StopsAtMaxDegreeWithoutFeasibility) {
  const MinDegreeReport r = min_feasible_degree(Lemma1Instance(2, 8), 1);
  EXPECT_FALSE(r.min_feasible.has_value());
  EXPECT_EQ(r.per_degree.size(), 2u);
  EXPECT_TRUE(r.bound_certified);  // d = 0, 1 cover every d < 8/4
  const MinDegreeReport partial = min_feasible_degree(Lemma1Instance(2, 12), 1);
  EXPECT_FALSE(partial.bound_certified);  // d = 2 < 3 was never solved
}
