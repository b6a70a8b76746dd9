#include <gtest/gtest.h>

#include "simonlab/counting.hpp"
#include "simonlab/error.hpp"
#include "simonlab/instances.hpp"
#include "util.hpp"

using namespace simonlab;
using namespace testutil;

TEST(MakeLinear, Labels) {
  const FieldSpec f(2, 2);
  EXPECT_EQ(make_linear(FpMatrix::identity(f)).label, PromiseLabel::kOneToOne);
  const LinearInstance k = make_linear(mat(2, {{1, 1}, {0, 0}}));
  EXPECT_EQ(k.kernel_dim, 1);
  EXPECT_EQ(k.label, PromiseLabel::kKernelP);
  EXPECT_EQ(make_linear(FpMatrix::zero(f)).label, PromiseLabel::kUnrestricted);
  EXPECT_EQ(to_string(PromiseLabel::kKernelP), "KERNEL_P");
}

TEST(PartialFn, DuplicateDomainPointRejected) {
  const FieldSpec f(3, 2);
  PartialFn s(f);
  s.insert(vec({1, 0}), vec({1, 1}));
  EXPECT_THROW(s.insert(vec({1, 0}), vec({0, 0})), PreconditionError);
  EXPECT_THROW(s.insert(vec({4, 0}), vec({0, 0})), PreconditionError);  // 4 = 1 mod 3
  EXPECT_EQ(s.domain_size(), 1u);
}

TEST(PartialFn, SetEquality) {
  const FieldSpec f(2, 2);
  const PartialFn a(f, {{vec({1, 0}), vec({0, 1})}, {vec({0, 1}), vec({1, 1})}});
  const PartialFn b(f, {{vec({0, 1}), vec({1, 1})}, {vec({1, 0}), vec({0, 1})}});
  const PartialFn c(f, {{vec({0, 1}), vec({1, 0})}, {vec({1, 0}), vec({0, 1})}});
  EXPECT_TRUE(a == b);
  EXPECT_FALSE(a == c);
}

TEST(LinearConsistency, Examples) {
  const FieldSpec f(3, 2);
  const auto empty = linear_consistency(PartialFn(f));
  ASSERT_TRUE(empty.has_value());
  EXPECT_EQ(empty->domain_span, Subspace::zero(f));
  const auto ok = linear_consistency(PartialFn(f, {{vec({1, 0}), vec({1, 1})}, {vec({2, 0}), vec({2, 2})}}));
  ASSERT_TRUE(ok.has_value());
  EXPECT_EQ(ok->domain_span.dim(), 1);
  EXPECT_EQ(ok->kernel.dim(), 0);
  EXPECT_FALSE(linear_consistency(PartialFn(f, {{vec({1, 0}), vec({1, 1})}, {vec({2, 0}), vec({0, 1})}})));
  // A zero value on a nonzero point lands in Z; zero must map to zero.
  const auto z = linear_consistency(PartialFn(f, {{vec({1, 1}), vec({0, 0})}, {vec({1, 0}), vec({2, 1})}}));
  ASSERT_TRUE(z.has_value());
  EXPECT_EQ(z->kernel, Subspace::span(f, rows({{1, 1}})));
  EXPECT_FALSE(linear_consistency(PartialFn(f, {{vec({0, 0}), vec({1, 0})}})));
}

TEST(LinearConsistency, AgreesWithBruteForceExtensionSearch) {
  for (auto [p, n] : {std::pair{2u, 2}, {3u, 2}}) {
    const FieldSpec f(p, n);
    const MatrixCensus census(f);
    std::uint64_t visited = 0;
    for_each_partial_function(f, 3, [&](const PartialFn& s) {
      ++visited;
      bool some = false;
      for (std::size_t i = 0; i < census.size() && !some; ++i) some = s.extended_by(census.matrix(i));
      const auto ext = linear_consistency(s);
      ASSERT_EQ(ext.has_value(), some);
      if (!ext) return;
      EXPECT_EQ(ext->domain_span, s.domain_span());
      EXPECT_TRUE(ext->domain_span.contains(ext->kernel));
      // Z is exactly the set of K-vectors every extension sends to 0.
      for (const FpVector& v : ext->domain_span.elements()) {
        bool forced_zero = true;
        for (std::size_t i = 0; i < census.size(); ++i) {
          if (s.extended_by(census.matrix(i)) && !census.matrix(i).apply(v).isZero()) forced_zero = false;
        }
        EXPECT_EQ(ext->kernel.contains(v), forced_zero);
      }
    });
    // sum_{d<=3} C(p^n, d) * (p^n)^d
    const std::uint64_t size = f.space_size();
    std::uint64_t expected = 0, choose = 1, powv = 1;
    for (std::uint64_t d = 0; d <= 3; ++d) {
      expected += choose * powv;
      choose = choose * (size - d) / (d + 1);
      powv *= size;
    }
    EXPECT_EQ(visited, expected);
  }
}

TEST(Restrict, Examples) {
  const FieldSpec f(2, 2);
  const LinearInstance id = make_linear(FpMatrix::identity(f));
  EXPECT_TRUE(restrict_to(id, {}).empty());
  const PartialFn s = restrict_to(id, {f.unit(0)});
  EXPECT_TRUE(s == PartialFn(f, {{f.unit(0), f.unit(0)}}));
  EXPECT_EQ(restrict_to(id, {f.unit(0), f.unit(0), f.unit(1)}).domain_size(), 2u);
}

TEST(Restrict, ExtensionIffRestrictionEquals) {
  // For every f at p=2, n<=3 and every query set of size <= 4:
  // s extended by f  <=>  restrict(f, dom s) == s. Query sets are sampled
  // exhaustively at n=2 and from a fixed stream at n=3.
  for (int n = 2; n <= 3; ++n) {
    const FieldSpec f(2, n);
    const MatrixCensus census(f);
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<std::uint64_t> point(0, f.space_size() - 1);
    for (std::size_t i = 0; i < census.size(); ++i) {
      const LinearInstance inst = make_linear(census.matrix(i));
      for (int t = 0; t < (n == 2 ? 40 : 6); ++t) {
        std::vector<FpVector> q;
        for (int j = 0; j < 1 + t % 4; ++j) q.push_back(f.vector_at(point(rng)));
        const PartialFn s = restrict_to(inst, q);
        EXPECT_TRUE(s.extended_by(inst.matrix));
        EXPECT_TRUE(linear_consistency(s).has_value());
        // Perturb one value: restriction no longer matches and f no longer extends.
        PartialFn t2(f);
        bool first = true;
        for (const auto& [x, y] : s.pairs()) {
          FpVector y2 = y;
          if (first) y2[0] = (y2[0] + 1) % 2;
          first = false;
          t2.insert(x, y2);
        }
        std::vector<FpVector> dom;
        for (const auto& pr : t2.pairs()) dom.push_back(pr.first);
        EXPECT_EQ(t2.extended_by(inst.matrix), restrict_to(inst, dom) == t2);
        EXPECT_FALSE(t2.extended_by(inst.matrix));
      }
    }
  }
}

TEST(General, PermutationAndTwoToOne) {
  for (int n = 1; n <= 10; ++n) {
    const GeneralInstance bij = make_general(n, std::nullopt, 7);
    EXPECT_TRUE(is_valid(bij));
    std::set<std::uint32_t> images(bij.table.begin(), bij.table.end());
    EXPECT_EQ(images.size(), bij.table.size());
    const std::uint32_t shift = (1u << n) - 1;
    const GeneralInstance two = make_general(n, shift, 7);
    EXPECT_TRUE(is_valid(two));
    for (std::uint32_t x = 0; x < (1u << n); ++x) EXPECT_EQ(two(x), two(x ^ shift));
  }
  const GeneralInstance tiny = make_general(1, 1u, 0);
  EXPECT_EQ(tiny(0), tiny(1));
  EXPECT_EQ(make_general(6, 5u, 3).table, make_general(6, 5u, 3).table);
}

TEST(General, Errors) {
  EXPECT_THROW(make_general(3, 0u, 1), DomainError);
  EXPECT_THROW(make_general(3, 8u, 1), DomainError);
  EXPECT_THROW(make_general(0, std::nullopt, 1), DomainError);
  EXPECT_THROW(make_general(kMaxGeneralBits + 1, std::nullopt, 1), DomainError);
  GeneralInstance broken = make_general(3, 3u, 1);
  broken.table[0] ^= 1;
  EXPECT_FALSE(is_valid(broken));
}
