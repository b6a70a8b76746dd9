// Brute-force reference computations used only by the tests. They share no
// code with the library beyond FieldSpec index helpers.
#ifndef SIMONLAB_TESTS_ORACLES_HPP
#define SIMONLAB_TESTS_ORACLES_HPP

#include <gmpxx.h>

#include <cstdint>
#include <set>
#include <utility>
#include <vector>

#include "simonlab/field.hpp"

namespace oracle {

using simonlab::FieldSpec;
using Vec = std::vector<std::int64_t>;
using Mat = std::vector<Vec>;  // row-major, n x n

inline Vec digits(std::uint64_t index, std::uint32_t p, int len) {
  Vec v(static_cast<std::size_t>(len));
  for (auto& d : v) {
    d = static_cast<std::int64_t>(index % p);
    index /= p;
  }
  return v;
}

inline std::uint64_t pow_u(std::uint64_t b, int e) {
  std::uint64_t r = 1;
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

inline Mat matrix_at(std::uint64_t index, std::uint32_t p, int n) {
  const Vec d = digits(index, p, n * n);
  Mat m(static_cast<std::size_t>(n), Vec(static_cast<std::size_t>(n)));
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) m[r][c] = d[static_cast<std::size_t>(r * n + c)];
  return m;
}

inline Vec apply(const Mat& m, const Vec& x, std::uint32_t p) {
  Vec y(m.size(), 0);
  for (std::size_t r = 0; r < m.size(); ++r) {
    std::int64_t acc = 0;
    for (std::size_t c = 0; c < x.size(); ++c) acc += m[r][c] * x[c];
    y[r] = acc % p;
  }
  return y;
}

inline std::int64_t dot(const Vec& a, const Vec& b, std::uint32_t p) {
  std::int64_t acc = 0;
  for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
  return acc % p;
}

inline bool is_zero(const Vec& v) {
  for (auto x : v)
    if (x) return false;
  return true;
}

/// Set of vector indices in the kernel, by evaluating m on every vector.
inline std::set<std::uint64_t> kernel_set(const Mat& m, std::uint32_t p, int n) {
  std::set<std::uint64_t> out;
  for (std::uint64_t i = 0; i < pow_u(p, n); ++i) {
    if (is_zero(apply(m, digits(i, p, n), p))) out.insert(i);
  }
  return out;
}

/// The set spanned by `gens`, by closing under all coefficient choices.
inline std::set<std::uint64_t> span_set(const std::vector<Vec>& gens, std::uint32_t p, int n) {
  std::set<std::uint64_t> out;
  const std::uint64_t combos = pow_u(p, static_cast<int>(gens.size()));
  for (std::uint64_t c = 0; c < combos; ++c) {
    const Vec coeff = digits(c, p, static_cast<int>(gens.size()));
    Vec v(static_cast<std::size_t>(n), 0);
    for (std::size_t g = 0; g < gens.size(); ++g)
      for (int j = 0; j < n; ++j) v[j] = (v[j] + coeff[g] * gens[g][j]) % p;
    std::uint64_t idx = 0;
    for (int j = n - 1; j >= 0; --j) idx = idx * p + static_cast<std::uint64_t>(v[j]);
    out.insert(idx);
  }
  return out;
}

/// {y : y.x = 0 for every x in `set`}.
inline std::set<std::uint64_t> perp_set(const std::set<std::uint64_t>& set, std::uint32_t p, int n) {
  std::set<std::uint64_t> out;
  for (std::uint64_t y = 0; y < pow_u(p, n); ++y) {
    bool ok = true;
    for (auto x : set) ok = ok && dot(digits(y, p, n), digits(x, p, n), p) == 0;
    if (ok) out.insert(y);
  }
  return out;
}

/// Number of ordered h-tuples of independent vectors: tuples whose span has p^h elements.
inline std::uint64_t independent_tuples(std::uint32_t p, int n, int h) {
  const std::uint64_t size = pow_u(p, n);
  std::uint64_t count = 0;
  for (std::uint64_t t = 0; t < pow_u(size, h); ++t) {
    std::vector<Vec> gens;
    std::uint64_t rest = t;
    for (int i = 0; i < h; ++i) {
      gens.push_back(digits(rest % size, p, n));
      rest /= size;
    }
    if (span_set(gens, p, n).size() == pow_u(p, h)) ++count;
  }
  return count;
}

/// Distinct h-dimensional subspaces, as element sets.
inline std::set<std::set<std::uint64_t>> subspaces(std::uint32_t p, int n, int h) {
  const std::uint64_t size = pow_u(p, n);
  std::set<std::set<std::uint64_t>> out;
  for (std::uint64_t t = 0; t < pow_u(size, h); ++t) {
    std::vector<Vec> gens;
    std::uint64_t rest = t;
    for (int i = 0; i < h; ++i) {
      gens.push_back(digits(rest % size, p, n));
      rest /= size;
    }
    auto s = span_set(gens, p, n);
    if (s.size() == pow_u(p, h)) out.insert(std::move(s));
  }
  return out;
}

/// Pr[T uniform samples span F_p^n] by a dynamic program over the span dimension.
inline mpq_class spanning_dp(std::uint32_t p, int n, int rounds) {
  std::vector<mpq_class> dist(static_cast<std::size_t>(n) + 1, 0);
  dist[0] = 1;
  mpz_class size;
  mpz_ui_pow_ui(size.get_mpz_t(), p, static_cast<unsigned long>(n));
  for (int t = 0; t < rounds; ++t) {
    std::vector<mpq_class> next(dist.size(), 0);
    for (int j = 0; j <= n; ++j) {
      mpz_class inside;
      mpz_ui_pow_ui(inside.get_mpz_t(), p, static_cast<unsigned long>(j));
      mpq_class stay(inside, size);
      stay.canonicalize();
      next[j] += dist[j] * stay;
      if (j < n) next[j + 1] += dist[j] * (1 - stay);
    }
    dist = next;
  }
  return dist[static_cast<std::size_t>(n)];
}

/// Pr[some coset fully queried] for `budget` distinct uniform queries on a
/// 2-to-1 function over n bits. DP over (queries made, still collision-free).
inline mpq_class birthday_dp(int n, std::uint64_t budget) {
  const std::uint64_t size = std::uint64_t{1} << n;
  mpq_class free = 1, hit = 0;
  for (std::uint64_t j = 0; j < budget && j < size; ++j) {
    // j points queried, all in distinct cosets: j of the remaining size - j
    // points complete a coset.
    mpq_class complete(static_cast<unsigned long>(j), static_cast<unsigned long>(size - j));
    complete.canonicalize();
    hit += free * complete;
    free *= 1 - complete;
  }
  return hit;
}

/// The lemma1 hypothesis as rows (coefficients of c_0..c_d, bound) meaning
/// row . c <= bound: 0 <= Q(p^k) <= 1 for k = 0..n, Q(1) >= 2/3, Q(p) <= 1/3.
inline std::vector<std::pair<std::vector<mpq_class>, mpq_class>> lemma1_rows(std::uint32_t p, int n, int d) {
  std::vector<std::pair<std::vector<mpq_class>, mpq_class>> out;
  auto powers = [&](const mpz_class& x) {
    std::vector<mpq_class> v;
    mpq_class t = 1;
    for (int j = 0; j <= d; ++j) {
      v.push_back(t);
      t *= x;
    }
    return v;
  };
  auto negated = [](std::vector<mpq_class> v) {
    for (auto& c : v) c = -c;
    return v;
  };
  mpz_class x = 1;
  for (int k = 0; k <= n; ++k) {
    out.emplace_back(negated(powers(x)), 0);
    out.emplace_back(powers(x), 1);
    x *= p;
  }
  out.emplace_back(negated(powers(1)), mpq_class(-2, 3));
  out.emplace_back(powers(p), mpq_class(1, 3));
  return out;
}

/// True when y >= 0 recombines the rows into 0 <= negative.
inline bool recombines_to_contradiction(const std::vector<std::pair<std::vector<mpq_class>, mpq_class>>& rows,
                                        const std::vector<mpq_class>& y) {
  if (y.size() != rows.size() || rows.empty()) return false;
  std::vector<mpq_class> lhs(rows.front().first.size(), 0);
  mpq_class rhs = 0;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (y[i] < 0) return false;
    for (std::size_t j = 0; j < lhs.size(); ++j) lhs[j] += y[i] * rows[i].first[j];
    rhs += y[i] * rows[i].second;
  }
  for (const auto& c : lhs)
    if (c != 0) return false;
  return rhs < 0;
}

}  // namespace oracle

#endif  // SIMONLAB_TESTS_ORACLES_HPP
