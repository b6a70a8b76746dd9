#ifndef SIMONLAB_POLYMETHOD_HPP
#define SIMONLAB_POLYMETHOD_HPP

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <vector>

#include "simonlab/counting.hpp"
#include "simonlab/instances.hpp"
#include "simonlab/polynomial.hpp"
#include "simonlab/qsim.hpp"

namespace simonlab {

/// Exact values of a function of D = p^k for a contiguous run of k.
class QTable {
 public:
  struct Point {
    int k;
    mpz_class d;
    mpq_class value;
  };

  QTable(std::uint32_t p, int n, std::vector<Point> points);

  std::uint32_t p() const { return p_; }
  int n() const { return n_; }
  const std::vector<Point>& points() const { return points_; }

 private:
  std::uint32_t p_;
  int n_;
  std::vector<Point> points_;
};

/// The unique polynomial of degree < #points through every (D, value).
RationalPoly interpolate(const QTable& table);

/// Pr_{f in F_D}[s extends to f] by counting over every matrix in the census.
mpq_class q_s_bruteforce(const PartialFn& s, int h, const MatrixCensus& census);
mpq_class q_s_bruteforce(const PartialFn& s, int h, std::uint64_t cap = kDefaultEnumerationCap);

/// Pr[Z within H] for a uniform h-dimensional H, dim Z = z:
/// prod_{i<z} (p^h - p^i) / (p^n - p^i).
mpq_class prob_kernel_contains(std::uint32_t p, int n, int z, int h);
mpq_class prob_kernel_contains(const Subspace& z, int h);

/// Pr[Y meets H only in 0 | Z within H] for dim K = k, dim Z = z:
/// prod_{i<k-z} (p^{n-z} - p^{h-z+i}) / alpha(n-z, k-z). Zero whenever the
/// event is impossible (h < z, or too little room for Y to avoid H).
mpq_class prob_avoids(std::uint32_t p, int n, int k, int z, int h);

/// Conditional extension probability per h, given Z within H and Y meeting H
/// only in 0, where Y is the pivot-order complement of Z in K.
struct Part3Report {
  struct Row {
    int h;
    mpz_class conditioned;   ///< # f in F_D satisfying the conditioning event
    mpz_class extending;     ///< # of those that also extend s
    std::optional<mpq_class> value;
  };
  std::vector<Row> rows;
  std::optional<mpq_class> common_value;
  bool pass = false;
};

Part3Report verify_part3(const PartialFn& s, const MatrixCensus& census);

/// Product of the three factors. Zero for linearly inconsistent s.
mpq_class q_s_closed_form(const PartialFn& s, int h, const MatrixCensus& census);

/// The same closed form with a precomputed part-3 report (avoids recounting per h).
mpq_class q_s_closed_form(const PartialFn& s, int h, const Part3Report& part3);

enum class QsMode { kBrute, kClosed };

/// Q_s(p^k) for k = 0..n.
QTable q_s_table(const PartialFn& s, QsMode mode, const MatrixCensus& census);

/// Minimal-degree least-squares fit of (x, y) samples.
struct DegreeFit {
  int degree = -1;                  ///< least d with max residual < tolerance, -1 if none
  std::vector<double> residuals;    ///< max |residual| for d = 0 .. #points-1
  Polynomial<double> polynomial;
};

DegreeFit fit_min_degree(const std::vector<double>& xs, const std::vector<double>& ys, double tolerance = 1e-6);

struct QofDReport {
  std::uint32_t p;
  int n;
  std::vector<double> d_values;
  std::vector<double> q_values;
  int query_count;
  DegreeFit fit;
};

/// Averages P(f) over every f in F_D for D = p^0..p^n (compensated summation
/// in matrix-index order, so the result does not depend on `jobs`).
QofDReport q_of_d(const Circuit& circuit, const MatrixCensus& census, int jobs = 1,
                  std::uint64_t sim_cap = kDefaultSimulatorCap, double tolerance = 1e-6);

}  // namespace simonlab

#endif  // SIMONLAB_POLYMETHOD_HPP
