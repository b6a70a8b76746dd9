#include "simonlab/polymethod.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <exception>
#include <string>
#include <thread>

#include "simonlab/error.hpp"

namespace simonlab {

namespace {

mpz_class power(std::uint32_t p, int e) {
  mpz_class out;
  mpz_ui_pow_ui(out.get_mpz_t(), p, static_cast<unsigned long>(e));
  return out;
}

mpq_class ratio(const mpz_class& num, const mpz_class& den) {
  mpq_class q(num, den);
  q.canonicalize();
  return q;
}

/// Neumaier's compensated sum.
class CompensatedSum {
 public:
  void add(double x) {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
      carry_ += (sum_ - t) + x;
    } else {
      carry_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  double value() const { return sum_ + carry_; }

 private:
  double sum_ = 0.0;
  double carry_ = 0.0;
};

/// s as (index(x), index(y)) pairs.
std::vector<std::pair<std::uint64_t, std::uint64_t>> indexed_pairs(const PartialFn& s) {
  std::vector<std::pair<std::uint64_t, std::uint64_t>> out;
  for (const auto& [x, y] : s.pairs()) out.emplace_back(s.field().index_of(x), s.field().index_of(y));
  return out;
}

bool extends(const MatrixCensus& census, std::size_t i,
             const std::vector<std::pair<std::uint64_t, std::uint64_t>>& pairs) {
  for (const auto& [x, y] : pairs) {
    if (census.image(i, x) != y) return false;
  }
  return true;
}

}  // namespace

QTable::QTable(std::uint32_t p, int n, std::vector<Point> points) : p_(p), n_(n), points_(std::move(points)) {
  for (std::size_t i = 0; i < points_.size(); ++i) {
    const Point& pt = points_[i];
    if (i > 0 && pt.d == points_[i - 1].d) throw DomainError("QTable: duplicate D");
    if (pt.k < 0 || pt.k > n || pt.d != power(p, pt.k)) {
      throw DomainError("QTable: D must equal p^k with 0 <= k <= n");
    }
    if (i > 0 && pt.k != points_[i - 1].k + 1) throw DomainError("QTable: k values must be contiguous and increasing");
    if (pt.value < 0 || pt.value > 1) throw DomainError("QTable: values must lie in [0, 1]");
  }
}

RationalPoly interpolate(const QTable& table) {
  std::vector<mpq_class> xs, ys;
  for (const auto& pt : table.points()) {
    xs.emplace_back(pt.d);
    ys.push_back(pt.value);
  }
  return interpolate<mpq_class>(xs, ys);
}

mpq_class q_s_bruteforce(const PartialFn& s, int h, const MatrixCensus& census) {
  require_same_field(s.field(), census.field(), "q_s_bruteforce");
  if (h < 0 || h > s.field().n()) throw DomainError("q_s_bruteforce: h out of range");
  const auto pairs = indexed_pairs(s);
  mpz_class members = 0, extending = 0;
  for (std::size_t i = 0; i < census.size(); ++i) {
    if (census.kernel_dim(i) != h) continue;
    ++members;
    if (extends(census, i, pairs)) ++extending;
  }
  return ratio(extending, members);
}

mpq_class q_s_bruteforce(const PartialFn& s, int h, std::uint64_t cap) {
  return q_s_bruteforce(s, h, MatrixCensus(s.field(), cap));
}

mpq_class prob_kernel_contains(std::uint32_t p, int n, int z, int h) {
  if (z < 0 || z > n || h < 0 || h > n) throw DomainError("prob_kernel_contains: need 0 <= z, h <= n");
  mpq_class prob = 1;
  for (int i = 0; i < z; ++i) {
    prob *= ratio(power(p, h) - power(p, i), power(p, n) - power(p, i));
  }
  return prob;
}

mpq_class prob_kernel_contains(const Subspace& z, int h) {
  return prob_kernel_contains(z.field().p(), z.field().n(), z.dim(), h);
}

mpq_class prob_avoids(std::uint32_t p, int n, int k, int z, int h) {
  if (z < 0 || z > k || k > n || h < 0 || h > n) throw DomainError("prob_avoids: need 0 <= z <= k <= n, 0 <= h <= n");
  if (h < z || (h - z) + (k - z) > n - z) return 0;
  mpz_class num = 1;
  for (int i = 0; i < k - z; ++i) num *= power(p, n - z) - power(p, h - z + i);
  return ratio(num, alpha(p, n - z, k - z));
}

Part3Report verify_part3(const PartialFn& s, const MatrixCensus& census) {
  require_same_field(s.field(), census.field(), "verify_part3");
  const auto ext = linear_consistency(s);
  if (!ext) throw PreconditionError("verify_part3: partial function is not linearly consistent");
  const FieldSpec& field = s.field();
  const Subspace y = complement_in(ext->kernel, ext->domain_span);

  const auto pairs = indexed_pairs(s);
  std::vector<std::uint64_t> z_basis;
  for (int r = 0; r < ext->kernel.dim(); ++r) z_basis.push_back(field.index_of(ext->kernel.basis_vector(r)));
  std::vector<std::uint64_t> y_nonzero;
  for (const FpVector& v : y.elements()) {
    if (!v.isZero()) y_nonzero.push_back(field.index_of(v));
  }

  std::vector<std::uint64_t> conditioned_count(static_cast<std::size_t>(field.n()) + 1, 0);
  std::vector<std::uint64_t> extending_count(conditioned_count.size(), 0);
  for (std::size_t i = 0; i < census.size(); ++i) {
    bool conditioned = true;
    for (std::uint64_t z : z_basis) conditioned = conditioned && census.image(i, z) == 0;
    for (std::uint64_t v : y_nonzero) conditioned = conditioned && census.image(i, v) != 0;
    if (!conditioned) continue;
    const auto h = static_cast<std::size_t>(census.kernel_dim(i));
    ++conditioned_count[h];
    if (extends(census, i, pairs)) ++extending_count[h];
  }
  std::vector<mpz_class> conditioned(conditioned_count.size()), extending(conditioned_count.size());
  for (std::size_t h = 0; h < conditioned.size(); ++h) {
    conditioned[h] = static_cast<unsigned long>(conditioned_count[h]);
    extending[h] = static_cast<unsigned long>(extending_count[h]);
  }

  Part3Report report;
  report.pass = true;
  for (int h = 0; h <= field.n(); ++h) {
    Part3Report::Row row{h, conditioned[static_cast<std::size_t>(h)], extending[static_cast<std::size_t>(h)], {}};
    if (row.conditioned > 0) {
      row.value = ratio(row.extending, row.conditioned);
      if (!report.common_value) {
        report.common_value = row.value;
      } else if (*report.common_value != *row.value) {
        report.pass = false;
      }
    }
    report.rows.push_back(std::move(row));
  }
  if (!report.common_value) report.pass = false;
  return report;
}

mpq_class q_s_closed_form(const PartialFn& s, int h, const Part3Report& part3) {
  const auto ext = linear_consistency(s);
  if (!ext) return 0;
  if (!part3.common_value) throw PreconditionError("q_s_closed_form: part-3 report has no valid h");
  const FieldSpec& field = s.field();
  const int k = ext->domain_span.dim();
  const int z = ext->kernel.dim();
  mpq_class value = prob_kernel_contains(field.p(), field.n(), z, h);
  value *= prob_avoids(field.p(), field.n(), k, z, h);
  value *= *part3.common_value;
  return value;
}

mpq_class q_s_closed_form(const PartialFn& s, int h, const MatrixCensus& census) {
  if (!linear_consistency(s)) return 0;
  return q_s_closed_form(s, h, verify_part3(s, census));
}

QTable q_s_table(const PartialFn& s, QsMode mode, const MatrixCensus& census) {
  const FieldSpec& field = s.field();
  std::optional<Part3Report> part3;
  const bool consistent = linear_consistency(s).has_value();
  if (mode == QsMode::kClosed && consistent) part3 = verify_part3(s, census);

  std::vector<QTable::Point> points;
  for (int k = 0; k <= field.n(); ++k) {
    mpq_class value;
    if (mode == QsMode::kBrute) {
      value = q_s_bruteforce(s, k, census);
    } else {
      value = consistent ? q_s_closed_form(s, k, *part3) : mpq_class(0);
    }
    points.push_back({k, power(field.p(), k), value});
  }
  return QTable(field.p(), field.n(), std::move(points));
}

DegreeFit fit_min_degree(const std::vector<double>& xs, const std::vector<double>& ys, double tolerance) {
  if (xs.size() != ys.size() || xs.empty()) throw DomainError("fit_min_degree: need matching, nonempty samples");
  const auto count = static_cast<Eigen::Index>(xs.size());
  double scale = 0.0;
  for (double x : xs) scale = std::max(scale, std::abs(x));
  if (scale == 0.0) scale = 1.0;

  Eigen::VectorXd target(count);
  for (Eigen::Index i = 0; i < count; ++i) target[i] = ys[static_cast<std::size_t>(i)];

  DegreeFit fit;
  for (Eigen::Index d = 0; d < count; ++d) {
    Eigen::MatrixXd vandermonde(count, d + 1);
    for (Eigen::Index i = 0; i < count; ++i) {
      double t = 1.0;
      for (Eigen::Index j = 0; j <= d; ++j) {
        vandermonde(i, j) = t;
        t *= xs[static_cast<std::size_t>(i)] / scale;
      }
    }
    const Eigen::VectorXd coeffs = vandermonde.colPivHouseholderQr().solve(target);
    const double residual = (vandermonde * coeffs - target).cwiseAbs().maxCoeff();
    fit.residuals.push_back(residual);
    if (fit.degree < 0 && residual < tolerance) {
      fit.degree = static_cast<int>(d);
      std::vector<double> unscaled(static_cast<std::size_t>(d + 1));
      for (Eigen::Index j = 0; j <= d; ++j) {
        unscaled[static_cast<std::size_t>(j)] = coeffs[j] / std::pow(scale, static_cast<double>(j));
      }
      fit.polynomial = Polynomial<double>(std::move(unscaled));
    }
  }
  return fit;
}

QofDReport q_of_d(const Circuit& circuit, const MatrixCensus& census, int jobs, std::uint64_t sim_cap,
                  double tolerance) {
  require_same_field(circuit.field(), census.field(), "q_of_d");
  const FieldSpec& field = circuit.field();
  // Fail fast on the simulator cap before spawning workers.
  StateVector probe(field, circuit.workspace_dim(), sim_cap);

  std::vector<double> acceptance(census.size());
  const std::size_t workers = static_cast<std::size_t>(std::max(1, jobs));
  std::vector<std::exception_ptr> errors(workers);
  auto work = [&](std::size_t worker) {
    try {
      for (std::size_t i = worker; i < census.size(); i += workers) {
        acceptance[i] = run_circuit(circuit, census.matrix(i), sim_cap);
      }
    } catch (...) {
      errors[worker] = std::current_exception();
    }
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work, w);
    for (auto& t : pool) t.join();
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  QofDReport report{field.p(), field.n(), {}, {}, circuit.query_count(), {}};
  for (int h = 0; h <= field.n(); ++h) {
    CompensatedSum total;
    for (std::size_t i = 0; i < census.size(); ++i) {
      if (census.kernel_dim(i) == h) total.add(acceptance[i]);
    }
    report.d_values.push_back(std::pow(static_cast<double>(field.p()), h));
    report.q_values.push_back(total.value() / static_cast<double>(census.count(h)));
  }
  report.fit = fit_min_degree(report.d_values, report.q_values, tolerance);
  return report;
}

}  // namespace simonlab
