#include "simonlab/verify.hpp"

#include <cmath>
#include <random>
#include <set>
#include <sstream>

#include "simonlab/instances.hpp"
#include "simonlab/polymethod.hpp"

namespace simonlab {

namespace {

std::string hd(int h) { return "h=" + std::to_string(h); }

std::vector<Residue> key_of(const Subspace& s) {
  return std::vector<Residue>(s.basis().data(), s.basis().data() + s.basis().size());
}

StateVector random_state(const FieldSpec& field, int workspace, std::uint64_t seed, std::uint64_t cap) {
  StateVector state(field, workspace, cap);
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss;
  for (Eigen::Index i = 0; i < state.amplitudes().size(); ++i) {
    state.amplitudes()[i] = {gauss(rng), gauss(rng)};
  }
  state.amplitudes().normalize();
  return state;
}

}  // namespace

bool all_pass(const std::vector<PropertyCheck>& checks) {
  for (const auto& c : checks) {
    if (!c.pass) return false;
  }
  return true;
}

std::vector<PropertyCheck> verify_counting(const FieldSpec& field, std::uint64_t cap) {
  const int n = field.n();
  const std::uint32_t p = field.p();
  const std::uint64_t size = field.space_size();
  const MatrixCensus census(field, cap);
  std::vector<PropertyCheck> out;

  // Ordered h-tuples of vectors, i.e. the first h columns of every matrix with
  // the remaining columns zero. Reuse the census index space: tuple t -> t-th digits.
  bool alpha_ok = true, beta_rref_ok = true, beta_enum_ok = true, fd_ok = true, dual_ok = true;
  std::ostringstream detail;
  for (int h = 0; h <= n; ++h) {
    const std::uint64_t tuples = *checked_pow(size, static_cast<std::uint64_t>(h));
    std::uint64_t independent = 0;
    std::set<std::vector<Residue>> spans;
    for (std::uint64_t t = 0; t < tuples; ++t) {
      FpRows rows(h, n);
      std::uint64_t digits = t;
      for (int r = 0; r < h; ++r) {
        rows.row(r) = field.vector_at(digits % size).transpose();
        digits /= size;
      }
      const Subspace s = Subspace::span(field, rows);
      if (s.dim() != h) continue;
      ++independent;
      spans.insert(key_of(s));
    }
    const mpz_class a = alpha(p, n, h), b = beta(p, n, h);
    if (a != static_cast<unsigned long>(independent)) {
      alpha_ok = false;
      detail << "alpha " << hd(h) << ": " << a << " vs " << independent << "; ";
    }
    if (b != static_cast<unsigned long>(spans.size())) {
      beta_rref_ok = false;
      detail << "beta " << hd(h) << ": " << b << " vs " << spans.size() << " RREF bases; ";
    }
    std::set<std::vector<Residue>> listed;
    for (const Subspace& s : enumerate_subspaces(field, h, cap)) listed.insert(key_of(s));
    if (listed != spans) beta_enum_ok = false;
    if (count_fd(p, n, h) != static_cast<unsigned long>(census.count(h))) {
      fd_ok = false;
      detail << "count_FD " << hd(h) << " mismatch; ";
    }
    if (beta(p, n, h) != beta(p, n, n - h)) dual_ok = false;
  }
  mpz_class total = 0, expected;
  for (int h = 0; h <= n; ++h) total += count_fd(p, n, h);
  mpz_ui_pow_ui(expected.get_mpz_t(), p, static_cast<unsigned long>(n * n));

  out.push_back({"alpha_matches_independent_tuples", alpha_ok, detail.str()});
  out.push_back({"beta_matches_distinct_rref_bases", beta_rref_ok, ""});
  out.push_back({"subspace_enumeration_matches_rref_bases", beta_enum_ok, ""});
  out.push_back({"count_fd_matches_matrix_census", fd_ok, ""});
  out.push_back({"sum_count_fd_is_p^(n^2)", total == expected, total.get_str() + " vs " + expected.get_str()});
  out.push_back({"beta_duality", dual_ok, ""});
  return out;
}

std::vector<PropertyCheck> verify_lemma2(const FieldSpec& field, int max_domain, std::uint64_t cap) {
  const MatrixCensus census(field, cap);
  const int n = field.n();
  std::uint64_t checked = 0, closed_bad = 0, part3_bad = 0, degree_bad = 0, range_bad = 0;
  std::string first_failure;

  for_each_partial_function(field, max_domain, [&](const PartialFn& s) {
    const auto ext = linear_consistency(s);
    if (!ext) return;
    ++checked;
    const Part3Report part3 = verify_part3(s, census);
    if (!part3.pass) ++part3_bad;
    std::vector<mpq_class> xs, ys;
    bool closed_ok = true, range_ok = true;
    for (int h = 0; h <= n; ++h) {
      const mpq_class brute = q_s_bruteforce(s, h, census);
      const mpq_class closed = part3.common_value ? q_s_closed_form(s, h, part3) : mpq_class(-1);
      if (brute != closed) closed_ok = false;
      if (brute < 0 || brute > 1) range_ok = false;
      mpz_class d;
      mpz_ui_pow_ui(d.get_mpz_t(), field.p(), static_cast<unsigned long>(h));
      xs.emplace_back(d);
      ys.push_back(brute);
    }
    if (!closed_ok) ++closed_bad;
    if (!range_ok) ++range_bad;
    const RationalPoly q = interpolate<mpq_class>(xs, ys);
    if (q.degree() > ext->domain_span.dim()) ++degree_bad;
    if (first_failure.empty() && (!closed_ok || !part3.pass || q.degree() > ext->domain_span.dim())) {
      std::ostringstream os;
      os << "first failing s has |dom|=" << s.domain_size();
      first_failure = os.str();
    }
  });

  // Sum over y of Pr[f(x) = y] is 1 for each single point x and each D.
  bool partition_ok = true;
  const std::uint64_t size = field.space_size();
  for (std::uint64_t x = 0; x < size && partition_ok; ++x) {
    for (int h = 0; h <= n; ++h) {
      mpq_class total = 0;
      for (std::uint64_t y = 0; y < size; ++y) {
        PartialFn s(field);
        s.insert(field.vector_at(x), field.vector_at(y));
        total += q_s_bruteforce(s, h, census);
      }
      if (total != 1) partition_ok = false;
    }
  }

  const std::string count = std::to_string(checked) + " consistent partial functions";
  return {
      {"closed_form_equals_bruteforce", closed_bad == 0, count + ", " + std::to_string(closed_bad) + " mismatches"},
      {"part3_independent_of_h", part3_bad == 0, std::to_string(part3_bad) + " failures"},
      {"degree_at_most_dim_span_domain", degree_bad == 0, std::to_string(degree_bad) + " violations"},
      {"probabilities_in_unit_interval", range_bad == 0, ""},
      {"singleton_partition_sums_to_one", partition_ok, first_failure},
  };
}

std::vector<PropertyCheck> verify_qsim(const FieldSpec& field, std::uint64_t cap, std::uint64_t sim_cap) {
  const MatrixCensus census(field, cap);
  std::uint64_t support_bad = 0, inverse_bad = 0, norm_bad = 0, self_inverse_bad = 0;
  double worst_uniform = 0.0;

  for (std::size_t i = 0; i < census.size(); ++i) {
    const FpMatrix& f = census.matrix(i);
    const Subspace perp = annihilator(census.kernel(i));
    const double expected = 1.0 / static_cast<double>(perp.cardinality());
    const std::vector<double> dist = simon_round_distribution(f, sim_cap);
    bool ok = true;
    for (std::size_t y = 0; y < dist.size(); ++y) {
      const bool inside = perp.contains(field.vector_at(y));
      const double err = std::abs(dist[y] - (inside ? expected : 0.0));
      worst_uniform = std::max(worst_uniform, err);
      if (err > kNormTolerance) ok = false;
    }
    if (!ok) ++support_bad;

    StateVector state = random_state(field, 2, 1000 + i, sim_cap);
    const Eigen::VectorXcd before = state.amplitudes();
    apply_oracle(state, f);
    if (std::abs(state.norm() - before.norm()) > 1e-12) ++norm_bad;
    StateVector twice = state;
    apply_oracle(state, f.negated());
    if (state.amplitudes() != before) ++inverse_bad;
    if (field.p() == 2) {
      apply_oracle(twice, f);
      if (twice.amplitudes() != before) ++self_inverse_bad;
    }
  }

  StateVector state = random_state(field, 2, 7, sim_cap);
  const Eigen::VectorXcd before = state.amplitudes();
  apply_qft_query(state);
  const double qft_norm_err = std::abs(state.norm() - 1.0);
  apply_qft_query(state, true);
  const double roundtrip_err = (state.amplitudes() - before).cwiseAbs().maxCoeff();

  std::ostringstream worst;
  worst << "max deviation " << worst_uniform;
  return {
      {"fourier_support_is_annihilator_of_kernel", support_bad == 0,
       std::to_string(census.size()) + " maps, " + worst.str()},
      {"oracle_preserves_norm", norm_bad == 0, ""},
      {"oracle_then_negated_oracle_restores_state", inverse_bad == 0, ""},
      {"oracle_self_inverse_at_p2", self_inverse_bad == 0, field.p() == 2 ? "" : "not applicable (p != 2)"},
      {"qft_preserves_norm", qft_norm_err <= 1e-12, ""},
      {"qft_inverse_round_trip", roundtrip_err <= 1e-12, ""},
  };
}

}  // namespace simonlab
