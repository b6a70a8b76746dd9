// simonlab: batch front end. Every command prints one canonical JSON report
// {"command","params","result"} (or a TSV table with --tsv) on stdout.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "simonlab/circuits.hpp"
#include "simonlab/classical.hpp"
#include "simonlab/counting.hpp"
#include "simonlab/error.hpp"
#include "simonlab/json_io.hpp"
#include "simonlab/lemma1.hpp"
#include "simonlab/polymethod.hpp"
#include "simonlab/qsim.hpp"
#include "simonlab/trials.hpp"
#include "simonlab/verify.hpp"

using namespace simonlab;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct Globals {
  std::optional<std::uint64_t> cap;
  int jobs = 1;
  bool tsv = false;
  std::optional<std::uint64_t> seed;

  std::uint64_t enum_cap() const { return cap.value_or(kDefaultEnumerationCap); }
  std::uint64_t sim_cap() const { return cap.value_or(kDefaultSimulatorCap); }

  std::uint64_t effective_seed() const {
    if (seed) return *seed;
    if (const char* env = std::getenv("SIMONLAB_SEED")) {
      try {
        std::size_t used = 0;
        const std::uint64_t v = std::stoull(env, &used);
        if (used == std::string(env).size()) return v;
      } catch (const std::exception&) {
      }
      throw DomainError(std::string("SIMONLAB_SEED is not an unsigned integer: ") + env);
    }
    return 0;
  }
};

int emit(const std::string& command, Json params, Json result, int code = kExitOk) {
  Json report{{"command", command}, {"params", std::move(params)}, {"result", std::move(result)}};
  write_canonical(std::cout, report);
  return code;
}

std::string fmt_double(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string bits(const FpVector& v) {
  std::string out;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(v[i]);
  }
  return out;
}

Json checks_to_json(const std::vector<PropertyCheck>& checks) {
  Json out = Json::array();
  for (const auto& c : checks) {
    out.push_back(Json{{"name", c.name}, {"status", c.pass ? "PASS" : "FAIL"}, {"detail", c.detail}});
  }
  return out;
}

// ---------------------------------------------------------------------------

int cmd_count(const Globals& g, std::uint32_t p, int n, std::optional<int> h_only) {
  const FieldSpec field(p, n);
  std::vector<int> hs;
  if (h_only) {
    if (*h_only < 0 || *h_only > n) throw DomainError("--h must lie in [0, n]");
    hs.push_back(*h_only);
  } else {
    for (int h = 0; h <= n; ++h) hs.push_back(h);
  }
  if (g.tsv) {
    std::cout << "h\talpha\tbeta\tcount_fd\n";
    for (int h : hs) {
      std::cout << h << '\t' << alpha(p, n, h) << '\t' << beta(p, n, h) << '\t' << count_fd(p, n, h) << '\n';
    }
    return kExitOk;
  }
  Json rows = Json::array();
  for (int h : hs) {
    rows.push_back(Json{{"h", h},
                        {"alpha", alpha(p, n, h).get_str()},
                        {"beta", beta(p, n, h).get_str()},
                        {"count_fd", count_fd(p, n, h).get_str()}});
  }
  mpz_class total;
  mpz_ui_pow_ui(total.get_mpz_t(), p, static_cast<unsigned long>(n * n));
  Json params{{"p", p}, {"n", n}, {"h", h_only ? Json(*h_only) : Json(nullptr)}};
  return emit("count", std::move(params), Json{{"rows", std::move(rows)}, {"matrices", total.get_str()}});
}

int cmd_kernel(const std::string& path) {
  const FpMatrix m = matrix_from_json(read_json_file(path));
  const LinearInstance f = make_linear(m);
  Json result{{"kernel", subspace_to_json(f.kernel)}, {"dim", f.kernel_dim}, {"label", std::string(to_string(f.label))}};
  return emit("kernel", Json{{"matrix", path}}, std::move(result));
}

int cmd_simulate(const Globals& g, std::uint32_t p, int n, int kernel_dim, std::optional<int> rounds_opt, int trials) {
  const FieldSpec field(p, n);
  if (kernel_dim != 0 && kernel_dim != 1) throw DomainError("--kernel-dim must be 0 or 1");
  if (trials < 1) throw DomainError("--trials must be positive");
  const int rounds = rounds_opt.value_or(default_simon_rounds(n));
  if (rounds < 0) throw DomainError("--rounds must be non-negative");
  const std::uint64_t seed = g.effective_seed();
  // Fail fast on the simulator cap.
  StateVector probe(field, 1, g.sim_cap());

  struct Trial {
    int correct = 0;
    SimonTranscript transcript;
    FpMatrix matrix;
  };
  const auto results = run_trials(static_cast<std::size_t>(trials), g.jobs, [&](std::size_t t) {
    const std::uint64_t s = trial_seed(seed, t);
    const LinearInstance f = make_linear(sample_fd(field, kernel_dim, s));
    SimonTranscript tr = simon_decide(f, rounds, mix_seed(s), g.sim_cap());
    const int correct = tr.answer == f.label ? 1 : 0;
    return Trial{correct, std::move(tr), f.matrix};
  });

  std::uint64_t successes = 0;
  for (const auto& r : results) successes += static_cast<std::uint64_t>(r.correct);
  const Trial& first = results.front();
  Json samples = Json::array();
  for (const FpVector& v : first.transcript.samples) samples.push_back(vector_to_json(v));
  const mpq_class predicted = first.transcript.predicted_success;

  Json params{{"p", p}, {"n", n}, {"kernel_dim", kernel_dim}, {"rounds", rounds}, {"trials", trials}, {"seed", seed}};
  Json result{{"successes", successes},
              {"success_rate", static_cast<double>(successes) / trials},
              {"predicted_success", rational_string(predicted)},
              {"predicted_success_value", predicted.get_d()},
              {"queries_used", rounds},
              {"transcript",
               Json{{"matrix", matrix_to_json(first.matrix)},
                    {"samples", std::move(samples)},
                    {"span_dim", first.transcript.span_dim},
                    {"answer", std::string(to_string(first.transcript.answer))}}}};
  return emit("simulate", std::move(params), std::move(result));
}

int cmd_round_dist(const Globals& g, const std::string& path) {
  const FpMatrix m = matrix_from_json(read_json_file(path));
  const FieldSpec& field = m.field();
  const std::vector<double> dist = simon_round_distribution(m, g.sim_cap());
  const Subspace perp = annihilator(kernel(m));
  if (g.tsv) {
    std::cout << "index\ty\tprobability\n";
    for (std::size_t i = 0; i < dist.size(); ++i) {
      std::cout << i << '\t' << bits(field.vector_at(i)) << '\t' << fmt_double(dist[i]) << '\n';
    }
    return kExitOk;
  }
  Json rows = Json::array();
  for (std::size_t i = 0; i < dist.size(); ++i) {
    rows.push_back(Json{{"y", vector_to_json(field.vector_at(i))}, {"probability", dist[i]}});
  }
  const mpq_class exact(1, mpz_class(perp.cardinality()));
  Json result{{"distribution", std::move(rows)},
              {"annihilator", subspace_to_json(perp)},
              {"exact_probability_on_support", rational_string(exact)},
              {"queries_used", 1}};
  return emit("round-dist", Json{{"matrix", path}}, std::move(result));
}

int cmd_qs(const Globals& g, const std::string& path, const std::string& mode) {
  const PartialFn s = partial_from_json(read_json_file(path));
  const FieldSpec& field = s.field();
  const MatrixCensus census(field, g.enum_cap());
  const auto ext = linear_consistency(s);
  const int bound = s.domain_span().dim();

  std::optional<QTable> brute, closed;
  if (mode == "brute" || mode == "both") brute = q_s_table(s, QsMode::kBrute, census);
  if (mode == "closed" || mode == "both") closed = q_s_table(s, QsMode::kClosed, census);
  const QTable& primary = brute ? *brute : *closed;
  const RationalPoly q = interpolate(primary);
  bool agree = true;
  if (brute && closed) {
    for (std::size_t i = 0; i < brute->points().size(); ++i) {
      if (brute->points()[i].value != closed->points()[i].value) agree = false;
    }
  }
  const bool degree_ok = q.degree() <= bound;
  const bool pass = degree_ok && agree;

  if (g.tsv) {
    std::cout << "k\tD";
    if (brute) std::cout << "\tbrute";
    if (closed) std::cout << "\tclosed";
    std::cout << '\n';
    for (std::size_t i = 0; i < primary.points().size(); ++i) {
      const auto& pt = primary.points()[i];
      std::cout << pt.k << '\t' << pt.d;
      if (brute) std::cout << '\t' << rational_string(brute->points()[i].value);
      if (closed) std::cout << '\t' << rational_string(closed->points()[i].value);
      std::cout << '\n';
    }
    return pass ? kExitOk : kExitFail;
  }

  Json result{{"consistent", ext.has_value()}};
  if (brute) result["brute"] = qtable_to_json(*brute);
  if (closed) result["closed"] = qtable_to_json(*closed);
  if (closed && ext) result["part3"] = part3_to_json(verify_part3(s, census));
  if (brute && closed) result["modes_agree"] = agree;
  result["polynomial"] = rational_poly_to_json(q);
  result["degree"] = q.degree();
  result["bound"] = bound;
  result["status"] = pass ? "PASS" : "FAIL";
  result["pass"] = pass;
  return emit("qs", Json{{"partial", path}, {"mode", mode}}, std::move(result), pass ? kExitOk : kExitFail);
}

int cmd_qofd(const Globals& g, const std::optional<std::string>& path, const std::optional<std::string>& bundled,
             std::uint32_t p, int n, double tolerance) {
  std::optional<Circuit> circuit;
  Json params;
  if (path) {
    circuit = circuit_from_json(read_json_file(*path));
    params["circuit"] = *path;
  } else {
    const FieldSpec field(p, n);
    for (auto& nc : bundled_circuits(field)) {
      if (nc.name == *bundled) circuit = nc.circuit;
    }
    if (!circuit) throw DomainError("unknown bundled circuit: " + *bundled);
    params["bundled"] = *bundled;
    params["p"] = p;
    params["n"] = n;
  }
  params["tolerance"] = tolerance;
  const MatrixCensus census(circuit->field(), g.enum_cap());
  const QofDReport r = q_of_d(*circuit, census, g.jobs, g.sim_cap(), tolerance);
  const int bound = 2 * r.query_count;
  const bool pass = r.fit.degree >= 0 && r.fit.degree <= bound;

  if (g.tsv) {
    std::cout << "D\tQ\n";
    for (std::size_t i = 0; i < r.d_values.size(); ++i) {
      std::cout << fmt_double(r.d_values[i]) << '\t' << fmt_double(r.q_values[i]) << '\n';
    }
    return pass ? kExitOk : kExitFail;
  }
  Json table = Json::array();
  for (std::size_t i = 0; i < r.d_values.size(); ++i) {
    table.push_back(Json{{"k", static_cast<int>(i)}, {"D", r.d_values[i]}, {"Q", r.q_values[i]}});
  }
  Json coeffs = Json::array();
  for (double c : r.fit.polynomial.coefficients()) coeffs.push_back(c);
  Json result{{"p", r.p},
              {"n", r.n},
              {"queries_used", r.query_count},
              {"table", std::move(table)},
              {"degree", r.fit.degree},
              {"bound", bound},
              {"residuals", r.fit.residuals},
              {"coefficients", std::move(coeffs)},
              {"status", pass ? "PASS" : "FAIL"},
              {"pass", pass}};
  return emit("qofd", std::move(params), std::move(result), pass ? kExitOk : kExitFail);
}

int cmd_lemma1(std::uint32_t p, int n, std::optional<int> max_degree) {
  const Lemma1Instance inst(p, n);
  const MinDegreeReport r = min_feasible_degree(inst, max_degree.value_or(n));
  Json params{{"p", p}, {"n", n}, {"max_degree", max_degree.value_or(n)}};
  return emit("lemma1", std::move(params), lemma1_to_json(r), r.bound_certified ? kExitOk : kExitFail);
}

int cmd_verify(const Globals& g, const std::string& suite, std::uint32_t p, int n, int max_domain) {
  const FieldSpec field(p, n);
  Json suites = Json::object();
  bool pass = true;
  auto run = [&](const std::string& name, const std::vector<PropertyCheck>& checks) {
    pass = pass && all_pass(checks);
    suites[name] = checks_to_json(checks);
  };
  if (suite == "counting" || suite == "all") run("counting", verify_counting(field, g.enum_cap()));
  if (suite == "lemma2" || suite == "all") run("lemma2", verify_lemma2(field, max_domain, g.enum_cap()));
  if (suite == "qsim" || suite == "all") run("qsim", verify_qsim(field, g.enum_cap(), g.sim_cap()));

  if (g.tsv) {
    std::cout << "suite\tcheck\tstatus\n";
    for (const auto& [name, checks] : suites.items()) {
      for (const auto& c : checks) {
        std::cout << name << '\t' << c["name"].get<std::string>() << '\t' << c["status"].get<std::string>() << '\n';
      }
    }
    return pass ? kExitOk : kExitFail;
  }
  Json params{{"suite", suite}, {"p", p}, {"n", n}, {"max_domain", max_domain}};
  Json result{{"suites", std::move(suites)}, {"status", pass ? "PASS" : "FAIL"}, {"pass", pass}};
  return emit("verify", std::move(params), std::move(result), pass ? kExitOk : kExitFail);
}

int cmd_basis(const std::string& path) {
  const FpMatrix m = matrix_from_json(read_json_file(path));
  const BasisSolveResult r = basis_solve(m.field(), [&](const FpVector& x) { return m.apply(x); });
  Json result{{"label", std::string(to_string(r.label))},
              {"queries_used", r.queries_used},
              {"reconstructed", matrix_to_json(r.reconstructed)}};
  return emit("classical basis", Json{{"matrix", path}}, std::move(result));
}

int cmd_collision(const Globals& g, int n, bool two_to_one, std::optional<std::uint32_t> shift, std::uint64_t budget,
                  int trials) {
  if (n < 1 || n > kMaxGeneralBits) throw DomainError("--n must lie in [1, " + std::to_string(kMaxGeneralBits) + "]");
  if (trials < 1) throw DomainError("--trials must be positive");
  if (shift) two_to_one = true;
  const std::uint64_t seed = g.effective_seed();
  const std::uint32_t size = std::uint32_t{1} << n;

  struct Trial {
    CollisionResult r;
    std::optional<std::uint32_t> shift;
  };
  const auto results = run_trials(static_cast<std::size_t>(trials), g.jobs, [&](std::size_t t) {
    const std::uint64_t s = trial_seed(seed, t);
    std::optional<std::uint32_t> hs = shift;
    if (two_to_one && !hs) hs = static_cast<std::uint32_t>(1 + mix_seed(s) % (size - 1));
    const GeneralInstance inst = make_general(n, hs, s);
    return Trial{collision_search(inst, budget, mix_seed(s ^ 0x5bd1e995ULL)), hs};
  });

  std::uint64_t found = 0, queries = 0;
  for (const auto& t : results) {
    found += t.r.found ? 1 : 0;
    queries += t.r.queries_used;
  }
  const CollisionResult& first = results.front().r;
  Json params{{"n", n},   {"two_to_one", two_to_one}, {"shift", shift ? Json(*shift) : Json(nullptr)},
              {"budget", budget}, {"trials", trials}, {"seed", seed}};
  Json result{{"found", found},
              {"rate", static_cast<double>(found) / trials},
              {"queries_used", queries},
              {"effective_budget", first.budget}};
  if (two_to_one) {
    const mpq_class exact = collision_probability(n, first.budget);
    result["exact_probability"] = rational_string(exact);
    result["exact_probability_value"] = exact.get_d();
  } else {
    result["exact_probability"] = "0";
    result["exact_probability_value"] = 0.0;
  }
  Json sample{{"outcome", first.found ? "COLLISION_FOUND" : "NO_COLLISION"}, {"queries_used", first.queries_used}};
  if (first.found) {
    sample["x"] = first.x;
    sample["x_prime"] = first.x_prime;
  }
  result["first_trial"] = std::move(sample);
  if (first.warning) {
    result["warning"] = *first.warning;
    std::cerr << "warning: " << *first.warning << '\n';
  }
  return emit("classical collision", std::move(params), std::move(result));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"simonlab: linear Simon's problem toolkit"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  std::uint64_t cap_value = 0, seed_value = 0;
  auto* cap_opt = app.add_option("--cap", cap_value, "Override the enumeration and simulator size caps");
  auto* seed_opt = app.add_option("--seed", seed_value, "Base seed (falls back to SIMONLAB_SEED, then 0)");
  app.add_option("--jobs", g.jobs, "Worker threads")->check(CLI::PositiveNumber);
  app.add_flag("--tsv", g.tsv, "Emit tables as TSV");

  std::uint32_t p = 2;
  int n = 2;
  std::optional<int> h, rounds, max_degree;
  int kernel_dim = 0, trials = 1, max_domain = 3;
  std::string matrix_path, partial_path, mode = "both", suite = "all";
  std::optional<std::string> circuit_path, bundled;
  double tolerance = 1e-6;
  bool two_to_one = false;
  std::optional<std::uint32_t> shift;
  std::uint64_t budget = 1;

  auto* count = app.add_subcommand("count", "alpha / beta / |F_D| table");
  count->add_option("--p", p)->required();
  count->add_option("--n", n)->required();
  count->set_help_flag("--help", "Print this help message and exit");
  count->add_option("--h", h);

  auto* kern = app.add_subcommand("kernel", "Kernel basis, dimension and promise label");
  kern->add_option("--matrix", matrix_path)->required();

  auto* sim = app.add_subcommand("simulate", "Monte Carlo run of the Fourier-sampling decision rule");
  sim->add_option("--p", p)->required();
  sim->add_option("--n", n)->required();
  sim->add_option("--kernel-dim", kernel_dim)->required();
  sim->add_option("--rounds", rounds, "Default n+3");
  sim->add_option("--trials", trials);

  auto* rd = app.add_subcommand("round-dist", "Exact single-round Fourier sampling distribution");
  rd->add_option("--matrix", matrix_path)->required();

  auto* qs = app.add_subcommand("qs", "Q_s(D) table and its interpolated degree");
  qs->add_option("--partial", partial_path)->required();
  qs->add_option("--mode", mode)->check(CLI::IsMember({"brute", "closed", "both"}));

  auto* qofd = app.add_subcommand("qofd", "Q(D) of a circuit averaged over F_D, with a degree fit");
  auto* circuit_opt = qofd->add_option("--circuit", circuit_path);
  auto* bundled_opt = qofd->add_option("--bundled", bundled, "Name of a built-in circuit (uses --p, --n)");
  circuit_opt->excludes(bundled_opt);
  qofd->add_option("--p", p);
  qofd->add_option("--n", n);
  qofd->add_option("--tolerance", tolerance);

  auto* l1 = app.add_subcommand("lemma1", "Minimal feasible degree with exact certificates");
  l1->add_option("--p", p)->required();
  l1->add_option("--n", n)->required();
  l1->add_option("--max-degree", max_degree, "Default n");

  auto* ver = app.add_subcommand("verify", "Run a property suite");
  ver->add_option("--suite", suite)->check(CLI::IsMember({"lemma2", "qsim", "counting", "all"}));
  ver->add_option("--p", p)->required();
  ver->add_option("--n", n)->required();
  ver->add_option("--max-domain", max_domain);

  auto* cls = app.add_subcommand("classical", "Classical baselines");
  cls->require_subcommand(1);
  auto* basis = cls->add_subcommand("basis", "Deterministic n-query solver for a linear instance");
  basis->add_option("--matrix", matrix_path)->required();
  auto* coll = cls->add_subcommand("collision", "Randomized collision search on a general instance");
  coll->add_option("--n", n)->required();
  coll->add_flag("--two-to-one", two_to_one, "Draw a 2-to-1 instance with a random hidden shift");
  coll->add_option("--shift", shift, "Hidden shift as an integer bit mask");
  coll->add_option("--budget", budget)->required();
  coll->add_option("--trials", trials);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }
  if (*cap_opt) g.cap = cap_value;
  if (*seed_opt) g.seed = seed_value;

  try {
    if (*count) return cmd_count(g, p, n, h);
    if (*kern) return cmd_kernel(matrix_path);
    if (*sim) return cmd_simulate(g, p, n, kernel_dim, rounds, trials);
    if (*rd) return cmd_round_dist(g, matrix_path);
    if (*qs) return cmd_qs(g, partial_path, mode);
    if (*qofd) {
      if (!circuit_path && !bundled) throw DomainError("qofd needs --circuit FILE or --bundled NAME");
      return cmd_qofd(g, circuit_path, bundled, p, n, tolerance);
    }
    if (*l1) return cmd_lemma1(p, n, max_degree);
    if (*ver) return cmd_verify(g, suite, p, n, max_domain);
    if (*basis) return cmd_basis(matrix_path);
    if (*coll) return cmd_collision(g, n, two_to_one, shift, budget, trials);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
