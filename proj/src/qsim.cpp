#include "simonlab/qsim.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <string>

#include "simonlab/error.hpp"

namespace simonlab {

namespace {

using RowMajorXcd = Eigen::Matrix<std::complex<double>, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

std::uint64_t checked_state_size(const FieldSpec& field, int workspace_dim, std::uint64_t cap) {
  if (workspace_dim < 1) throw DomainError("workspace dimension must be >= 1");
  const auto reg = checked_pow(field.p(), static_cast<std::uint64_t>(field.n()));
  const auto two_reg = checked_pow(field.p(), 2 * static_cast<std::uint64_t>(field.n()));
  if (!reg || !two_reg || *two_reg > UINT64_MAX / static_cast<std::uint64_t>(workspace_dim)) {
    throw CapExceeded("state vector", cap, UINT64_MAX);
  }
  const std::uint64_t total = *two_reg * static_cast<std::uint64_t>(workspace_dim);
  if (total > cap) throw CapExceeded("state vector", cap, total);
  return *reg;
}

Eigen::MatrixXcd digit_dft(std::uint32_t p, bool inverse) {
  Eigen::MatrixXcd f(p, p);
  const double sign = inverse ? -1.0 : 1.0;
  const double scale = 1.0 / std::sqrt(static_cast<double>(p));
  for (std::uint32_t a = 0; a < p; ++a) {
    for (std::uint32_t c = 0; c < p; ++c) {
      // Reduce the exponent first so large p keeps full phase accuracy.
      const double turns = static_cast<double>((static_cast<std::uint64_t>(a) * c) % p) / p;
      f(a, c) = std::polar(scale, sign * 2.0 * std::numbers::pi * turns);
    }
  }
  return f;
}

}  // namespace

StateVector::StateVector(FieldSpec field, int workspace_dim, std::uint64_t cap)
    : field_(field),
      workspace_dim_(workspace_dim),
      register_size_(checked_state_size(field, workspace_dim, cap)) {
  amplitudes_ = Eigen::VectorXcd::Zero(
      static_cast<Eigen::Index>(register_size_ * register_size_ * static_cast<std::uint64_t>(workspace_dim)));
  amplitudes_[0] = 1.0;
}

std::vector<double> StateVector::marginal(Register reg) const {
  const std::uint64_t m = static_cast<std::uint64_t>(workspace_dim_);
  std::vector<double> out(reg == Register::kWork ? m : register_size_, 0.0);
  for (std::uint64_t i = 0; i < register_size_; ++i) {
    for (std::uint64_t b = 0; b < register_size_; ++b) {
      for (std::uint64_t w = 0; w < m; ++w) {
        const double prob = std::norm(at(i, b, w));
        switch (reg) {
          case Register::kQuery:
            out[i] += prob;
            break;
          case Register::kOutput:
            out[b] += prob;
            break;
          case Register::kWork:
            out[w] += prob;
            break;
        }
      }
    }
  }
  return out;
}

void apply_oracle(StateVector& state, const FpMatrix& f) {
  const FieldSpec& field = state.field();
  require_same_field(field, f.field(), "apply_oracle");
  const std::uint64_t size = state.register_size();
  const std::uint64_t m = static_cast<std::uint64_t>(state.workspace_dim());
  const int n = field.n();

  Eigen::VectorXcd out(state.amplitudes().size());
  std::vector<Residue> fx(static_cast<std::size_t>(n));
  for (std::uint64_t x = 0; x < size; ++x) {
    const FpVector image = f.apply(field.vector_at(x));
    for (int d = 0; d < n; ++d) fx[static_cast<std::size_t>(d)] = image[d];
    for (std::uint64_t b = 0; b < size; ++b) {
      // b + f(x), digit by digit.
      std::uint64_t shifted = 0, place = 1, rest = b;
      for (int d = 0; d < n; ++d) {
        const auto digit = static_cast<Residue>(rest % field.p());
        rest /= field.p();
        shifted += static_cast<std::uint64_t>(field.add(digit, fx[static_cast<std::size_t>(d)])) * place;
        place *= field.p();
      }
      for (std::uint64_t w = 0; w < m; ++w) {
        out[static_cast<Eigen::Index>(state.flat_index(x, shifted, w))] = state.at(x, b, w);
      }
    }
  }
  state.amplitudes() = std::move(out);
}

void apply_qft_query(StateVector& state, bool inverse) {
  const FieldSpec& field = state.field();
  const std::uint32_t p = field.p();
  const std::uint64_t size = state.register_size();
  const auto block = static_cast<Eigen::Index>(size * static_cast<std::uint64_t>(state.workspace_dim()));
  const Eigen::MatrixXcd dft = digit_dft(p, inverse);

  Eigen::Map<RowMajorXcd> view(state.amplitudes().data(), static_cast<Eigen::Index>(size), block);
  RowMajorXcd gathered(p, block);
  std::uint64_t stride = 1;
  for (int d = 0; d < field.n(); ++d) {
    for (std::uint64_t base = 0; base < size; ++base) {
      if ((base / stride) % p != 0) continue;
      for (std::uint32_t a = 0; a < p; ++a) {
        gathered.row(a) = view.row(static_cast<Eigen::Index>(base + a * stride));
      }
      const RowMajorXcd mixed = dft * gathered;
      for (std::uint32_t a = 0; a < p; ++a) {
        view.row(static_cast<Eigen::Index>(base + a * stride)) = mixed.row(a);
      }
    }
    stride *= p;
  }
}

void apply_dense(StateVector& state, Register reg, const Eigen::MatrixXcd& u) {
  const auto size = static_cast<Eigen::Index>(state.register_size());
  const auto m = static_cast<Eigen::Index>(state.workspace_dim());
  const Eigen::Index expected = reg == Register::kWork ? m : size;
  if (u.rows() != expected || u.cols() != expected) {
    throw DimensionMismatch("dense unitary is " + std::to_string(u.rows()) + "x" + std::to_string(u.cols()) +
                            ", register has dimension " + std::to_string(expected));
  }
  std::complex<double>* data = state.amplitudes().data();
  switch (reg) {
    case Register::kQuery: {
      Eigen::Map<RowMajorXcd> view(data, size, size * m);
      view = (u * view).eval();
      break;
    }
    case Register::kOutput: {
      for (Eigen::Index i = 0; i < size; ++i) {
        Eigen::Map<RowMajorXcd> view(data + i * size * m, size, m);
        view = (u * view).eval();
      }
      break;
    }
    case Register::kWork: {
      Eigen::Map<RowMajorXcd> view(data, size * size, m);
      view = (view * u.transpose()).eval();
      break;
    }
  }
}

Eigen::MatrixXcd fourier_matrix(const FieldSpec& field, bool inverse) {
  const std::uint64_t size = field.space_size();
  const auto dim = static_cast<Eigen::Index>(size);
  Eigen::MatrixXcd f(dim, dim);
  const double scale = 1.0 / std::sqrt(static_cast<double>(size));
  const double sign = inverse ? -1.0 : 1.0;
  for (std::uint64_t y = 0; y < size; ++y) {
    const FpVector vy = field.vector_at(y);
    for (std::uint64_t x = 0; x < size; ++x) {
      const double turns = static_cast<double>(field.dot(field.vector_at(x), vy)) / field.p();
      f(static_cast<Eigen::Index>(y), static_cast<Eigen::Index>(x)) =
          std::polar(scale, sign * 2.0 * std::numbers::pi * turns);
    }
  }
  return f;
}

bool is_unitary(const Eigen::MatrixXcd& u, double tol) {
  if (u.rows() != u.cols()) return false;
  const Eigen::MatrixXcd gram = u.adjoint() * u;
  return (gram - Eigen::MatrixXcd::Identity(u.rows(), u.cols())).cwiseAbs().maxCoeff() <= tol;
}

// ---------------------------------------------------------------------------
// Circuit

Circuit::Circuit(FieldSpec field, int workspace_dim, std::vector<CircuitOp> ops, std::vector<FpVector> accept)
    : field_(field), workspace_dim_(workspace_dim), ops_(std::move(ops)) {
  if (workspace_dim < 1) throw DomainError("workspace dimension must be >= 1");
  const std::uint64_t size = field.space_size();
  for (const CircuitOp& op : ops_) {
    const auto* dense = std::get_if<DenseUnitary>(&op);
    if (!dense) continue;
    const auto expected = static_cast<Eigen::Index>(dense->reg == Register::kWork
                                                        ? static_cast<std::uint64_t>(workspace_dim)
                                                        : size);
    if (dense->matrix.rows() != expected || dense->matrix.cols() != expected) {
      throw DimensionMismatch("dense op does not match its register dimension " + std::to_string(expected));
    }
    if (!is_unitary(dense->matrix)) throw PreconditionError("dense op is not unitary within 1e-9");
  }
  accept_mask_.assign(size, false);
  for (const FpVector& v : accept) {
    FpVector normalized = field.normalize(v);
    const std::uint64_t idx = field.index_of(normalized);
    if (accept_mask_[idx]) continue;
    accept_mask_[idx] = true;
    accept_.push_back(std::move(normalized));
  }
}

int Circuit::query_count() const {
  int count = 0;
  for (const CircuitOp& op : ops_) count += std::holds_alternative<OracleCall>(op) ? 1 : 0;
  return count;
}

StateVector simulate(const Circuit& c, const FpMatrix& f, std::uint64_t cap) {
  require_same_field(c.field(), f.field(), "run_circuit");
  StateVector state(c.field(), c.workspace_dim(), cap);
  for (const CircuitOp& op : c.ops()) {
    if (std::holds_alternative<QftQuery>(op)) {
      apply_qft_query(state, false);
    } else if (std::holds_alternative<IqftQuery>(op)) {
      apply_qft_query(state, true);
    } else if (std::holds_alternative<OracleCall>(op)) {
      apply_oracle(state, f);
    } else {
      const auto& dense = std::get<DenseUnitary>(op);
      apply_dense(state, dense.reg, dense.matrix);
    }
  }
  if (std::abs(state.norm() - 1.0) > kNormTolerance) {
    throw Error("simulation lost normalization: norm " + std::to_string(state.norm()));
  }
  return state;
}

double run_circuit(const Circuit& c, const FpMatrix& f, std::uint64_t cap) {
  const StateVector state = simulate(c, f, cap);
  const std::vector<double> output = state.marginal(Register::kOutput);
  double accepted = 0.0;
  for (std::size_t b = 0; b < output.size(); ++b) {
    if (c.accept_mask()[b]) accepted += output[b];
  }
  return accepted;
}

std::vector<double> simon_round_distribution(const FpMatrix& f, std::uint64_t cap) {
  StateVector state(f.field(), 1, cap);
  apply_qft_query(state);
  apply_oracle(state, f);
  apply_qft_query(state);
  return state.marginal(Register::kQuery);
}

mpq_class spanning_probability(std::uint32_t p, int n, int rounds) {
  if (rounds < 0) throw DomainError("round count must be >= 0");
  mpq_class prob = 1;
  for (int i = 0; i < n; ++i) {
    if (i >= rounds) return 0;
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), p, static_cast<unsigned long>(rounds - i));
    prob *= mpq_class(1) - mpq_class(1, scale);
  }
  prob.canonicalize();
  return prob;
}

SimonTranscript simon_decide(const LinearInstance& f, int rounds, std::uint64_t seed, std::uint64_t cap) {
  if (f.label == PromiseLabel::kUnrestricted) {
    throw PromiseViolation("kernel dimension " + std::to_string(f.kernel_dim) + " is outside the promise");
  }
  if (rounds < 0) throw DomainError("round count must be >= 0");
  const FieldSpec& field = f.field();

  // Entries below the norm tolerance are numerical residue outside H^perp.
  std::vector<double> dist = simon_round_distribution(f.matrix, cap);
  double total = 0.0;
  for (double& pr : dist) {
    if (pr < kNormTolerance) pr = 0.0;
    total += pr;
  }

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> uniform(0.0, total);
  SimonTranscript t;
  for (int r = 0; r < rounds; ++r) {
    const double u = uniform(rng);
    double acc = 0.0;
    std::size_t pick = 0;
    for (std::size_t y = 0; y < dist.size(); ++y) {
      if (dist[y] == 0.0) continue;
      pick = y;
      acc += dist[y];
      if (u < acc) break;
    }
    t.samples.push_back(field.vector_at(pick));
  }
  t.span_dim = Subspace::span(field, std::span<const FpVector>(t.samples)).dim();
  t.answer = t.span_dim == field.n() ? PromiseLabel::kOneToOne : PromiseLabel::kKernelP;
  t.predicted_success =
      f.label == PromiseLabel::kOneToOne ? spanning_probability(field.p(), field.n(), rounds) : mpq_class(1);
  return t;
}

}  // namespace simonlab
