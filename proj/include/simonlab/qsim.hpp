#ifndef SIMONLAB_QSIM_HPP
#define SIMONLAB_QSIM_HPP

#include <Eigen/Core>
#include <gmpxx.h>

#include <complex>
#include <cstdint>
#include <variant>
#include <vector>

#include "simonlab/field.hpp"
#include "simonlab/instances.hpp"
#include "simonlab/linalg.hpp"

namespace simonlab {

inline constexpr std::uint64_t kDefaultSimulatorCap = std::uint64_t{1} << 20;
inline constexpr double kNormTolerance = 1e-9;
inline constexpr double kUnitaryTolerance = 1e-9;

enum class Register { kQuery, kOutput, kWork };

/// Amplitudes over |i>|b>|w> with i, b in F_p^n and w in [m]. The flat index
/// is (index(i) * p^n + index(b)) * m + w.
class StateVector {
 public:
  /// The fixed start state |0>|0>|0>.
  StateVector(FieldSpec field, int workspace_dim, std::uint64_t cap = kDefaultSimulatorCap);

  const FieldSpec& field() const { return field_; }
  int workspace_dim() const { return workspace_dim_; }
  std::uint64_t register_size() const { return register_size_; }

  const Eigen::VectorXcd& amplitudes() const { return amplitudes_; }
  Eigen::VectorXcd& amplitudes() { return amplitudes_; }

  std::uint64_t flat_index(std::uint64_t i, std::uint64_t b, std::uint64_t w) const {
    return (i * register_size_ + b) * static_cast<std::uint64_t>(workspace_dim_) + w;
  }
  std::complex<double>& at(std::uint64_t i, std::uint64_t b, std::uint64_t w) {
    return amplitudes_[static_cast<Eigen::Index>(flat_index(i, b, w))];
  }
  std::complex<double> at(std::uint64_t i, std::uint64_t b, std::uint64_t w) const {
    return amplitudes_[static_cast<Eigen::Index>(flat_index(i, b, w))];
  }

  double norm() const { return amplitudes_.norm(); }

  /// Measurement distribution of one register (probabilities by basis index).
  std::vector<double> marginal(Register reg) const;

 private:
  FieldSpec field_;
  int workspace_dim_;
  std::uint64_t register_size_;
  Eigen::VectorXcd amplitudes_;
};

/// |x>|b>|w> -> |x>|b + f(x)>|w>, applied as an index permutation.
void apply_oracle(StateVector& state, const FpMatrix& f);
inline void apply_oracle(StateVector& state, const LinearInstance& f) { apply_oracle(state, f.matrix); }

/// |x> -> p^{-n/2} sum_y w^{x.y} |y> on the query register, w = exp(2 pi i / p).
/// Applied digit by digit.
void apply_qft_query(StateVector& state, bool inverse = false);

/// Dense unitary on one register (p^n x p^n for query/output, m x m for work).
void apply_dense(StateVector& state, Register reg, const Eigen::MatrixXcd& u);

/// The p^n x p^n Fourier matrix over F_p^n.
Eigen::MatrixXcd fourier_matrix(const FieldSpec& field, bool inverse = false);

bool is_unitary(const Eigen::MatrixXcd& u, double tol = kUnitaryTolerance);

struct QftQuery {};
struct IqftQuery {};
struct OracleCall {};
struct DenseUnitary {
  Register reg;
  Eigen::MatrixXcd matrix;
};
using CircuitOp = std::variant<QftQuery, IqftQuery, OracleCall, DenseUnitary>;

/// U_T O U_{T-1} ... O U_0 as an op list, plus the output-register values
/// that count as acceptance.
class Circuit {
 public:
  Circuit(FieldSpec field, int workspace_dim, std::vector<CircuitOp> ops, std::vector<FpVector> accept);

  const FieldSpec& field() const { return field_; }
  int workspace_dim() const { return workspace_dim_; }
  const std::vector<CircuitOp>& ops() const { return ops_; }
  const std::vector<FpVector>& accept() const { return accept_; }
  /// Flags indexed by output-register value.
  const std::vector<bool>& accept_mask() const { return accept_mask_; }
  int query_count() const;

 private:
  FieldSpec field_;
  int workspace_dim_;
  std::vector<CircuitOp> ops_;
  std::vector<FpVector> accept_;
  std::vector<bool> accept_mask_;
};

/// Final state of the circuit run against oracle f.
StateVector simulate(const Circuit& c, const FpMatrix& f, std::uint64_t cap = kDefaultSimulatorCap);

/// Acceptance probability P(f).
double run_circuit(const Circuit& c, const FpMatrix& f, std::uint64_t cap = kDefaultSimulatorCap);

/// Exact-simulation distribution of one Fourier-sampling round (uniform
/// superposition, one query, QFT, measure the query register).
std::vector<double> simon_round_distribution(const FpMatrix& f, std::uint64_t cap = kDefaultSimulatorCap);

/// Probability that `rounds` uniform samples from F_p^n span the whole space:
/// prod_{i<n} (1 - p^{i - rounds}).
mpq_class spanning_probability(std::uint32_t p, int n, int rounds);

inline int default_simon_rounds(int n) { return n + 3; }

struct SimonTranscript {
  std::vector<FpVector> samples;
  int span_dim = 0;
  PromiseLabel answer = PromiseLabel::kKernelP;
  /// Exact probability that the rule answers correctly on this input's label.
  mpq_class predicted_success;
};

/// Samples `rounds` Fourier rounds and answers ONE_TO_ONE iff the samples span F_p^n.
SimonTranscript simon_decide(const LinearInstance& f, int rounds, std::uint64_t seed,
                             std::uint64_t cap = kDefaultSimulatorCap);

}  // namespace simonlab

#endif  // SIMONLAB_QSIM_HPP
