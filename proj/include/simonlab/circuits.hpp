#ifndef SIMONLAB_CIRCUITS_HPP
#define SIMONLAB_CIRCUITS_HPP

#include <string>
#include <vector>

#include "simonlab/qsim.hpp"

namespace simonlab {

struct NamedCircuit {
  std::string name;
  Circuit circuit;
};

/// Small fixed circuits over F_p^n used for the Q(D) degree checks:
///   always_accept     T=0, accepts every output value
///   output_mixer      T=0, Fourier transform on the output register, accept {0}
///   kernel_hit        T=1, uniform query then oracle, accept {0} (P(f) = D / p^n)
///   kernel_hit_mixed  T=1, as kernel_hit with a rotation between output values 0 and 1
///   double_query      T=2, QFT, oracle, inverse QFT, oracle, accept {0}
std::vector<NamedCircuit> bundled_circuits(const FieldSpec& field);

}  // namespace simonlab

#endif  // SIMONLAB_CIRCUITS_HPP
