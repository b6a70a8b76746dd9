#ifndef SIMONLAB_VERIFY_HPP
#define SIMONLAB_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "simonlab/counting.hpp"
#include "simonlab/field.hpp"
#include "simonlab/qsim.hpp"

namespace simonlab {

/// Outcome of one property check in a verification suite.
struct PropertyCheck {
  std::string name;
  bool pass;
  std::string detail;
};

bool all_pass(const std::vector<PropertyCheck>& checks);

/// alpha / beta / |F_D| against enumeration, sum of |F_D|, and beta duality.
std::vector<PropertyCheck> verify_counting(const FieldSpec& field, std::uint64_t cap = kDefaultEnumerationCap);

/// For every linearly consistent s with |dom(s)| <= max_domain: closed form
/// equals brute force at every h, the part-3 conditional is h-independent,
/// the interpolated Q_s has degree <= dim span(dom s), and the singleton
/// partition sums equal 1.
std::vector<PropertyCheck> verify_lemma2(const FieldSpec& field, int max_domain = 3,
                                         std::uint64_t cap = kDefaultEnumerationCap);

/// Fourier support law over every linear f, oracle norm/inverse laws and the
/// QFT round trip.
std::vector<PropertyCheck> verify_qsim(const FieldSpec& field, std::uint64_t cap = kDefaultEnumerationCap,
                                       std::uint64_t sim_cap = kDefaultSimulatorCap);

}  // namespace simonlab

#endif  // SIMONLAB_VERIFY_HPP
