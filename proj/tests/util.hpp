#ifndef SIMONLAB_TESTS_UTIL_HPP
#define SIMONLAB_TESTS_UTIL_HPP

#include <initializer_list>
#include <vector>

#include "oracles.hpp"
#include "simonlab/field.hpp"
#include "simonlab/linalg.hpp"

namespace testutil {

using namespace simonlab;

inline FpVector vec(std::initializer_list<Residue> xs) {
  FpVector v(static_cast<Eigen::Index>(xs.size()));
  Eigen::Index i = 0;
  for (Residue x : xs) v[i++] = x;
  return v;
}

inline FpRows rows(std::initializer_list<std::initializer_list<Residue>> rs) {
  const auto r = static_cast<Eigen::Index>(rs.size());
  const auto c = r == 0 ? 0 : static_cast<Eigen::Index>(rs.begin()->size());
  FpRows m(r, c);
  Eigen::Index i = 0;
  for (const auto& row : rs) {
    Eigen::Index j = 0;
    for (Residue x : row) m(i, j++) = x;
    ++i;
  }
  return m;
}

inline FpMatrix mat(std::uint32_t p, std::initializer_list<std::initializer_list<Residue>> rs) {
  const FpRows m = rows(rs);
  return FpMatrix(FieldSpec(p, static_cast<int>(m.rows())), m);
}

inline oracle::Vec to_oracle(const FpVector& v) { return oracle::Vec(v.data(), v.data() + v.size()); }

inline oracle::Mat to_oracle(const FpMatrix& m) {
  oracle::Mat out;
  for (Eigen::Index r = 0; r < m.entries().rows(); ++r) {
    out.emplace_back(m.entries().row(r).data(), m.entries().row(r).data() + m.entries().cols());
  }
  return out;
}

/// Element indices of a library subspace.
inline std::set<std::uint64_t> element_set(const Subspace& s) {
  std::set<std::uint64_t> out;
  for (const FpVector& v : s.elements()) out.insert(s.field().index_of(v));
  return out;
}

}  // namespace testutil

#endif  // SIMONLAB_TESTS_UTIL_HPP
