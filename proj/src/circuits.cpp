#include "simonlab/circuits.hpp"

#include <cmath>

namespace simonlab {

std::vector<NamedCircuit> bundled_circuits(const FieldSpec& field) {
  const auto size = static_cast<Eigen::Index>(field.space_size());
  std::vector<FpVector> all_values;
  for (Eigen::Index v = 0; v < size; ++v) all_values.push_back(field.vector_at(static_cast<std::uint64_t>(v)));
  const std::vector<FpVector> zero_only{field.zero()};

  Eigen::MatrixXcd rotation = Eigen::MatrixXcd::Identity(size, size);
  const double theta = 0.3;
  rotation(0, 0) = std::cos(theta);
  rotation(0, 1) = -std::sin(theta);
  rotation(1, 0) = std::sin(theta);
  rotation(1, 1) = std::cos(theta);

  std::vector<NamedCircuit> out;
  out.push_back({"always_accept", Circuit(field, 1, {}, all_values)});
  out.push_back({"output_mixer",
                 Circuit(field, 1, {DenseUnitary{Register::kOutput, fourier_matrix(field)}}, zero_only)});
  out.push_back({"kernel_hit", Circuit(field, 1, {QftQuery{}, OracleCall{}}, zero_only)});
  out.push_back({"kernel_hit_mixed",
                 Circuit(field, 1, {QftQuery{}, OracleCall{}, DenseUnitary{Register::kOutput, rotation}}, zero_only)});
  out.push_back({"double_query", Circuit(field, 1, {QftQuery{}, OracleCall{}, IqftQuery{}, OracleCall{}}, zero_only)});
  return out;
}

}  // namespace simonlab
