#ifndef SIMONLAB_JSON_IO_HPP
#define SIMONLAB_JSON_IO_HPP

#include <gmpxx.h>

#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"
#include "simonlab/classical.hpp"
#include "simonlab/instances.hpp"
#include "simonlab/lemma1.hpp"
#include "simonlab/linalg.hpp"
#include "simonlab/polymethod.hpp"
#include "simonlab/qsim.hpp"

namespace simonlab {

using Json = nlohmann::ordered_json;

/// Serializes with object keys in insertion order, no whitespace except a
/// trailing newline, and every floating value as %.17g. Identical inputs give
/// identical bytes.
std::string to_canonical_string(const Json& j);
void write_canonical(std::ostream& out, const Json& j);

Json read_json_file(const std::string& path);

Json vector_to_json(const FpVector& v);
FpVector vector_from_json(const Json& j, const FieldSpec& field);

/// {"p":2,"n":2,"rows":[[1,1],[0,0]]}
Json matrix_to_json(const FpMatrix& m);
FpMatrix matrix_from_json(const Json& j);

/// {"p":..,"n":..,"basis":[[..]]}
Json subspace_to_json(const Subspace& s);
Subspace subspace_from_json(const Json& j);

/// {"p":..,"n":..,"pairs":[{"x":[..],"y":[..]}]}
Json partial_to_json(const PartialFn& s);
PartialFn partial_from_json(const Json& j);

/// {"n":..,"table":[[bits],..],"shift":[bits]|null}, bit i of a word is entry i.
Json general_to_json(const GeneralInstance& g);
GeneralInstance general_from_json(const Json& j);

/// {"p":..,"n":..,"workspace":m,"ops":[..],"accept":[[..],..]}
Json circuit_to_json(const Circuit& c);
Circuit circuit_from_json(const Json& j);

/// Exact rationals as "num/den" strings ("3" when the denominator is 1).
std::string rational_string(const mpq_class& q);
Json rational_poly_to_json(const RationalPoly& poly);

/// {"p":..,"n":..,"points":[{"k":0,"D":"1","num":"0","den":"1"},..]}
Json qtable_to_json(const QTable& t);
QTable qtable_from_json(const Json& j);

Json part3_to_json(const Part3Report& r);
Json lemma1_to_json(const MinDegreeReport& r);

}  // namespace simonlab

#endif  // SIMONLAB_JSON_IO_HPP
