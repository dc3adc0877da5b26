#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "symlie/classify2c.hpp"
#include "symlie/lieanalysis.hpp"
#include "symlie/orbits.hpp"

namespace symlie {

/// Insertion-ordered so every dump is byte-stable.
using Json = nlohmann::ordered_json;

Json to_json(const Vec& v);
Json rows_json(const Matrix& m);
/// {"field": tag, "rows": [[scalar strings]]}
Json to_json(const Matrix& m);
/// {"basis": {"n", "d"}, "field", "coeffs": [...]}
Json to_json(const HomPoly& f);
/// {dim, labels, field, constants: [{i, j, coeffs: [{k, value}]}], provenance}
Json to_json(const LieTable& t);
Json to_json(const SeriesReport& r);
Json to_json(const Fingerprint& f);
Json to_json(const HomWitness& w);
Json to_json(const ClassLabel& label);
Json to_json(const Classification& c);
Json to_json(const OrbitReport& r);
Json to_json(const IsoClassReport& r);
/// Jacobi check, both series, solvability, nilpotency, center and fingerprint.
Json analysis_json(const LieTable& t);

LieTable table_from_json(const Json& j);
HomPoly hompoly_from_json(const Json& j);

/// Inline "[[1,0],[1/2,i]]" (entries in the scalar grammar, optionally
/// quoted) or a JSON object {"field", "rows"} whose field must match.
Matrix parse_matrix(const Field& field, std::string_view text);
/// Inline "[1,0]", a JSON array, or an object with "vector" or "rows".
Vec parse_vector(const Field& field, std::string_view text);

/// Stable 64-bit FNV-1a hash (hex) of the table's field, dimension and
/// structure constants.
std::string table_id(const LieTable& t);

}  // namespace symlie
