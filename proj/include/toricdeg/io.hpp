#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "toricdeg/degeneration.hpp"
#include "toricdeg/moment.hpp"

namespace toricdeg {

using json = nlohmann::json;

/// Ideal file:
///   # comment
///   vars: x, y, z
///   grading: 1, 1, 1        (optional)
///   y^2*z - x^3 + x*z^2     (one generator per line)
/// SyntaxError positions are offsets into the whole text.
Ideal parse_ideal_file(const std::string& text);
std::string format_ideal_file(const Ideal& I);

std::string read_text(const std::string& path);  // IOError
void write_text(const std::string& path, const std::string& text);

/// Reads either format, choosing JSON when the first non-blank character is '{'.
Ideal read_ideal(const std::string& path);

json ideal_to_json(const Ideal& I);
Ideal ideal_from_json(const json& j);

json matrix_to_json(const IntMatrix& M);
IntMatrix matrix_from_json(const json& j);
IntMatrix read_matrix(const std::string& path);

json semigroup_to_json(const Semigroup& S);
Semigroup semigroup_from_json(const json& j);

json polytope_to_json(const PolytopeQ& P);
json moment_dump(const std::vector<MomentSample>& samples, const PolytopeQ& P);

json to_json(const FamilyIdeal& F);
json to_json(const PipelineResult& R);
json to_json(const EmbeddingReport& E);
json to_json(const ProjectionReport& R);
json to_json(const std::vector<DimensionRow>& rows);

}  // namespace toricdeg
