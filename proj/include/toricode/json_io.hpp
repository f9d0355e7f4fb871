#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "toricode/codes.hpp"
#include "toricode/formulas.hpp"
#include "toricode/stats.hpp"

namespace toricode {

using Json = nlohmann::json;

/// Parsed polytope source: a degree-one constructor (when available) and
/// the realized polytope.
struct PolytopeSpec {
    std::optional<DegreeOneDescriptor> descriptor;
    std::optional<std::pair<int, std::vector<Point>>> raw_vertices;

    LatticePolytope realize_polytope() const;
    Json to_json() const;
};

/// Accepts {"constructor": "lawrence", "a": [...], "pyramids": n},
/// {"constructor": "delta2", "pyramids": n}, {"constructor": "interval",
/// "c": n}, or {"vertices": [[...], ...]}.
PolytopeSpec parse_polytope_spec(const Json& j);

Json field_to_json(const Field& f);
Json polytope_report(const LatticePolytope& p);
Json mode_report_to_json(const ModeReport& r);
Json genericity_report_to_json(const GenericityReport& r);
Json table1_check_to_json(const Table1Check& c);

/// CSV export of a matrix: header "p,e,rows,cols" then one line per row
/// with canonical element indices.
std::string matrix_to_csv(const Matrix& m);

} // namespace toricode
