#pragma once

#include "intcol/generators.hpp"
#include "intcol/graph.hpp"
#include "intcol/thickness.hpp"
#include "intcol/timetable.hpp"
#include "intcol/verify.hpp"

#include "json.hpp"

#include <string>
#include <string_view>

namespace intcol {

using Json = nlohmann::json;

/// Raised on malformed input files.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Text format: "V E" then E lines "u v".
Multigraph parse_graph_text(std::string_view text);
std::string graph_to_text(const Multigraph& g);

/// {"vertex_count": V, "edges": [{"id": 0, "u": 0, "v": 1}, ...]}
Json graph_to_json(const Multigraph& g);
Multigraph graph_from_json(const Json& j);

/// Either format, chosen by the first non-blank character.
Multigraph parse_graph(std::string_view text);

Json coloring_to_json(const EdgeColoring& c);
EdgeColoring coloring_from_json(const Json& j);

/// {"part": [...], "certificates": [[...] | null, ...]}
Json decomposition_to_json(const Decomposition& d);
Decomposition decomposition_from_json(const Json& j);

Json trace_to_json(const BoundTrace& t);
Json report_to_json(const VerifyReport& r);
Json report_to_json(const TimetableReport& r);

/// {"classes": n, "teachers": m, "days": [[[teacher | null, ...], ...], ...]}
Json timetable_to_json(const Timetable& t);
Timetable timetable_from_json(const Json& j);
/// One block per day; rows are classes, columns periods, cells "P<j>" or ".".
std::string timetable_grid(const Timetable& t);

/// A bare array of rows or {"b": rows}.
RequirementMatrix matrix_from_json(const Json& j);
/// CSV unless the text starts with '[' or '{'.
RequirementMatrix parse_matrix(std::string_view text);

/// {"family": "...", "params": {...}, "seed": s}
FamilySpec family_spec_from_json(const Json& j);

std::string read_file(const std::string& path);

}  // namespace intcol
