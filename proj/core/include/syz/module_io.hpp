#pragma once

#include <string>
#include <vector>

#include "syz/graded_module.hpp"

namespace syz {

// Module document:
//   { "n": 4, "q_min": 0, "q_max": 3, "dims": [1, 4, 7, 10],
//     "mult": [ [ [[row, col, "num/den"], ...],   // degree q_min, variable 0
//                 ... ],                           // one entry per variable
//               ... ] }                            // one entry per q < q_max

/// Throws SchemaError with the offending field path (or line/column for
/// syntax errors) and InvariantError if the action does not commute.
GradedModuleTable parse_module_json(const std::string& text);

std::string module_to_json(const GradedModuleTable& m);

/// Point file: one point per line, integers separated by whitespace or
/// commas; blank lines and '#' comments are skipped. A JSON array of integer
/// arrays is accepted as well. Throws SchemaError on malformed or duplicate
/// rows.
std::vector<LatticePoint> parse_points(const std::string& text);

}  // namespace syz
