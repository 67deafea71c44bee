#pragma once

#include <string>

#include "syz/lattice.hpp"

namespace syz {

// Surface document:
//   { "kind": "k3" | "abelian" | "enriques",
//     "gram": [[0, 1], [1, 0]]  or a built-in name such as "U+E8(-1)",
//     "L": [5, 15],
//     "flags": { "ample": true, "globally_generated": true } }   // optional

/// Throws SchemaError with the offending field, InvariantError for a lattice
/// or polarization that violates the surface invariants.
PolarizedSurface parse_surface_json(const std::string& text);

std::string surface_to_json(const PolarizedSurface& surface);

}  // namespace syz
