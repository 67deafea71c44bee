#pragma once

#include <cstdint>
#include <vector>

#include "syz/lattice.hpp"

namespace syz {

/// All classes x with (h.x) = degree and (x.x) = self_int, sorted
/// lexicographically by coordinates. `h` must have h^2 > 0.
///
/// The slice {x : h.x = degree} is a translate of h^perp, on which the form is
/// negative definite. The slice is parametrized through a unimodular basis
/// adapted to the linear form x -> h.x, and the remaining definite problem is
/// solved by Fincke-Pohst backtracking in exact rational arithmetic. The list
/// is complete.
///
/// Throws PreconditionError if degree < 1 or h^2 <= 0, InvariantError if the
/// complement turns out not to be negative definite.
std::vector<DivisorClass> enumerate_classes(const PicardLattice& lattice, const DivisorClass& h,
                                            std::int64_t degree, std::int64_t self_int);

std::vector<DivisorClass> enumerate_classes(const PolarizedSurface& surface, std::int64_t degree,
                                            std::int64_t self_int);

/// Primitive isotropic classes of h-degree exactly `degree`.
std::vector<DivisorClass> primitive_isotropic_classes(const PicardLattice& lattice,
                                                      const DivisorClass& h, std::int64_t degree);

}  // namespace syz
