#pragma once

#include <string>

#include "syz/lattice.hpp"

namespace syz {

/// Hyperbolic plane [[0,1],[1,0]].
GramMatrix hyperbolic_plane();
/// Negative of the E8 Cartan matrix (negative definite, even, unimodular).
GramMatrix e8_negative();
/// <2n>, rank one.
GramMatrix rank_one(std::int64_t self_int);
GramMatrix direct_sum(const GramMatrix& a, const GramMatrix& b);
/// U (+) E8(-1): the numerical lattice of an Enriques surface.
GramMatrix enriques_lattice();

/// Built-in names: "U", "U+E8(-1)", "<2>", "<2n>" for any positive even 2n
/// (e.g. "<4>"). Throws PreconditionError for anything else.
GramMatrix lattice_by_name(const std::string& name);

}  // namespace syz
