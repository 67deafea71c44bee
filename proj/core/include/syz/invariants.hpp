#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "syz/lattice.hpp"

namespace syz {

/// How a search for isotropic classes can stop.
struct IsotropicSearchPlan {
  /// The lattice certainly contains a nonzero isotropic class, so an
  /// increasing degree search terminates.
  bool guaranteed = false;
  /// Every nonzero isotropic class, if any exists, has a representative of
  /// degree at most this. 0 means none exists.
  std::optional<std::int64_t> degree_bound;
  std::string reason;
};

/// rank 1: anisotropic. rank 2: isotropic iff -det is a square. rank >= 5:
/// isotropic (indefinite forms in five or more variables). rank 3, 4:
/// Cassels' bound on the smallest zero, max|x_i| <= (3H)^{(n-1)/2} with
/// H = sum |g_ij|, converted into a degree bound through |h.x|.
IsotropicSearchPlan isotropic_search_plan(const PicardLattice& lattice, const DivisorClass& h);

/// phi(h): min |F.h| over nonzero isotropic F, or nullopt for infinity.
ExtendedInt min_isotropic_degree(const PicardLattice& lattice, const DivisorClass& h);
ExtendedInt min_isotropic_degree(const PolarizedSurface& surface);

/// The same minimum restricted to degrees 1..max_degree (nullopt if none).
ExtendedInt min_isotropic_degree_up_to(const PicardLattice& lattice, const DivisorClass& h,
                                       std::int64_t max_degree);

/// phi(b) == 2: no isotropic class of b-degree 1, at least one of degree 2.
bool has_phi_two(const PicardLattice& lattice, const DivisorClass& b);

struct MuSearch {
  ExtendedInt value;  ///< min (B.L) - 2, nullopt if no candidate up to the bound
  std::int64_t degree_bound = 0;
  std::optional<DivisorClass> witness;
};

/// mu(L) over classes B with B^2 = 4, phi(B) = 2, B != L and
/// 1 <= B.L <= min(2 phi(L) - 2, floor(L^2/4)) + 3. Candidates beyond that
/// bound cannot lower the Clifford index. Enriques only.
MuSearch mu_search(const PolarizedSurface& surface);
ExtendedInt mu(const PolarizedSurface& surface);

struct CliffordIndex {
  std::int64_t value = 0;
  /// phi(L) if it is at most phi_cap; otherwise nullopt (2 phi - 2 then
  /// already exceeds floor(L^2/4)).
  ExtendedInt phi;
  std::int64_t phi_cap = 0;
  MuSearch mu;
  std::int64_t quarter_degree = 0;  ///< floor(L^2 / 4)
};

/// Clifford index of a general curve in |L| on an Enriques surface:
/// min{2 phi(L) - 2, mu(L) - 2, floor(L^2 / 4)}. Requires the
/// globally_generated flag.
CliffordIndex clifford_index_general_curve(const PolarizedSurface& surface);

struct SeshadriCertificate {
  bool certified = false;
  std::string reason;
  /// Isotropic classes of degree <= p + 2 when that hypothesis fails.
  std::vector<DivisorClass> witnesses;
};

/// Certified iff 7 L^2 > 8 (p+2)^2 and no nonzero isotropic class has
/// degree <= p + 2; then epsilon(L; x) > p + 2 at a very general point.
/// K3 and abelian only.
SeshadriCertificate seshadri_certificate(const PolarizedSurface& surface, int p);

/// -(F^2) for F = sum n_i C_i on a chain of (-2)-curves:
/// n_1^2 + sum (n_i - n_{i+1})^2 + n_r^2. Entries must be positive.
std::int64_t chain_self_intersection(const std::vector<std::int64_t>& multiplicities);

}  // namespace syz
