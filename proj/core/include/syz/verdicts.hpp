#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "syz/lattice.hpp"
#include "syz/rational.hpp"
#include "syz/verdict.hpp"

namespace syz {

/// Property (N_p) for L on a K3 or abelian surface when L^2 >= 5 (p+2)^2:
/// holds iff no nonzero isotropic class F has 1 <= L.F <= p+2. The search is
/// a complete enumeration; a failure lists every isotropic class of the
/// minimal degree.
Verdict theorem_a_verdict(const PolarizedSurface& surface, int p);

/// Sharper K3 ranges. Branch (a), 2 L^2 > (p+4)^2: the isotropic criterion.
/// Branch (b), 4 L^2 > (p+6)^2: the same criterion unless a class with
/// F^2 = 2 and 1 <= L.F <= p+4 exists, which makes the verdict Inconclusive
/// with those classes attached.
Verdict k3_sharp_verdict(const PolarizedSurface& surface, int p);

/// Failure of (N_p) forced by a genus-two class: L^2 at least 3p+6 (K3),
/// 3p+14 (abelian) or 3p+7 (Enriques) and some F with F^2 = 2 and
/// 3 <= L.F <= p+4. Otherwise Inconclusive. Requires the ample and
/// globally_generated flags.
Verdict genus_two_obstruction(const PolarizedSurface& surface, int p);

/// k3_sharp_verdict, then genus_two_obstruction when the former is
/// Inconclusive (and the flags allow it).
Verdict combined_k3_verdict(const PolarizedSurface& surface, int p);

/// (N_p) for m L on a K3 surface, m in {p, p+1, p+2, p+3}; p >= 2 unless
/// m = p+3.
Verdict mukai_multiple_verdict(const PolarizedSurface& surface, int m, int p);

/// Enriques surfaces with L^2 > 4 (p+2)^2: holds iff no primitive isotropic
/// class has 1 <= L.F <= p+2. Always conditional on the secant conjecture
/// ("GL-secant"). Requires the ample and globally_generated flags.
Verdict enriques_verdict(const PolarizedSurface& surface, int p);

/// A curve F with p_a(F) >= 1, i.e. F^2 >= 0, and 1 <= L.F <= p+2 forces
/// (N_p) to fail. Returns FailsNp with F as witness, else Inconclusive.
Verdict restriction_obstruction(const PolarizedSurface& surface, const DivisorClass& f, int p);

struct SlopeStability {
  bool satisfied = false;  ///< (h0 - p - 2) L^2 > (h0 - 1) (F.L)
  /// -C(r-1, i-1) (L^2 - (r/i) (F.L)), r = h0 - 1, i = h0 - p - 2.
  Rational value;
  std::int64_t h0 = 0;
  std::int64_t r = 0;
  std::int64_t i = 0;
};

/// Requires h0(L) >= p + 3.
SlopeStability slope_stability_condition(const PolarizedSurface& surface, const DivisorClass& f,
                                         int p);

struct CrossCheckReport {
  std::vector<std::string> checks;      ///< assertions that were evaluated
  std::vector<std::string> violations;  ///< assertions that failed
  bool consistent() const noexcept { return violations.empty(); }
};

/// Ties the procedures together on one input (K3 or abelian):
///  - theorem A fails iff some enumerated class fails restriction_obstruction;
///  - k3_sharp agrees with theorem A on {HoldsNp, FailsNp};
///  - a Seshadri certificate is equivalent to theorem A holding;
///  - every witness passes verify_witnesses.
CrossCheckReport cross_check(const PolarizedSurface& surface, int p);

}  // namespace syz
