#pragma once

#include <cstddef>
#include <optional>
#include <utility>

#include "syz/betti_table.hpp"
#include "syz/graded_module.hpp"
#include "syz/rational_matrix.hpp"

namespace syz {

/// Matrix of the Koszul map  Λ^p V ⊗ M_q -> Λ^{p-1} V ⊗ M_{q+1},
///   v_1 ∧ ... ∧ v_p ⊗ m  ↦  Σ_i (-1)^{i+1} v_1 ∧ .. v̂_i .. ∧ v_p ⊗ v_i·m.
/// Basis order: exterior index major (lexicographic subsets), module index
/// minor. Shape is C(n,p-1)·dim M_{q+1} x C(n,p)·dim M_q; for p = 0 the target
/// is the zero space. Throws RangeError unless q and q+1 lie in the window.
RationalMatrix koszul_differential(const GradedModuleTable& m, std::size_t p, int q);

/// dim K_{p,q}(M;V) = dim ker d_{p,q} - rank d_{p+1,q-1}. Needs q >= q_min and
/// q+1 <= q_max; throws RangeError otherwise.
std::size_t koszul_cohomology_dim(const GradedModuleTable& m, std::size_t p, int q);

/// All cells 0 <= p <= p_max, q_lo <= q <= q_hi. Every cell is checked for
/// computability before any work starts. Ranks of the differentials are
/// computed once each, on up to `threads` worker threads; the result does
/// not depend on the thread count.
BettiTable betti_table(const GradedModuleTable& m, std::size_t p_max, int q_lo, int q_hi,
                       unsigned threads = 1);

struct NpCheck {
  bool holds = true;
  /// First nonzero cell (i, q) in lexicographic order, when the check fails.
  std::optional<std::pair<std::size_t, int>> witness;
  std::size_t witness_dim = 0;
};

/// Property (N_p) within the window: K_{i,q} = 0 for all i <= p and
/// 2 <= q <= q_bound. p < 0 holds vacuously. Throws PreconditionError if
/// q_bound < 2 and RangeError naming the first uncomputable cell.
NpCheck check_np(const GradedModuleTable& m, int p, int q_bound);

struct SplittingCheck {
  std::size_t extended_dim = 0;  ///< dim K_{p,q}(M; U ⊕ W)
  std::size_t split_sum = 0;     ///< Σ_i C(u, p-i) dim K_{i,q}(M; W)
  bool equal = false;
};

/// Compares both sides of the splitting isomorphism for V = U ⊕ W with
/// dim U = u acting by zero on M.
SplittingCheck splitting_check(const GradedModuleTable& m, std::size_t u, std::size_t p, int q);

}  // namespace syz
