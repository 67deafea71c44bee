#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "syz/rational_matrix.hpp"

namespace syz {

using LatticePoint = std::vector<std::int64_t>;

/// A graded module over Sym(V), dim V = n, presented by its graded pieces
/// M_q for q_min <= q <= q_max and the action of each basis vector of V.
///
/// mult(q, j) is the dim M_{q+1} x dim M_q matrix of multiplication by the
/// j-th basis vector of V. Degrees below q_min are zero; degrees above q_max
/// are unknown, and every computation that would need them throws RangeError.
///
/// Construction checks shapes and commutativity of the action and throws
/// InvariantError on violation. The object is immutable afterwards.
class GradedModuleTable {
 public:
  GradedModuleTable(std::size_t n, int q_min, int q_max, std::vector<std::size_t> dims,
                    std::vector<std::vector<RationalMatrix>> mult);

  std::size_t n() const noexcept { return n_; }
  int q_min() const noexcept { return q_min_; }
  int q_max() const noexcept { return q_max_; }
  bool in_window(int q) const noexcept { return q >= q_min_ && q <= q_max_; }

  /// dim M_q; 0 below the window, RangeError above it.
  std::size_t dim(int q) const;
  const std::vector<std::size_t>& dims() const noexcept { return dims_; }

  /// Multiplication by basis vector j, M_q -> M_{q+1}; requires q, q+1 in the window.
  const RationalMatrix& mult(int q, std::size_t j) const;
  const std::vector<std::vector<RationalMatrix>>& mult_table() const noexcept { return mult_; }

 private:
  std::size_t n_;
  int q_min_;
  int q_max_;
  std::vector<std::size_t> dims_;
  std::vector<std::vector<RationalMatrix>> mult_;
};

/// Monomial fixture: V has one basis vector per point, M_q is spanned by the
/// distinct q-fold sums of points (M_0 = span{0}), and basis vector j maps a
/// degree-q element s to s + points[j]. Each M_q basis is sorted
/// lexicographically; the V basis keeps the input order.
/// Throws RangeError if q_max < 1 and PreconditionError on empty input,
/// duplicate points or points of differing dimension.
GradedModuleTable build_point_configuration_module(const std::vector<LatticePoint>& points,
                                                   int q_max);

struct ModuleGenerator {
  int degree;
  LatticePoint point;
};

/// Submodule of the point-configuration module generated by the given
/// elements: M_q is spanned by g + (q - deg g)-fold sums of points. The window
/// is [0, q_max]; degrees below every generator are zero-dimensional.
GradedModuleTable build_monomial_submodule(const std::vector<LatticePoint>& points,
                                           const std::vector<ModuleGenerator>& generators,
                                           int q_max);

/// Points {0, 1, ..., d} in Z: the coordinate ring of the degree-d rational
/// normal curve.
GradedModuleTable rational_normal_curve(int degree, int q_max);

/// Exponent vectors of degree d in n+1 variables, lexicographically ascending.
std::vector<LatticePoint> veronese_points(int n, int d);
GradedModuleTable veronese(int n, int d, int q_max);

/// Sym(V) with dim V = n: unit vectors of Z^n.
GradedModuleTable polynomial_ring(std::size_t n, int q_max);

/// The same module over V = W (+) U with dim U = u acting by zero. The new
/// basis vectors are appended after the existing ones.
GradedModuleTable extend_by_annihilator(const GradedModuleTable& m, std::size_t u);

}  // namespace syz
