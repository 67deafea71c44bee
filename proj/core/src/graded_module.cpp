#include "syz/graded_module.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>

#include "syz/error.hpp"

namespace syz {

namespace {

std::string window_text(int q_min, int q_max) {
  return "[" + std::to_string(q_min) + ", " + std::to_string(q_max) + "]";
}

LatticePoint add(const LatticePoint& a, const LatticePoint& b) {
  LatticePoint out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

void check_points(const std::vector<LatticePoint>& points) {
  if (points.empty()) throw PreconditionError("point configuration is empty");
  const std::size_t dim = points.front().size();
  std::set<LatticePoint> seen;
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (points[i].size() != dim) {
      throw PreconditionError("point " + std::to_string(i) + " has " +
                              std::to_string(points[i].size()) + " coordinates, expected " +
                              std::to_string(dim));
    }
    if (!seen.insert(points[i]).second) {
      throw PreconditionError("duplicate point at index " + std::to_string(i));
    }
  }
}

// Builds the table from per-degree sorted point sets; set q+1 must contain
// set q shifted by every point.
GradedModuleTable table_from_degree_sets(const std::vector<LatticePoint>& points,
                                         const std::vector<std::set<LatticePoint>>& pieces) {
  const int q_max = static_cast<int>(pieces.size()) - 1;
  std::vector<std::size_t> dims;
  std::vector<std::map<LatticePoint, std::size_t>> index(pieces.size());
  for (std::size_t q = 0; q < pieces.size(); ++q) {
    dims.push_back(pieces[q].size());
    std::size_t k = 0;
    for (const auto& s : pieces[q]) index[q].emplace(s, k++);
  }
  std::vector<std::vector<RationalMatrix>> mult;
  for (int q = 0; q < q_max; ++q) {
    std::vector<RationalMatrix> per_var;
    for (const auto& pt : points) {
      std::vector<Triplet> t;
      for (const auto& [s, col] : index[q]) {
        auto it = index[q + 1].find(add(s, pt));
        t.push_back({it->second, col, Rational(1)});
      }
      per_var.push_back(RationalMatrix::from_triplets(dims[q + 1], dims[q], std::move(t)));
    }
    mult.push_back(std::move(per_var));
  }
  return GradedModuleTable(points.size(), 0, q_max, std::move(dims), std::move(mult));
}

}  // namespace

GradedModuleTable::GradedModuleTable(std::size_t n, int q_min, int q_max,
                                     std::vector<std::size_t> dims,
                                     std::vector<std::vector<RationalMatrix>> mult)
    : n_(n), q_min_(q_min), q_max_(q_max), dims_(std::move(dims)), mult_(std::move(mult)) {
  if (q_max_ < q_min_) {
    throw InvariantError("empty degree window " + window_text(q_min_, q_max_));
  }
  const auto span = static_cast<std::size_t>(q_max_ - q_min_);
  if (dims_.size() != span + 1) {
    throw InvariantError("dims has " + std::to_string(dims_.size()) + " entries, window " +
                         window_text(q_min_, q_max_) + " needs " + std::to_string(span + 1));
  }
  if (mult_.size() != span) {
    throw InvariantError("mult has " + std::to_string(mult_.size()) + " degrees, expected " +
                         std::to_string(span));
  }
  for (std::size_t k = 0; k < span; ++k) {
    if (mult_[k].size() != n_) {
      throw InvariantError("mult[" + std::to_string(k) + "] has " +
                           std::to_string(mult_[k].size()) + " matrices, expected n = " +
                           std::to_string(n_));
    }
    for (std::size_t j = 0; j < n_; ++j) {
      const auto& m = mult_[k][j];
      if (m.rows() != dims_[k + 1] || m.cols() != dims_[k]) {
        throw InvariantError("mult[" + std::to_string(k) + "][" + std::to_string(j) + "] is " +
                             std::to_string(m.rows()) + "x" + std::to_string(m.cols()) +
                             ", expected " + std::to_string(dims_[k + 1]) + "x" +
                             std::to_string(dims_[k]));
      }
    }
  }
  // x_i x_j = x_j x_i on every degree where both products are defined
  for (std::size_t k = 0; k + 1 < span; ++k) {
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = i + 1; j < n_; ++j) {
        if (!(mult_[k + 1][i] * mult_[k][j] == mult_[k + 1][j] * mult_[k][i])) {
          throw InvariantError("multiplication maps " + std::to_string(i) + " and " +
                               std::to_string(j) + " do not commute from degree " +
                               std::to_string(q_min_ + static_cast<int>(k)));
        }
      }
    }
  }
}

std::size_t GradedModuleTable::dim(int q) const {
  if (q < q_min_) return 0;
  if (q > q_max_) {
    throw RangeError("degree " + std::to_string(q) + " is outside the module window " +
                     window_text(q_min_, q_max_));
  }
  return dims_[static_cast<std::size_t>(q - q_min_)];
}

const RationalMatrix& GradedModuleTable::mult(int q, std::size_t j) const {
  if (!in_window(q) || !in_window(q + 1)) {
    const int missing = in_window(q) ? q + 1 : q;
    throw RangeError("degree " + std::to_string(missing) + " is outside the module window " +
                     window_text(q_min_, q_max_));
  }
  return mult_[static_cast<std::size_t>(q - q_min_)].at(j);
}

GradedModuleTable build_point_configuration_module(const std::vector<LatticePoint>& points,
                                                   int q_max) {
  if (q_max < 1) throw RangeError("q_max must be at least 1, got " + std::to_string(q_max));
  check_points(points);
  return build_monomial_submodule(points, {{0, LatticePoint(points.front().size(), 0)}}, q_max);
}

GradedModuleTable build_monomial_submodule(const std::vector<LatticePoint>& points,
                                           const std::vector<ModuleGenerator>& generators,
                                           int q_max) {
  if (q_max < 1) throw RangeError("q_max must be at least 1, got " + std::to_string(q_max));
  check_points(points);
  const std::size_t dim = points.front().size();
  std::vector<std::set<LatticePoint>> pieces(static_cast<std::size_t>(q_max) + 1);
  for (const auto& g : generators) {
    if (g.point.size() != dim) throw PreconditionError("generator dimension mismatch");
    if (g.degree < 0) throw PreconditionError("generator degree must be nonnegative");
    if (g.degree <= q_max) pieces[static_cast<std::size_t>(g.degree)].insert(g.point);
  }
  for (std::size_t q = 1; q < pieces.size(); ++q) {
    for (const auto& s : pieces[q - 1]) {
      for (const auto& pt : points) pieces[q].insert(add(s, pt));
    }
  }
  return table_from_degree_sets(points, pieces);
}

GradedModuleTable rational_normal_curve(int degree, int q_max) {
  if (degree < 1) throw PreconditionError("rational normal curve degree must be >= 1");
  std::vector<LatticePoint> pts;
  for (int i = 0; i <= degree; ++i) pts.push_back({i});
  return build_point_configuration_module(pts, q_max);
}

std::vector<LatticePoint> veronese_points(int n, int d) {
  if (n < 0 || d < 1) throw PreconditionError("veronese needs n >= 0 and d >= 1");
  std::vector<LatticePoint> out;
  LatticePoint cur(static_cast<std::size_t>(n) + 1, 0);
  // all compositions of d into n+1 parts, lexicographically ascending
  auto rec = [&](auto&& self, std::size_t pos, std::int64_t left) -> void {
    if (pos + 1 == cur.size()) {
      cur[pos] = left;
      out.push_back(cur);
      return;
    }
    for (std::int64_t v = 0; v <= left; ++v) {
      cur[pos] = v;
      self(self, pos + 1, left - v);
    }
  };
  rec(rec, 0, d);
  return out;
}

GradedModuleTable veronese(int n, int d, int q_max) {
  return build_point_configuration_module(veronese_points(n, d), q_max);
}

GradedModuleTable polynomial_ring(std::size_t n, int q_max) {
  std::vector<LatticePoint> pts;
  for (std::size_t i = 0; i < n; ++i) {
    LatticePoint e(n, 0);
    e[i] = 1;
    pts.push_back(std::move(e));
  }
  return build_point_configuration_module(pts, q_max);
}

GradedModuleTable extend_by_annihilator(const GradedModuleTable& m, std::size_t u) {
  auto mult = m.mult_table();
  for (std::size_t k = 0; k < mult.size(); ++k) {
    const std::size_t rows = m.dims()[k + 1];
    const std::size_t cols = m.dims()[k];
    for (std::size_t i = 0; i < u; ++i) mult[k].emplace_back(rows, cols);
  }
  return GradedModuleTable(m.n() + u, m.q_min(), m.q_max(), m.dims(), std::move(mult));
}

}  // namespace syz
