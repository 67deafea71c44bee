#include "syz/enumeration.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

#include "syz/error.hpp"
#include "syz/rational.hpp"

namespace syz {

namespace {

using IntMatrix = std::vector<std::vector<std::int64_t>>;

Rational to_q(std::int64_t v) { return Rational(Integer(static_cast<long>(v))); }

// Unimodular U (columns are the new basis) with form . U = (g, 0, ..., 0), g > 0.
struct AdaptedBasis {
  IntMatrix u;
  std::int64_t g = 0;
};

AdaptedBasis adapt_to_form(std::vector<std::int64_t> a) {
  const std::size_t n = a.size();
  AdaptedBasis out;
  out.u.assign(n, std::vector<std::int64_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i) out.u[i][i] = 1;

  auto col_axpy = [&](std::size_t dst, std::int64_t q, std::size_t src) {
    a[dst] -= q * a[src];
    for (std::size_t r = 0; r < n; ++r) out.u[r][dst] -= q * out.u[r][src];
  };
  while (true) {
    std::size_t best = n;
    std::size_t nonzero = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (a[i] == 0) continue;
      ++nonzero;
      if (best == n || std::llabs(a[i]) < std::llabs(a[best])) best = i;
    }
    if (best == n) throw PreconditionError("polarization defines the zero linear form");
    if (nonzero == 1) {
      if (best != 0) {
        std::swap(a[0], a[best]);
        for (std::size_t r = 0; r < n; ++r) std::swap(out.u[r][0], out.u[r][best]);
      }
      if (a[0] < 0) {
        a[0] = -a[0];
        for (std::size_t r = 0; r < n; ++r) out.u[r][0] = -out.u[r][0];
      }
      out.g = a[0];
      return out;
    }
    for (std::size_t j = 0; j < n; ++j) {
      if (j != best && a[j] != 0) col_axpy(j, a[j] / a[best], best);
    }
  }
}

// Smallest and largest integer w with (w - center)^2 <= bound, or lo > hi.
std::pair<std::int64_t, std::int64_t> integer_window(const Rational& center,
                                                     const Rational& bound) {
  auto fits = [&](std::int64_t w) {
    const Rational d = to_q(w) - center;
    return d * d <= bound;
  };
  const double c = center.get_d();
  const double r = std::sqrt(std::max(0.0, bound.get_d()));
  auto lo = static_cast<std::int64_t>(std::ceil(c - r));
  auto hi = static_cast<std::int64_t>(std::floor(c + r));
  while (fits(lo - 1)) --lo;
  while (lo <= hi && !fits(lo)) ++lo;
  while (fits(hi + 1)) ++hi;
  while (hi >= lo && !fits(hi)) --hi;
  return {lo, hi};
}

// Enumerates integer w with (w - c)^T N (w - c) <= bound, N positive definite,
// via the completed-square form sum_i D_i (y_i + sum_{j>i} mu_ij y_j)^2.
class FinckePohst {
 public:
  FinckePohst(std::vector<std::vector<Rational>> n, std::vector<Rational> c, Rational bound)
      : k_(c.size()), center_(std::move(c)), bound_(std::move(bound)) {
    diag_.resize(k_);
    mu_.assign(k_, std::vector<Rational>(k_));
    for (std::size_t i = 0; i < k_; ++i) {
      if (n[i][i] <= 0) {
        throw InvariantError("orthogonal complement of the polarization is not negative definite");
      }
      diag_[i] = n[i][i];
      for (std::size_t j = i + 1; j < k_; ++j) mu_[i][j] = n[i][j] / n[i][i];
      for (std::size_t j = i + 1; j < k_; ++j) {
        for (std::size_t l = i + 1; l < k_; ++l) n[j][l] -= n[i][j] * n[i][l] / n[i][i];
      }
    }
  }

  template <typename Visit>
  void run(Visit&& visit) {
    if (bound_ < 0) return;
    std::vector<std::int64_t> w(k_, 0);
    if (k_ == 0) {
      visit(w);
      return;
    }
    recurse(k_ - 1, Rational(0), w, visit);
  }

 private:
  template <typename Visit>
  void recurse(std::size_t i, const Rational& used, std::vector<std::int64_t>& w, Visit& visit) {
    Rational mid = center_[i];
    for (std::size_t j = i + 1; j < k_; ++j) mid -= mu_[i][j] * (to_q(w[j]) - center_[j]);
    const Rational rem = (bound_ - used) / diag_[i];
    const auto [lo, hi] = integer_window(mid, rem);
    for (std::int64_t v = lo; v <= hi; ++v) {
      w[i] = v;
      const Rational d = to_q(v) - mid;
      const Rational next = used + diag_[i] * d * d;
      if (i == 0) {
        visit(w);
      } else {
        recurse(i - 1, next, w, visit);
      }
    }
  }

  std::size_t k_;
  std::vector<Rational> center_;
  Rational bound_;
  std::vector<Rational> diag_;
  std::vector<std::vector<Rational>> mu_;
};

}  // namespace

std::vector<DivisorClass> enumerate_classes(const PicardLattice& lattice, const DivisorClass& h,
                                            std::int64_t degree, std::int64_t self_int) {
  if (degree < 1) throw PreconditionError("degree must be at least 1, got " + std::to_string(degree));
  if (lattice.square(h) <= 0) throw PreconditionError("polarization must have positive square");

  const std::size_t rho = lattice.rank();
  const AdaptedBasis basis = adapt_to_form(lattice.linear_form(h));
  if (degree % basis.g != 0) return {};
  const std::int64_t t = degree / basis.g;

  // H = U^T G U in the adapted basis; coordinate 0 is fixed to t.
  const auto& g = lattice.gram();
  IntMatrix gu(rho, std::vector<std::int64_t>(rho, 0));
  for (std::size_t i = 0; i < rho; ++i)
    for (std::size_t j = 0; j < rho; ++j)
      for (std::size_t l = 0; l < rho; ++l) gu[i][j] += g[i][l] * basis.u[l][j];
  IntMatrix hm(rho, std::vector<std::int64_t>(rho, 0));
  for (std::size_t i = 0; i < rho; ++i)
    for (std::size_t j = 0; j < rho; ++j)
      for (std::size_t l = 0; l < rho; ++l) hm[i][j] += basis.u[l][i] * gu[l][j];

  // x^2 = t^2 h00 + 2t b.w + w^T H' w, with N = -H' positive definite:
  // (w - c)^T N (w - c) = t^2 h00 - s + c^T N c,  where N c = t b.
  const std::size_t k = rho - 1;
  std::vector<std::vector<Rational>> n(k, std::vector<Rational>(k));
  std::vector<Rational> b(k);
  for (std::size_t i = 0; i < k; ++i) {
    b[i] = to_q(hm[0][i + 1]);
    for (std::size_t j = 0; j < k; ++j) n[i][j] = to_q(-hm[i + 1][j + 1]);
  }
  // solve N c = t b by Gaussian elimination (N is definite, so pivots are nonzero)
  std::vector<Rational> c(k);
  {
    auto a = n;
    std::vector<Rational> rhs(k);
    for (std::size_t i = 0; i < k; ++i) rhs[i] = to_q(t) * b[i];
    for (std::size_t col = 0; col < k; ++col) {
      if (a[col][col] == 0) {
        throw InvariantError("orthogonal complement of the polarization is degenerate");
      }
      for (std::size_t r = col + 1; r < k; ++r) {
        if (a[r][col] == 0) continue;
        const Rational f = a[r][col] / a[col][col];
        for (std::size_t j = col; j < k; ++j) a[r][j] -= f * a[col][j];
        rhs[r] -= f * rhs[col];
      }
    }
    for (std::size_t i = k; i-- > 0;) {
      Rational s = rhs[i];
      for (std::size_t j = i + 1; j < k; ++j) s -= a[i][j] * c[j];
      c[i] = s / a[i][i];
    }
  }
  Rational bound = to_q(t) * to_q(t) * to_q(hm[0][0]) - to_q(self_int);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) bound += c[i] * n[i][j] * c[j];

  std::vector<DivisorClass> out;
  FinckePohst search(std::move(n), std::move(c), bound);
  search.run([&](const std::vector<std::int64_t>& w) {
    DivisorClass x(rho, 0);
    for (std::size_t r = 0; r < rho; ++r) {
      x[r] = basis.u[r][0] * t;
      for (std::size_t i = 0; i < k; ++i) x[r] += basis.u[r][i + 1] * w[i];
    }
    if (lattice.pair(h, x) == degree && lattice.square(x) == self_int) out.push_back(std::move(x));
  });
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<DivisorClass> enumerate_classes(const PolarizedSurface& surface, std::int64_t degree,
                                            std::int64_t self_int) {
  return enumerate_classes(surface.lattice(), surface.polarization(), degree, self_int);
}

std::vector<DivisorClass> primitive_isotropic_classes(const PicardLattice& lattice,
                                                      const DivisorClass& h, std::int64_t degree) {
  auto all = enumerate_classes(lattice, h, degree, 0);
  std::erase_if(all, [](const DivisorClass& x) { return !is_primitive(x); });
  return all;
}

}  // namespace syz
