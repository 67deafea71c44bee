#include "syz/lattice.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "syz/error.hpp"
#include "syz/rational.hpp"

namespace syz {

Inertia inertia(const GramMatrix& gram) {
  const std::size_t n = gram.size();
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i) {
    if (gram[i].size() != n) throw InvariantError("Gram matrix is not square");
    for (std::size_t j = 0; j < n; ++j) a[i][j] = Rational(Integer(std::to_string(gram[i][j])));
  }

  Inertia out;
  std::vector<std::size_t> alive(n);
  std::iota(alive.begin(), alive.end(), 0);
  while (!alive.empty()) {
    // prefer a nonzero diagonal pivot
    auto piv = std::find_if(alive.begin(), alive.end(),
                            [&](std::size_t i) { return a[i][i] != 0; });
    if (piv == alive.end()) {
      // all diagonal entries vanish: find a_ij != 0 and replace row/col i by i + j
      bool found = false;
      for (std::size_t x = 0; x < alive.size() && !found; ++x) {
        for (std::size_t y = x + 1; y < alive.size() && !found; ++y) {
          const std::size_t i = alive[x], j = alive[y];
          if (a[i][j] == 0) continue;
          for (std::size_t k : alive) a[i][k] += a[j][k];
          for (std::size_t k : alive) a[k][i] += a[k][j];
          piv = alive.begin() + static_cast<std::ptrdiff_t>(x);
          found = true;
        }
      }
      if (!found) {
        out.zero += alive.size();
        break;
      }
    }
    const std::size_t p = *piv;
    const Rational d = a[p][p];
    (d > 0 ? out.positive : out.negative) += 1;
    alive.erase(piv);
    for (std::size_t i : alive) {
      if (a[i][p] == 0) continue;
      const Rational f = a[i][p] / d;
      for (std::size_t j : alive) a[i][j] -= f * a[p][j];
    }
    for (std::size_t i : alive) a[i][p] = a[p][i] = 0;
  }
  return out;
}

PicardLattice::PicardLattice(GramMatrix gram) : gram_(std::move(gram)) {
  const std::size_t n = gram_.size();
  if (n == 0) throw InvariantError("Picard lattice must have rank at least 1");
  for (std::size_t i = 0; i < n; ++i) {
    if (gram_[i].size() != n) throw InvariantError("Gram matrix is not square");
    for (std::size_t j = 0; j < i; ++j) {
      if (gram_[i][j] != gram_[j][i]) {
        throw InvariantError("Gram matrix is not symmetric at (" + std::to_string(i) + ", " +
                             std::to_string(j) + ")");
      }
    }
  }
  const Inertia s = inertia(gram_);
  if (s.positive != 1 || s.zero != 0) {
    throw InvariantError("Gram matrix has inertia (+" + std::to_string(s.positive) + ", -" +
                         std::to_string(s.negative) + ", 0:" + std::to_string(s.zero) +
                         "), expected signature (1, " + std::to_string(n - 1) + ")");
  }
}

bool PicardLattice::is_even() const noexcept {
  for (std::size_t i = 0; i < gram_.size(); ++i) {
    if (gram_[i][i] % 2 != 0) return false;
  }
  return true;
}

std::vector<std::int64_t> PicardLattice::linear_form(const DivisorClass& x) const {
  if (x.size() != rank()) {
    throw PreconditionError("class has " + std::to_string(x.size()) +
                            " coordinates, lattice rank is " + std::to_string(rank()));
  }
  std::vector<std::int64_t> out(rank(), 0);
  for (std::size_t i = 0; i < rank(); ++i) {
    for (std::size_t j = 0; j < rank(); ++j) out[i] += gram_[i][j] * x[j];
  }
  return out;
}

std::int64_t PicardLattice::pair(const DivisorClass& x, const DivisorClass& y) const {
  if (y.size() != rank()) {
    throw PreconditionError("class has " + std::to_string(y.size()) +
                            " coordinates, lattice rank is " + std::to_string(rank()));
  }
  const auto gx = linear_form(x);
  std::int64_t s = 0;
  for (std::size_t i = 0; i < rank(); ++i) s += gx[i] * y[i];
  return s;
}

std::int64_t pair(const PicardLattice& lattice, const DivisorClass& x, const DivisorClass& y) {
  return lattice.pair(x, y);
}

std::string to_string(SurfaceKind kind) {
  switch (kind) {
    case SurfaceKind::K3:
      return "k3";
    case SurfaceKind::Abelian:
      return "abelian";
    case SurfaceKind::Enriques:
      return "enriques";
  }
  return "unknown";
}

SurfaceKind parse_surface_kind(const std::string& text) {
  std::string s;
  for (char c : text) s.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  if (s == "k3") return SurfaceKind::K3;
  if (s == "abelian") return SurfaceKind::Abelian;
  if (s == "enriques") return SurfaceKind::Enriques;
  throw PreconditionError("unknown surface kind '" + text + "' (expected k3, abelian, enriques)");
}

PolarizedSurface::PolarizedSurface(SurfaceKind kind, PicardLattice lattice,
                                   DivisorClass polarization, SurfaceFlags flags)
    : kind_(kind), lattice_(std::move(lattice)), polarization_(std::move(polarization)),
      flags_(flags) {
  if (polarization_.size() != lattice_.rank()) {
    throw InvariantError("polarization has " + std::to_string(polarization_.size()) +
                         " coordinates, lattice rank is " + std::to_string(lattice_.rank()));
  }
  if (degree() <= 0) {
    throw InvariantError("polarization must have positive self-intersection, got " +
                         std::to_string(degree()));
  }
  if ((kind_ == SurfaceKind::K3 || kind_ == SurfaceKind::Enriques) && !lattice_.is_even()) {
    throw InvariantError(to_string(kind_) + " surfaces need an even lattice");
  }
}

std::int64_t PolarizedSurface::h0() const {
  const std::int64_t l2 = degree();
  if (l2 % 2 != 0) throw PreconditionError("h0 needs an even L^2, got " + std::to_string(l2));
  switch (kind_) {
    case SurfaceKind::K3:
      return 2 + l2 / 2;
    case SurfaceKind::Abelian:
      return l2 / 2;
    case SurfaceKind::Enriques:
      return 1 + l2 / 2;
  }
  return 0;
}

PolarizedSurface PolarizedSurface::multiple(std::int64_t m) const {
  DivisorClass l = polarization_;
  for (auto& c : l) c *= m;
  return with_polarization(std::move(l));
}

PolarizedSurface PolarizedSurface::with_polarization(DivisorClass l) const {
  return PolarizedSurface(kind_, lattice_, std::move(l), flags_);
}

bool is_primitive(const DivisorClass& x) {
  std::int64_t g = 0;
  for (auto c : x) g = std::gcd(g, c);
  return g == 1;
}

}  // namespace syz
