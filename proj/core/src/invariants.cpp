#include "syz/invariants.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <initializer_list>
#include <tuple>

#include "syz/enumeration.hpp"
#include "syz/error.hpp"
#include "syz/rational.hpp"

namespace syz {

namespace {

Integer determinant(const GramMatrix& g) {
  const std::size_t n = g.size();
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = Rational(Integer(static_cast<long>(g[i][j])));
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && a[piv][c] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != c) {
      std::swap(a[piv], a[c]);
      det = -det;
    }
    det *= a[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      if (a[r][c] == 0) continue;
      const Rational f = a[r][c] / a[c][c];
      for (std::size_t j = c; j < n; ++j) a[r][j] -= f * a[c][j];
    }
  }
  return det.get_num();
}

void require_kind(const PolarizedSurface& s, std::initializer_list<SurfaceKind> kinds,
                  const char* what) {
  if (std::find(kinds.begin(), kinds.end(), s.kind()) == kinds.end()) {
    throw PreconditionError(std::string(what) + " is not defined for " + to_string(s.kind()) +
                            " surfaces");
  }
}

}  // namespace

IsotropicSearchPlan isotropic_search_plan(const PicardLattice& lattice, const DivisorClass& h) {
  IsotropicSearchPlan plan;
  const std::size_t n = lattice.rank();
  if (n == 1) {
    plan.degree_bound = 0;
    plan.reason = "rank one: only the zero class is isotropic";
    return plan;
  }
  if (n == 2) {
    const Integer minus_det = -determinant(lattice.gram());
    if (mpz_perfect_square_p(minus_det.get_mpz_t())) {
      plan.guaranteed = true;
      plan.reason = "rank two with square discriminant";
    } else {
      plan.degree_bound = 0;
      plan.reason = "rank two with non-square discriminant";
    }
    return plan;
  }
  if (n >= 5) {
    plan.guaranteed = true;
    plan.reason = "indefinite of rank at least five";
    return plan;
  }
  Integer height = 0;
  for (const auto& row : lattice.gram())
    for (auto v : row) height += static_cast<long>(std::llabs(v));
  const Integer three_h = 3 * height;
  Integer coord_bound;
  if (n == 3) {
    coord_bound = three_h;
  } else {
    // ceil(sqrt((3H)^3))
    const Integer cube = three_h * three_h * three_h;
    mpz_sqrt(coord_bound.get_mpz_t(), cube.get_mpz_t());
    if (coord_bound * coord_bound < cube) coord_bound += 1;
  }
  Integer form_norm = 0;
  for (auto v : lattice.linear_form(h)) form_norm += static_cast<long>(std::llabs(v));
  const Integer bound = coord_bound * form_norm;
  plan.degree_bound = bound.get_si();
  plan.reason = "Cassels bound on the smallest isotropic vector";
  return plan;
}

ExtendedInt min_isotropic_degree_up_to(const PicardLattice& lattice, const DivisorClass& h,
                                       std::int64_t max_degree) {
  for (std::int64_t d = 1; d <= max_degree; ++d) {
    if (!enumerate_classes(lattice, h, d, 0).empty()) return d;
  }
  return std::nullopt;
}

ExtendedInt min_isotropic_degree(const PicardLattice& lattice, const DivisorClass& h) {
  const auto plan = isotropic_search_plan(lattice, h);
  if (plan.degree_bound) return min_isotropic_degree_up_to(lattice, h, *plan.degree_bound);
  for (std::int64_t d = 1;; ++d) {
    if (!enumerate_classes(lattice, h, d, 0).empty()) return d;
  }
}

ExtendedInt min_isotropic_degree(const PolarizedSurface& surface) {
  return min_isotropic_degree(surface.lattice(), surface.polarization());
}

bool has_phi_two(const PicardLattice& lattice, const DivisorClass& b) {
  return enumerate_classes(lattice, b, 1, 0).empty() &&
         !enumerate_classes(lattice, b, 2, 0).empty();
}

namespace {

// phi(L) searched up to cap = floor(L^2/8) + 1, beyond which 2 phi - 2 is
// already larger than floor(L^2/4).
std::pair<ExtendedInt, std::int64_t> capped_phi(const PolarizedSurface& s) {
  const std::int64_t cap = s.degree() / 8 + 1;
  return {min_isotropic_degree_up_to(s.lattice(), s.polarization(), cap), cap};
}

std::int64_t min_other_terms(const ExtendedInt& phi, std::int64_t quarter) {
  return phi ? std::min(2 * *phi - 2, quarter) : quarter;
}

}  // namespace

MuSearch mu_search(const PolarizedSurface& surface) {
  require_kind(surface, {SurfaceKind::Enriques}, "mu");
  const auto [phi, cap] = capped_phi(surface);
  (void)cap;
  MuSearch out;
  out.degree_bound = min_other_terms(phi, surface.degree() / 4) + 3;
  for (std::int64_t d = 1; d <= out.degree_bound; ++d) {
    for (const auto& b : enumerate_classes(surface, d, 4)) {
      if (b == surface.polarization()) continue;
      if (!has_phi_two(surface.lattice(), b)) continue;
      out.value = d - 2;
      out.witness = b;
      return out;
    }
  }
  return out;
}

ExtendedInt mu(const PolarizedSurface& surface) { return mu_search(surface).value; }

CliffordIndex clifford_index_general_curve(const PolarizedSurface& surface) {
  require_kind(surface, {SurfaceKind::Enriques}, "the Clifford index formula");
  if (!surface.flags().globally_generated) {
    throw PreconditionError(
        "the Clifford index formula needs L globally generated; set flags.globally_generated "
        "after checking it (it cannot be decided from the lattice)");
  }
  CliffordIndex out;
  std::tie(out.phi, out.phi_cap) = capped_phi(surface);
  out.quarter_degree = surface.degree() / 4;
  out.mu = mu_search(surface);
  out.value = min_other_terms(out.phi, out.quarter_degree);
  if (out.mu.value) out.value = std::min(out.value, *out.mu.value - 2);
  return out;
}

SeshadriCertificate seshadri_certificate(const PolarizedSurface& surface, int p) {
  require_kind(surface, {SurfaceKind::K3, SurfaceKind::Abelian}, "the Seshadri certificate");
  if (p < 0) throw PreconditionError("p must be nonnegative");
  SeshadriCertificate out;
  const std::int64_t bound = p + 2;
  if (7 * surface.degree() <= 8 * bound * bound) {
    out.reason = "L^2 = " + std::to_string(surface.degree()) + " is not above 8/7 (p+2)^2 = " +
                 std::to_string(8 * bound * bound) + "/7";
    return out;
  }
  for (std::int64_t d = 1; d <= bound; ++d) {
    auto found = primitive_isotropic_classes(surface.lattice(), surface.polarization(), d);
    if (!found.empty()) {
      out.witnesses = std::move(found);
      out.reason = "isotropic class of degree " + std::to_string(d) + " <= p+2 = " +
                   std::to_string(bound);
      return out;
    }
  }
  out.certified = true;
  out.reason = "epsilon(L; x) > " + std::to_string(bound) + " at a very general point";
  return out;
}

std::int64_t chain_self_intersection(const std::vector<std::int64_t>& n) {
  if (n.empty()) throw PreconditionError("chain multiplicities must be nonempty");
  for (auto v : n) {
    if (v < 1) throw PreconditionError("chain multiplicities must be positive");
  }
  std::int64_t s = n.front() * n.front() + n.back() * n.back();
  for (std::size_t i = 0; i + 1 < n.size(); ++i) s += (n[i] - n[i + 1]) * (n[i] - n[i + 1]);
  return s;
}

}  // namespace syz
