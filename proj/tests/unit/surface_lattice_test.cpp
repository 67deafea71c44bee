#include <random>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "syz/enumeration.hpp"
#include "syz/error.hpp"
#include "syz/fixtures.hpp"
#include "syz/invariants.hpp"
#include "syz/lattice.hpp"

namespace {

using syz::DivisorClass;
using syz::GramMatrix;
using syz::PicardLattice;
using syz::PolarizedSurface;
using syz::SurfaceKind;

const syz::SurfaceFlags kAmpleGg{true, true};

PolarizedSurface on_u(SurfaceKind kind, DivisorClass l, syz::SurfaceFlags flags = kAmpleGg) {
  return PolarizedSurface(kind, PicardLattice(syz::hyperbolic_plane()), std::move(l), flags);
}

DivisorClass u_e8(std::int64_t a, std::int64_t b) {
  DivisorClass x(10, 0);
  x[0] = a;
  x[1] = b;
  return x;
}

PolarizedSurface enriques_u_e8(std::int64_t a, std::int64_t b,
                               syz::SurfaceFlags flags = kAmpleGg) {
  return PolarizedSurface(SurfaceKind::Enriques, PicardLattice(syz::enriques_lattice()),
                          u_e8(a, b), flags);
}

TEST(Pair, HyperbolicPlane) {
  const PicardLattice u(syz::hyperbolic_plane());
  EXPECT_EQ(syz::pair(u, {1, 0}, {0, 1}), 1);
  EXPECT_EQ(u.square({1, 0}), 0);
  EXPECT_EQ(u.square({2, 3}), 12);
  EXPECT_THROW(syz::pair(u, {1, 0}, {1}), syz::PreconditionError);
}

TEST(Pair, RankOne) {
  const PicardLattice a(syz::rank_one(2));
  EXPECT_EQ(a.square({1}), 2);
}

TEST(Lattice, Inertia) {
  const auto e8 = syz::inertia(syz::e8_negative());
  EXPECT_EQ(e8.negative, 8u);
  EXPECT_EQ(e8.positive, 0u);
  const auto en = syz::inertia(syz::enriques_lattice());
  EXPECT_EQ(en.positive, 1u);
  EXPECT_EQ(en.negative, 9u);
  const auto u = syz::inertia(syz::hyperbolic_plane());
  EXPECT_EQ(u.positive, 1u);
  EXPECT_EQ(u.negative, 1u);
  const auto degenerate = syz::inertia({{1, 1}, {1, 1}});
  EXPECT_EQ(degenerate.zero, 1u);
}

TEST(Lattice, Validation) {
  EXPECT_THROW(PicardLattice({{0, 1}, {2, 0}}), syz::InvariantError);
  EXPECT_THROW(PicardLattice({{2, 0}, {0, 2}}), syz::InvariantError);
  EXPECT_THROW(PicardLattice({{2, 0}, {0, 0}}), syz::InvariantError);
  EXPECT_THROW(PicardLattice(syz::rank_one(-2)), syz::InvariantError);
  EXPECT_TRUE(PicardLattice(syz::enriques_lattice()).is_even());
  EXPECT_FALSE(PicardLattice({{1, 0}, {0, -1}}).is_even());
}

TEST(Lattice, NamedFixtures) {
  EXPECT_EQ(syz::lattice_by_name("U"), syz::hyperbolic_plane());
  EXPECT_EQ(syz::lattice_by_name("<4>"), syz::rank_one(4));
  EXPECT_EQ(syz::lattice_by_name("U+E8(-1)"), syz::enriques_lattice());
  EXPECT_THROW(syz::lattice_by_name("E7"), syz::PreconditionError);
}

TEST(Surface, RiemannRoch) {
  EXPECT_EQ(on_u(SurfaceKind::K3, {3, 3}).h0(), 11);
  EXPECT_EQ(on_u(SurfaceKind::Abelian, {3, 3}).h0(), 9);
  EXPECT_EQ(on_u(SurfaceKind::Enriques, {3, 3}).h0(), 10);
  EXPECT_EQ(on_u(SurfaceKind::K3, {1, 2}).multiple(3).polarization(), (DivisorClass{3, 6}));
}

TEST(Enumerate, Examples) {
  const PicardLattice u(syz::hyperbolic_plane());
  EXPECT_EQ(syz::enumerate_classes(u, {2, 3}, 2, 0), (std::vector<DivisorClass>{{0, 1}}));
  EXPECT_TRUE(syz::enumerate_classes(u, {2, 3}, 1, 0).empty());
  const PicardLattice a(syz::rank_one(2));
  for (std::int64_t d = 1; d <= 10; ++d) EXPECT_TRUE(syz::enumerate_classes(a, {3}, d, 0).empty());
  EXPECT_EQ(syz::enumerate_classes(a, {3}, 6, 2), (std::vector<DivisorClass>{{1}}));
}

TEST(Enumerate, Preconditions) {
  const PicardLattice u(syz::hyperbolic_plane());
  EXPECT_THROW(syz::enumerate_classes(u, {2, 3}, 0, 0), syz::PreconditionError);
  EXPECT_THROW(syz::enumerate_classes(u, {1, 0}, 1, 0), syz::PreconditionError);
}

TEST(Enumerate, MatchesBoxSearchOnCorpus) {
  for (const auto& entry : oracle::small_rank_corpus()) {
    const PicardLattice lattice(entry.gram);
    for (const auto& h : entry.polarizations) {
      for (std::int64_t d = 1; d <= 6; ++d) {
        for (std::int64_t s = -6; s <= 6; ++s) {
          ASSERT_EQ(syz::enumerate_classes(lattice, h, d, s),
                    oracle::box_enumerate(lattice, h, d, s))
              << entry.name << " d=" << d << " s=" << s;
        }
      }
    }
  }
}

// A random unimodular matrix with its inverse, from elementary operations.
std::pair<GramMatrix, GramMatrix> random_unimodular(std::mt19937& rng, std::size_t n) {
  GramMatrix u(n, std::vector<std::int64_t>(n, 0));
  GramMatrix inv = u;
  for (std::size_t i = 0; i < n; ++i) u[i][i] = inv[i][i] = 1;
  std::uniform_int_distribution<std::size_t> idx(0, n - 1);
  std::uniform_int_distribution<int> coef(-1, 1);
  for (int step = 0; step < 4; ++step) {
    const std::size_t i = idx(rng), j = idx(rng);
    const int c = coef(rng);
    if (i == j || c == 0) continue;
    // U <- U E with E = I + c e_ij (column j += c column i); inverse E^-1 = I - c e_ij.
    for (std::size_t r = 0; r < n; ++r) u[r][j] += c * u[r][i];
    for (std::size_t k = 0; k < n; ++k) inv[i][k] -= c * inv[j][k];
  }
  return {u, inv};
}

DivisorClass mul(const GramMatrix& m, const DivisorClass& x) {
  DivisorClass y(m.size(), 0);
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < x.size(); ++j) y[i] += m[i][j] * x[j];
  return y;
}

TEST(Enumerate, InvariantUnderBasisChange) {
  std::mt19937 rng(3);
  for (const auto& entry : oracle::small_rank_corpus()) {
    const std::size_t n = entry.gram.size();
    if (n < 2) continue;
    const auto [u, inv] = random_unimodular(rng, n);
    GramMatrix g2(n, std::vector<std::int64_t>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t a = 0; a < n; ++a)
          for (std::size_t b = 0; b < n; ++b) g2[i][j] += u[a][i] * entry.gram[a][b] * u[b][j];
    const PicardLattice original(entry.gram);
    const PicardLattice changed(g2);
    for (const auto& h : entry.polarizations) {
      const DivisorClass h2 = mul(inv, h);
      for (std::int64_t d = 1; d <= 5; ++d) {
        for (std::int64_t s : {-2, 0, 2}) {
          auto mapped = syz::enumerate_classes(changed, h2, d, s);
          for (auto& x : mapped) x = mul(u, x);
          std::sort(mapped.begin(), mapped.end());
          ASSERT_EQ(mapped, syz::enumerate_classes(original, h, d, s)) << entry.name;
        }
      }
    }
  }
}

TEST(MinIsotropicDegree, Examples) {
  EXPECT_EQ(syz::min_isotropic_degree(on_u(SurfaceKind::K3, {2, 3})), 2);
  EXPECT_EQ(syz::min_isotropic_degree(enriques_u_e8(3, 8)), 3);
  const PolarizedSurface a(SurfaceKind::K3, PicardLattice(syz::rank_one(2)), {3});
  EXPECT_FALSE(syz::min_isotropic_degree(a).has_value());
  // Rank two, non-square discriminant: no isotropic class at all.
  const PicardLattice anisotropic({{2, 3}, {3, 2}});
  EXPECT_FALSE(syz::min_isotropic_degree(anisotropic, {1, 1}).has_value());
}

TEST(MinIsotropicDegree, MatchesBoxSearchOnRankThree) {
  for (const auto& entry : oracle::small_rank_corpus()) {
    if (entry.gram.size() != 3) continue;
    const PicardLattice lattice(entry.gram);
    for (const auto& h : entry.polarizations) {
      const auto phi = syz::min_isotropic_degree(lattice, h);
      const auto plan = syz::isotropic_search_plan(lattice, h);
      ASSERT_TRUE(plan.degree_bound.has_value());
      const std::int64_t box = oracle::box_min_isotropic_degree(lattice, h, 12);
      if (phi && *phi <= 12) {
        EXPECT_EQ(*phi, box) << entry.name;
      } else {
        EXPECT_EQ(box, 0) << entry.name;
      }
    }
  }
}

TEST(Mu, HyperbolicPlaneHasNoCandidates) {
  const auto s = PolarizedSurface(SurfaceKind::Enriques, PicardLattice(syz::hyperbolic_plane()),
                                  {2, 3}, kAmpleGg);
  EXPECT_FALSE(syz::mu(s).has_value());
}

TEST(Mu, PolarizationIsExcluded) {
  // U(2): L = (1,1) has L^2 = 4 and phi(L) = 2, but L is not a candidate.
  const auto s = PolarizedSurface(SurfaceKind::Enriques, PicardLattice({{0, 2}, {2, 0}}), {1, 1},
                                  kAmpleGg);
  EXPECT_TRUE(syz::has_phi_two(s.lattice(), {1, 1}));
  EXPECT_FALSE(syz::mu(s).has_value());
}

TEST(Mu, WrongKind) {
  EXPECT_THROW(syz::mu(on_u(SurfaceKind::K3, {2, 3})), syz::PreconditionError);
}

TEST(Clifford, Examples) {
  const auto c = syz::clifford_index_general_curve(enriques_u_e8(2, 3));
  EXPECT_EQ(c.value, 2);
  EXPECT_EQ(c.phi, 2);
  EXPECT_FALSE(c.mu.value.has_value());
  EXPECT_EQ(c.quarter_degree, 3);
  EXPECT_EQ(syz::clifford_index_general_curve(enriques_u_e8(1, 1)).value, 0);
  // phi = 3; a class with B^2 = 4 and small degree would need a, b >= 1 with
  // ab >= 3, hence degree 8a + 3b >= 17: the minimum is 2 phi - 2 = 4.
  EXPECT_EQ(syz::clifford_index_general_curve(enriques_u_e8(3, 8)).value, 4);
}

TEST(Clifford, RefusesWithoutGlobalGeneration) {
  EXPECT_THROW(syz::clifford_index_general_curve(enriques_u_e8(2, 3, {true, false})),
               syz::PreconditionError);
  EXPECT_THROW(syz::clifford_index_general_curve(on_u(SurfaceKind::K3, {2, 3})),
               syz::PreconditionError);
}

TEST(Seshadri, Examples) {
  EXPECT_TRUE(syz::seshadri_certificate(on_u(SurfaceKind::K3, {6, 6}), 2).certified);
  const auto b = syz::seshadri_certificate(on_u(SurfaceKind::K3, {1, 10}), 2);
  EXPECT_FALSE(b.certified);
  EXPECT_EQ(b.witnesses, (std::vector<DivisorClass>{{0, 1}}));
  const auto c = syz::seshadri_certificate(on_u(SurfaceKind::K3, {2, 2}), 0);
  EXPECT_FALSE(c.certified);
  EXPECT_FALSE(c.witnesses.empty());
  // Numeric threshold alone: L^2 = 4 is not above 8/7 * 4.
  EXPECT_FALSE(syz::seshadri_certificate(on_u(SurfaceKind::K3, {1, 2}), 0).certified);
  EXPECT_THROW(syz::seshadri_certificate(enriques_u_e8(2, 3), 0), syz::PreconditionError);
}

TEST(Seshadri, MonotoneInP) {
  for (const auto& entry : oracle::small_rank_corpus()) {
    const PicardLattice lattice(entry.gram);
    const auto kind = lattice.is_even() ? SurfaceKind::K3 : SurfaceKind::Abelian;
    for (const auto& h : entry.polarizations) {
      const PolarizedSurface s(kind, lattice, h);
      for (int p = 0; p < 6; ++p) {
        if (syz::seshadri_certificate(s, p + 1).certified) {
          EXPECT_TRUE(syz::seshadri_certificate(s, p).certified) << entry.name << " p=" << p;
        }
      }
    }
  }
}

TEST(Chain, Examples) {
  EXPECT_EQ(syz::chain_self_intersection({1}), 2);
  EXPECT_EQ(syz::chain_self_intersection({1, 1}), 2);
  EXPECT_EQ(syz::chain_self_intersection({1, 2, 1}), 4);
  EXPECT_THROW(syz::chain_self_intersection({}), syz::PreconditionError);
  EXPECT_THROW(syz::chain_self_intersection({1, 0}), syz::PreconditionError);
}

TEST(Chain, MatchesChainGram) {
  std::mt19937 rng(17);
  std::uniform_int_distribution<int> len(1, 7);
  std::uniform_int_distribution<std::int64_t> mult(1, 9);
  for (int trial = 0; trial < 200; ++trial) {
    const int r = len(rng);
    std::vector<std::int64_t> n(r);
    for (auto& v : n) v = mult(rng);
    std::int64_t f2 = 0;
    for (int i = 0; i < r; ++i) {
      f2 += -2 * n[i] * n[i];
      if (i + 1 < r) f2 += 2 * n[i] * n[i + 1];
    }
    EXPECT_EQ(syz::chain_self_intersection(n), -f2);
  }
}

}  // namespace
