#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace syz {

using DivisorClass = std::vector<std::int64_t>;
using GramMatrix = std::vector<std::vector<std::int64_t>>;

/// Integer or +infinity (nullopt).
using ExtendedInt = std::optional<std::int64_t>;

struct Inertia {
  std::size_t positive = 0;
  std::size_t negative = 0;
  std::size_t zero = 0;
};

/// Exact inertia of a symmetric integer matrix by symmetric LDL^T
/// elimination over the rationals.
Inertia inertia(const GramMatrix& gram);

/// Neron-Severi lattice: a symmetric integral Gram matrix of signature
/// (1, rho - 1). The constructor rejects anything else with InvariantError.
class PicardLattice {
 public:
  explicit PicardLattice(GramMatrix gram);

  std::size_t rank() const noexcept { return gram_.size(); }
  const GramMatrix& gram() const noexcept { return gram_; }

  /// x.x even for all x, i.e. every diagonal entry is even.
  bool is_even() const noexcept;

  std::int64_t pair(const DivisorClass& x, const DivisorClass& y) const;
  std::int64_t square(const DivisorClass& x) const { return pair(x, x); }

  /// G x, the linear form y -> x.y in coordinates.
  std::vector<std::int64_t> linear_form(const DivisorClass& x) const;

 private:
  GramMatrix gram_;
};

/// x^T G y. Throws PreconditionError on a length mismatch.
std::int64_t pair(const PicardLattice& lattice, const DivisorClass& x, const DivisorClass& y);

enum class SurfaceKind { K3, Abelian, Enriques };

std::string to_string(SurfaceKind kind);
/// "k3", "abelian", "enriques" (case-insensitive); throws PreconditionError.
SurfaceKind parse_surface_kind(const std::string& text);

/// Facts about L the caller vouches for; nothing here is derived from the
/// lattice.
struct SurfaceFlags {
  bool ample = false;
  bool globally_generated = false;
};

/// A surface with numerically trivial canonical class, its Picard lattice and
/// a polarization L with L^2 > 0. K3 and Enriques lattices must be even.
class PolarizedSurface {
 public:
  PolarizedSurface(SurfaceKind kind, PicardLattice lattice, DivisorClass polarization,
                   SurfaceFlags flags = {});

  SurfaceKind kind() const noexcept { return kind_; }
  const PicardLattice& lattice() const noexcept { return lattice_; }
  const DivisorClass& polarization() const noexcept { return polarization_; }
  const SurfaceFlags& flags() const noexcept { return flags_; }

  std::int64_t degree() const { return lattice_.square(polarization_); }  ///< L^2
  std::int64_t degree_of(const DivisorClass& x) const { return lattice_.pair(polarization_, x); }

  /// Riemann-Roch with vanishing higher cohomology: K3 2 + L^2/2,
  /// abelian L^2/2, Enriques 1 + L^2/2.
  std::int64_t h0() const;

  /// Same surface with polarization m*L.
  PolarizedSurface multiple(std::int64_t m) const;
  PolarizedSurface with_polarization(DivisorClass l) const;

 private:
  SurfaceKind kind_;
  PicardLattice lattice_;
  DivisorClass polarization_;
  SurfaceFlags flags_;
};

bool is_primitive(const DivisorClass& x);

}  // namespace syz
