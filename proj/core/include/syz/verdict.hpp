#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "syz/lattice.hpp"

namespace syz {

enum class Outcome { HoldsNp, FailsNp, HypothesisNotMet, Inconclusive };

std::string to_string(Outcome outcome);

struct HypothesisCheck {
  std::string name;
  bool satisfied = false;
  /// Named integer quantities the check compared, in display order.
  std::vector<std::pair<std::string, std::int64_t>> values;
};

/// Roles a witness class can play.
namespace witness_role {
inline constexpr const char* kIsotropic = "isotropic";      ///< F^2 = 0, 1 <= L.F <= p+2
inline constexpr const char* kGenusTwo = "genus_two";       ///< F^2 = 2, L.F <= p+4
inline constexpr const char* kRestriction = "restriction";  ///< F^2 >= 0, 1 <= L.F <= p+2
/// O_C(L0) on C in |m L0|: degree = m L0^2, self_int = L0^2.
inline constexpr const char* kCliffordRestriction = "clifford_restriction";
}  // namespace witness_role

struct Witness {
  DivisorClass coords;
  std::int64_t degree = 0;    ///< (L.F) against the tested polarization
  std::int64_t self_int = 0;  ///< (F^2)
  std::string role;
};

/// Outcome of one decision procedure together with everything it checked.
/// FailsNp always carries at least one witness; HypothesisNotMet always has
/// an unsatisfied entry in `hypotheses`.
struct Verdict {
  std::string procedure;
  Outcome outcome = Outcome::Inconclusive;
  int p = 0;
  DivisorClass polarization;
  std::vector<HypothesisCheck> hypotheses;
  std::vector<Witness> witnesses;
  std::optional<std::string> conditional_on;
  std::vector<std::string> notes;
  /// Isotropic classes were searched exhaustively up to this degree.
  std::optional<std::int64_t> searched_degree_bound;
};

/// Stable field names: procedure, outcome, p, polarization, hypotheses[]
/// {name, satisfied, values}, witnesses[] {coords, degree, self_int, role},
/// conditional_on, notes[], searched_degree_bound.
std::string to_json(const Verdict& verdict);
std::string render_text(const Verdict& verdict);

/// Recomputes each witness's degree and self-intersection with pair() and
/// checks the inequalities of its role. Returns one message per problem.
std::vector<std::string> verify_witnesses(const Verdict& verdict, const PicardLattice& lattice);

}  // namespace syz
