#include "syz/verdicts.hpp"

#include <algorithm>
#include <initializer_list>

#include "syz/enumeration.hpp"
#include "syz/error.hpp"
#include "syz/invariants.hpp"

namespace syz {

namespace {

void require_kind(const PolarizedSurface& s, std::initializer_list<SurfaceKind> kinds,
                  const std::string& what) {
  if (std::find(kinds.begin(), kinds.end(), s.kind()) == kinds.end()) {
    throw PreconditionError(what + " does not apply to " + to_string(s.kind()) + " surfaces");
  }
}

void require_p(int p) {
  if (p < 0) throw PreconditionError("p must be nonnegative, got " + std::to_string(p));
}

void require_flags(const PolarizedSurface& s, const std::string& what) {
  std::vector<std::string> missing;
  if (!s.flags().ample) missing.emplace_back("ample");
  if (!s.flags().globally_generated) missing.emplace_back("globally_generated");
  if (missing.empty()) return;
  std::string list;
  for (std::size_t i = 0; i < missing.size(); ++i) list += (i ? ", " : "") + missing[i];
  throw PreconditionError(what + " needs L ample and globally generated; missing flags: " + list +
                          " (these cannot be decided from the lattice)");
}

Verdict start(const std::string& procedure, const PolarizedSurface& s, int p) {
  Verdict v;
  v.procedure = procedure;
  v.p = p;
  v.polarization = s.polarization();
  return v;
}

void note_assumed_ample(Verdict& v, const PolarizedSurface& s) {
  if (!s.flags().ample) v.notes.emplace_back("L is assumed ample; flags.ample is not set");
}

HypothesisCheck hypothesis(std::string name, bool satisfied,
                           std::vector<std::pair<std::string, std::int64_t>> values) {
  return HypothesisCheck{std::move(name), satisfied, std::move(values)};
}

// Settles v by the isotropic criterion: searches h-degrees 1..max_degree and
// fails at the smallest degree carrying an isotropic class, listing all of
// them. Witness degrees are taken against v.polarization.
void apply_isotropic_criterion(Verdict& v, const PicardLattice& lattice, const DivisorClass& h,
                               std::int64_t max_degree) {
  for (std::int64_t d = 1; d <= max_degree; ++d) {
    const auto found = enumerate_classes(lattice, h, d, 0);
    if (found.empty()) continue;
    v.outcome = Outcome::FailsNp;
    for (const auto& x : found) {
      v.witnesses.push_back(
          Witness{x, lattice.pair(v.polarization, x), 0, witness_role::kIsotropic});
    }
    v.notes.emplace_back("numerical witness: isotropic class of degree " + std::to_string(d) +
                         "; the curve it represents is not constructed");
    return;
  }
  v.outcome = Outcome::HoldsNp;
  v.searched_degree_bound = max_degree;
}

}  // namespace

Verdict theorem_a_verdict(const PolarizedSurface& s, int p) {
  require_kind(s, {SurfaceKind::K3, SurfaceKind::Abelian}, "theorem_A_verdict");
  require_p(p);
  Verdict v = start("theorem_A", s, p);
  const std::int64_t l2 = s.degree();
  const std::int64_t b = p + 2;
  const std::int64_t threshold = 5 * b * b;
  v.hypotheses.push_back(
      hypothesis("L^2 >= 5(p+2)^2", l2 >= threshold, {{"L^2", l2}, {"5(p+2)^2", threshold}}));
  note_assumed_ample(v, s);
  if (s.kind() == SurfaceKind::Abelian) {
    v.notes.emplace_back(
        "abelian case: equivalence with the isotropic criterion after Kuronya-Lozovanu "
        "[KL15, Theorem 1.1]");
  }
  if (l2 < threshold) {
    v.outcome = Outcome::HypothesisNotMet;
    return v;
  }
  v.notes.emplace_back(
      "the Seshadri condition at a very general point is decided by a single isotropic class");
  apply_isotropic_criterion(v, s.lattice(), s.polarization(), b);
  return v;
}

Verdict k3_sharp_verdict(const PolarizedSurface& s, int p) {
  require_kind(s, {SurfaceKind::K3}, "k3_sharp_verdict");
  require_p(p);
  Verdict v = start("k3_sharp", s, p);
  note_assumed_ample(v, s);
  const std::int64_t l2 = s.degree();
  const std::int64_t a_rhs = std::int64_t{p + 4} * (p + 4);
  const bool branch_a = 2 * l2 > a_rhs;
  v.hypotheses.push_back(hypothesis("branch (a): 2 L^2 > (p+4)^2", branch_a,
                                    {{"2L^2", 2 * l2}, {"(p+4)^2", a_rhs}}));
  if (branch_a) {
    apply_isotropic_criterion(v, s.lattice(), s.polarization(), p + 2);
    return v;
  }
  const std::int64_t b_rhs = std::int64_t{p + 6} * (p + 6);
  const bool branch_b = 4 * l2 > b_rhs;
  v.hypotheses.push_back(hypothesis("branch (b): 4 L^2 > (p+6)^2", branch_b,
                                    {{"4L^2", 4 * l2}, {"(p+6)^2", b_rhs}}));
  if (!branch_b) {
    v.outcome = Outcome::HypothesisNotMet;
    return v;
  }
  std::vector<Witness> genus_two;
  for (std::int64_t d = 1; d <= p + 4; ++d) {
    for (auto& x : enumerate_classes(s, d, 2)) {
      genus_two.push_back(Witness{std::move(x), d, 2, witness_role::kGenusTwo});
    }
  }
  v.hypotheses.push_back(hypothesis("no class with F^2 = 2 and 1 <= L.F <= p+4", genus_two.empty(),
                                    {{"count", static_cast<std::int64_t>(genus_two.size())},
                                     {"p+4", p + 4}}));
  if (!genus_two.empty()) {
    v.outcome = Outcome::Inconclusive;
    v.witnesses = std::move(genus_two);
    v.notes.emplace_back(
        "genus-two exception: the equivalence is not available; genus_two_obstruction may "
        "still decide");
    return v;
  }
  apply_isotropic_criterion(v, s.lattice(), s.polarization(), p + 2);
  return v;
}

Verdict genus_two_obstruction(const PolarizedSurface& s, int p) {
  require_flags(s, "genus_two_obstruction");
  require_p(p);
  Verdict v = start("genus_two_obstruction", s, p);
  std::int64_t threshold = 0;
  std::string name;
  switch (s.kind()) {
    case SurfaceKind::K3:
      threshold = 3 * std::int64_t{p} + 6;
      name = "L^2 >= 3p+6";
      break;
    case SurfaceKind::Abelian:
      threshold = 3 * std::int64_t{p} + 14;
      name = "L^2 >= 3p+14";
      break;
    case SurfaceKind::Enriques:
      threshold = 3 * std::int64_t{p} + 7;
      name = "L^2 >= 3p+7";
      break;
  }
  const std::int64_t l2 = s.degree();
  v.hypotheses.push_back(hypothesis(name, l2 >= threshold, {{"L^2", l2}, {"bound", threshold}}));
  if (l2 < threshold) {
    v.outcome = Outcome::Inconclusive;
    return v;
  }
  for (std::int64_t d = 3; d <= p + 4; ++d) {
    for (auto& x : enumerate_classes(s, d, 2)) {
      v.witnesses.push_back(Witness{std::move(x), d, 2, witness_role::kGenusTwo});
    }
  }
  if (v.witnesses.empty()) {
    v.outcome = Outcome::Inconclusive;
    v.notes.emplace_back("no class with F^2 = 2 and 3 <= L.F <= p+4");
    return v;
  }
  v.outcome = Outcome::FailsNp;
  v.notes.emplace_back(
      "numerical witness: a smooth genus-two curve in the witness class is not certified");
  return v;
}

Verdict combined_k3_verdict(const PolarizedSurface& s, int p) {
  Verdict v = k3_sharp_verdict(s, p);
  v.procedure = "k3_combined";
  if (v.outcome != Outcome::Inconclusive) return v;
  if (!s.flags().ample || !s.flags().globally_generated) {
    v.notes.emplace_back(
        "genus_two_obstruction not consulted: it needs flags.ample and "
        "flags.globally_generated");
    return v;
  }
  const Verdict g = genus_two_obstruction(s, p);
  v.hypotheses.insert(v.hypotheses.end(), g.hypotheses.begin(), g.hypotheses.end());
  v.notes.insert(v.notes.end(), g.notes.begin(), g.notes.end());
  if (g.outcome == Outcome::FailsNp) {
    v.outcome = Outcome::FailsNp;
    v.witnesses = g.witnesses;
  }
  return v;
}

Verdict mukai_multiple_verdict(const PolarizedSurface& s, int m, int p) {
  require_kind(s, {SurfaceKind::K3}, "mukai_multiple_verdict");
  require_p(p);
  if (m < p || m > p + 3) {
    throw PreconditionError("m must lie in {p, p+1, p+2, p+3}; got m = " + std::to_string(m) +
                            ", p = " + std::to_string(p) + " (no result covers this multiple)");
  }
  if (m <= p + 2 && p < 2) {
    throw PreconditionError("m in {p, p+1, p+2} needs p >= 2; got p = " + std::to_string(p));
  }
  const PolarizedSurface multiple = s.multiple(m);
  Verdict v = start("mukai_multiple", multiple, p);
  note_assumed_ample(v, s);
  const std::int64_t l2 = s.degree();
  v.hypotheses.push_back(hypothesis("p <= m <= p+3", true, {{"m", m}, {"p", p}, {"L^2", l2}}));

  if (m == p + 3) {
    v.outcome = Outcome::HoldsNp;
    v.notes.emplace_back("(p+3) L has property (N_p) for every ample L");
    return v;
  }
  std::int64_t criterion = 0;  // largest L-degree of an obstructing isotropic class
  if (m == p + 2) {
    criterion = 1;
  } else if (m == p + 1) {
    if (l2 >= 4 || p > 2) criterion = 1;
  } else if ((l2 >= 4 && p > 2) || (l2 == 2 && p > 4)) {
    criterion = 1;
  } else if (p == 2 && l2 >= 6) {
    criterion = 2;
  }
  if (criterion == 0) {
    const std::int64_t cliff = (m - 1) * l2 - 2;
    v.outcome = Outcome::FailsNp;
    v.witnesses.push_back(
        Witness{s.polarization(), m * l2, l2, witness_role::kCliffordRestriction});
    v.notes.emplace_back("L restricted to a curve C in |mL| has Clifford index at most (m-1) L^2 - 2 = " +
                         std::to_string(cliff) + " <= p");
    return v;
  }
  v.hypotheses.push_back(hypothesis("no isotropic E with L.E <= criterion", true,
                                    {{"criterion", criterion}}));
  apply_isotropic_criterion(v, s.lattice(), s.polarization(), criterion);
  v.hypotheses.back().satisfied = v.outcome == Outcome::HoldsNp;
  if (v.searched_degree_bound) v.searched_degree_bound = m * criterion;
  return v;
}

Verdict enriques_verdict(const PolarizedSurface& s, int p) {
  require_kind(s, {SurfaceKind::Enriques}, "enriques_verdict");
  require_flags(s, "enriques_verdict");
  require_p(p);
  Verdict v = start("enriques", s, p);
  v.conditional_on = "GL-secant";
  v.notes.emplace_back("conditional on the Green-Lazarsfeld secant conjecture");
  const std::int64_t l2 = s.degree();
  const std::int64_t b = p + 2;
  const std::int64_t threshold = 4 * b * b;
  v.hypotheses.push_back(
      hypothesis("L^2 > 4(p+2)^2", l2 > threshold, {{"L^2", l2}, {"4(p+2)^2", threshold}}));
  if (l2 <= threshold) {
    v.outcome = Outcome::HypothesisNotMet;
    return v;
  }
  apply_isotropic_criterion(v, s.lattice(), s.polarization(), b);
  return v;
}

Verdict restriction_obstruction(const PolarizedSurface& s, const DivisorClass& f, int p) {
  require_p(p);
  Verdict v = start("restriction_obstruction", s, p);
  const std::int64_t self = s.lattice().square(f);
  const std::int64_t degree = s.degree_of(f);
  const bool genus = self >= 0;
  const bool low = degree >= 1 && degree <= p + 2;
  v.hypotheses.push_back(hypothesis("p_a(F) >= 1, i.e. F^2 >= 0", genus, {{"F^2", self}}));
  v.hypotheses.push_back(
      hypothesis("1 <= L.F <= p+2", low, {{"L.F", degree}, {"p+2", std::int64_t{p} + 2}}));
  v.notes.emplace_back("F is assumed effective and reduced");
  v.notes.emplace_back("L is assumed ample and globally generated");
  if (genus && low) {
    v.outcome = Outcome::FailsNp;
    v.witnesses.push_back(Witness{f, degree, self, witness_role::kRestriction});
  } else {
    v.outcome = Outcome::Inconclusive;
  }
  return v;
}

SlopeStability slope_stability_condition(const PolarizedSurface& s, const DivisorClass& f, int p) {
  require_p(p);
  SlopeStability out;
  out.h0 = s.h0();
  if (out.h0 < std::int64_t{p} + 3) {
    throw PreconditionError("slope condition needs h0(L) >= p+3; h0(L) = " +
                            std::to_string(out.h0) + ", p = " + std::to_string(p));
  }
  out.r = out.h0 - 1;
  out.i = out.h0 - p - 2;
  const std::int64_t l2 = s.degree();
  const std::int64_t fl = s.degree_of(f);
  out.satisfied = Integer(out.i) * l2 > Integer(out.r) * fl;
  Integer binom;
  mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(out.r - 1),
               static_cast<unsigned long>(out.i - 1));
  Rational ratio(Integer(out.r), Integer(out.i));
  ratio.canonicalize();
  out.value = -Rational(binom) * (Rational(Integer(l2)) - ratio * Rational(Integer(fl)));
  return out;
}

CrossCheckReport cross_check(const PolarizedSurface& s, int p) {
  require_kind(s, {SurfaceKind::K3, SurfaceKind::Abelian}, "cross_check");
  require_p(p);
  CrossCheckReport report;
  auto check = [&](const std::string& what, bool ok) {
    report.checks.push_back(what);
    if (!ok) report.violations.push_back(what);
  };
  auto check_witnesses = [&](const Verdict& v) {
    for (auto& problem : verify_witnesses(v, s.lattice())) {
      report.checks.push_back("witness: " + problem);
      report.violations.push_back(std::move(problem));
    }
  };

  const Verdict a = theorem_a_verdict(s, p);
  check_witnesses(a);
  const bool a_hyp = a.outcome != Outcome::HypothesisNotMet;
  if (a_hyp) {
    bool obstruction = false;
    for (std::int64_t d = 1; d <= p + 2 && !obstruction; ++d) {
      for (const auto& f : enumerate_classes(s, d, 0)) {
        if (restriction_obstruction(s, f, p).outcome == Outcome::FailsNp) {
          obstruction = true;
          break;
        }
      }
    }
    check("theorem_A is FailsNp iff an enumerated class fails restriction_obstruction",
          (a.outcome == Outcome::FailsNp) == obstruction);

    const SeshadriCertificate cert = seshadri_certificate(s, p);
    check("Seshadri certificate implies theorem_A is not FailsNp",
          !cert.certified || a.outcome != Outcome::FailsNp);
    check("Seshadri certificate iff theorem_A is HoldsNp",
          cert.certified == (a.outcome == Outcome::HoldsNp));
  }
  if (s.kind() == SurfaceKind::K3) {
    const Verdict k = k3_sharp_verdict(s, p);
    check_witnesses(k);
    const bool k_decided = k.outcome == Outcome::HoldsNp || k.outcome == Outcome::FailsNp;
    if (a_hyp && k_decided) {
      check("k3_sharp agrees with theorem_A", k.outcome == a.outcome);
    }
    if (a_hyp) {
      check("k3_sharp is decided whenever theorem_A's hypothesis holds", k_decided);
    }
  }
  return report;
}

}  // namespace syz
