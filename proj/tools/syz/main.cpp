// syz: Betti tables of graded modules and (N_p) verdicts for polarized
// surfaces from the command line.
//
// Exit codes: 0 success, 1 a verdict returned FailsNp (or an N_p check
// failed), 2 usage or validation error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "syz/betti_table.hpp"
#include "syz/enumeration.hpp"
#include "syz/error.hpp"
#include "syz/graded_module.hpp"
#include "syz/invariants.hpp"
#include "syz/koszul.hpp"
#include "syz/module_io.hpp"
#include "syz/surface_io.hpp"
#include "syz/verdicts.hpp"

namespace {

using nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitFails = 1;
constexpr int kExitUsage = 2;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_input(const std::string& path) {
  if (path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

unsigned thread_count() {
  const char* env = std::getenv("SYZ_THREADS");
  if (env == nullptr || *env == '\0') return 1;
  char* end = nullptr;
  const long v = std::strtol(env, &end, 10);
  if (*end != '\0' || v < 1 || v > 1024) {
    throw UsageError(std::string("SYZ_THREADS must be an integer in 1..1024, got '") + env + "'");
  }
  return static_cast<unsigned>(v);
}

syz::DivisorClass parse_class(const std::string& text) {
  syz::DivisorClass out;
  std::string item;
  std::stringstream in(text);
  while (std::getline(in, item, ',')) {
    std::size_t used = 0;
    try {
      out.push_back(std::stoll(item, &used));
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size()) {
      throw UsageError("class must be comma-separated integers, got '" + text + "'");
    }
  }
  if (out.empty()) throw UsageError("class must not be empty");
  return out;
}

ordered_json class_json(const syz::DivisorClass& x) { return ordered_json(x); }

std::string class_text(const syz::DivisorClass& x) {
  std::string s = "(";
  for (std::size_t i = 0; i < x.size(); ++i) s += (i ? "," : "") + std::to_string(x[i]);
  return s + ")";
}

struct Options {
  std::string format = "text";

  // fixtures
  int rnc_degree = 0;
  int ver_n = 0;
  int ver_d = 0;
  std::string points_file;
  int q_max = 4;

  // betti / np
  std::string module_file;
  std::optional<int> p_max;
  std::optional<int> q_lo;
  std::optional<int> q_hi;
  int p = 0;
  std::optional<int> q_bound;

  // surface
  std::string surface_file;
  std::string theorem;
  int m = 0;
  std::optional<std::int64_t> max_degree;
  std::vector<std::int64_t> chain;
  std::string class_text;
};

bool json_mode(const Options& o) { return o.format == "json"; }

void reject_csv(const Options& o, const std::string& what) {
  if (o.format == "csv") throw UsageError("--format csv is not available for " + what);
}

int emit_verdict(const Options& o, const syz::Verdict& v) {
  reject_csv(o, "verdicts");
  std::cout << (json_mode(o) ? syz::to_json(v) : syz::render_text(v));
  return v.outcome == syz::Outcome::FailsNp ? kExitFails : kExitOk;
}

// ---- fixtures -------------------------------------------------------------

int emit_module(const syz::GradedModuleTable& m) {
  std::cout << syz::module_to_json(m);
  return kExitOk;
}

// ---- betti / np -----------------------------------------------------------

int run_betti(const Options& o) {
  const auto m = syz::parse_module_json(read_input(o.module_file));
  const int p_max = o.p_max.value_or(static_cast<int>(m.n()));
  const int q_lo = o.q_lo.value_or(m.q_min());
  const int q_hi = o.q_hi.value_or(m.q_max() - 1);
  if (p_max < 0) throw UsageError("--pmax must be nonnegative");
  if (q_lo > q_hi) throw UsageError("--qlo must not exceed --qhi");
  const auto table =
      syz::betti_table(m, static_cast<std::size_t>(p_max), q_lo, q_hi, thread_count());
  if (o.format == "json") {
    std::cout << syz::to_json(table);
  } else if (o.format == "csv") {
    std::cout << syz::render_csv(table);
  } else {
    std::cout << syz::render_text(table);
  }
  return kExitOk;
}

int run_np(const Options& o) {
  reject_csv(o, "np");
  const auto m = syz::parse_module_json(read_input(o.module_file));
  const int q_bound = o.q_bound.value_or(3);
  if (q_bound < 2) throw UsageError("--qbound must be at least 2 (N_p concerns degrees q >= 2)");
  std::vector<std::string> notes;
  if (!o.q_bound) {
    notes.emplace_back(
        "q_bound defaulted to 3; cells with q > 3 were not examined (pass --qbound to widen)");
  }
  const auto r = syz::check_np(m, o.p, q_bound);
  if (json_mode(o)) {
    ordered_json j;
    j["p"] = o.p;
    j["q_bound"] = q_bound;
    j["holds"] = r.holds;
    if (r.witness) {
      j["witness"] = {{"p", r.witness->first}, {"q", r.witness->second}, {"dim", r.witness_dim}};
    } else {
      j["witness"] = nullptr;
    }
    j["notes"] = notes;
    std::cout << j.dump(2) << '\n';
  } else {
    if (r.holds) {
      std::cout << "holds\n";
    } else {
      std::cout << "fails at K_{" << r.witness->first << "," << r.witness->second
                << "} (dim " << r.witness_dim << ")\n";
    }
    for (const auto& n : notes) std::cout << "note: " << n << '\n';
  }
  return r.holds ? kExitOk : kExitFails;
}

// ---- surface verbs --------------------------------------------------------

int run_verdict(const Options& o, const syz::PolarizedSurface& s) {
  std::string theorem = o.theorem;
  if (theorem.empty()) {
    switch (s.kind()) {
      case syz::SurfaceKind::K3:
        theorem = "k3";
        break;
      case syz::SurfaceKind::Abelian:
        theorem = "a";
        break;
      case syz::SurfaceKind::Enriques:
        theorem = "enriques";
        break;
    }
  }
  if (theorem == "a") return emit_verdict(o, syz::theorem_a_verdict(s, o.p));
  if (theorem == "k3") return emit_verdict(o, syz::combined_k3_verdict(s, o.p));
  return emit_verdict(o, syz::enriques_verdict(s, o.p));
}

int run_isotropic(const Options& o, const syz::PolarizedSurface& s) {
  reject_csv(o, "isotropic");
  std::int64_t bound = 0;
  syz::ExtendedInt phi;
  std::string reason;
  if (o.max_degree) {
    if (*o.max_degree < 1) throw UsageError("--maxdeg must be at least 1");
    bound = *o.max_degree;
    phi = syz::min_isotropic_degree_up_to(s.lattice(), s.polarization(), bound);
    reason = "searched degrees 1.." + std::to_string(bound);
  } else {
    const auto plan = syz::isotropic_search_plan(s.lattice(), s.polarization());
    phi = syz::min_isotropic_degree(s);
    bound = phi.value_or(0);
    reason = plan.reason;
  }
  std::vector<std::pair<std::int64_t, syz::DivisorClass>> classes;
  for (std::int64_t d = 1; d <= bound; ++d) {
    for (auto& x : syz::primitive_isotropic_classes(s.lattice(), s.polarization(), d)) {
      classes.emplace_back(d, std::move(x));
    }
  }
  // Without --maxdeg and with no isotropic class, phi is infinite.
  const bool exhaustive = o.max_degree.has_value() || phi.has_value();
  if (json_mode(o)) {
    ordered_json j;
    j["max_degree"] = o.max_degree ? ordered_json(*o.max_degree) : ordered_json(nullptr);
    j["min_degree"] = phi ? ordered_json(*phi) : ordered_json(nullptr);
    j["exhaustive"] = exhaustive;
    j["reason"] = reason;
    auto arr = ordered_json::array();
    for (const auto& [d, x] : classes) arr.push_back({{"degree", d}, {"coords", class_json(x)}});
    j["primitive_classes"] = arr;
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << "min isotropic degree: " << (phi ? std::to_string(*phi) : "none") << '\n';
    std::cout << "  " << reason << '\n';
    for (const auto& [d, x] : classes) {
      std::cout << "  degree " << d << ": " << class_text(x) << '\n';
    }
  }
  return kExitOk;
}

int run_clifford(const Options& o, const syz::PolarizedSurface& s) {
  reject_csv(o, "clifford");
  const auto c = syz::clifford_index_general_curve(s);
  auto ext = [](const syz::ExtendedInt& v) {
    return v ? ordered_json(*v) : ordered_json(nullptr);
  };
  if (json_mode(o)) {
    ordered_json j;
    j["clifford_index"] = c.value;
    j["phi"] = ext(c.phi);
    j["phi_search_cap"] = c.phi_cap;
    j["mu"] = ext(c.mu.value);
    j["mu_search_bound"] = c.mu.degree_bound;
    j["mu_witness"] = c.mu.witness ? class_json(*c.mu.witness) : ordered_json(nullptr);
    j["quarter_degree"] = c.quarter_degree;
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << "clifford index: " << c.value << '\n';
    std::cout << "  phi: " << (c.phi ? std::to_string(*c.phi) : "> " + std::to_string(c.phi_cap))
              << '\n';
    std::cout << "  mu: "
              << (c.mu.value ? std::to_string(*c.mu.value)
                             : "none up to degree " + std::to_string(c.mu.degree_bound))
              << '\n';
    std::cout << "  floor(L^2/4): " << c.quarter_degree << '\n';
  }
  return kExitOk;
}

int run_seshadri(const Options& o, const syz::PolarizedSurface& s) {
  reject_csv(o, "seshadri");
  const auto c = syz::seshadri_certificate(s, o.p);
  if (json_mode(o)) {
    ordered_json j;
    j["p"] = o.p;
    j["certified"] = c.certified;
    j["reason"] = c.reason;
    auto arr = ordered_json::array();
    for (const auto& w : c.witnesses) arr.push_back(class_json(w));
    j["witnesses"] = arr;
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << (c.certified ? "certified" : "not certified") << ": " << c.reason << '\n';
    for (const auto& w : c.witnesses) std::cout << "  witness " << class_text(w) << '\n';
  }
  return kExitOk;
}

int run_chain(const Options& o) {
  reject_csv(o, "chain");
  const std::int64_t minus = syz::chain_self_intersection(o.chain);
  if (json_mode(o)) {
    ordered_json j;
    j["multiplicities"] = o.chain;
    j["self_intersection"] = -minus;
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << "F^2 = " << -minus << '\n';
  }
  return kExitOk;
}

int run_slope(const Options& o, const syz::PolarizedSurface& s) {
  reject_csv(o, "slope");
  const auto r = syz::slope_stability_condition(s, parse_class(o.class_text), o.p);
  if (json_mode(o)) {
    ordered_json j;
    j["satisfied"] = r.satisfied;
    j["value"] = syz::format_rational_short(r.value);
    j["h0"] = r.h0;
    j["r"] = r.r;
    j["i"] = r.i;
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << "condition " << (r.satisfied ? "satisfied" : "not satisfied") << '\n';
    std::cout << "  c1 value: " << syz::format_rational_short(r.value) << '\n';
    std::cout << "  h0 = " << r.h0 << ", r = " << r.r << ", i = " << r.i << '\n';
  }
  return kExitOk;
}

int run_crosscheck(const Options& o, const syz::PolarizedSurface& s) {
  reject_csv(o, "crosscheck");
  const auto r = syz::cross_check(s, o.p);
  if (json_mode(o)) {
    ordered_json j;
    j["consistent"] = r.consistent();
    j["checks"] = r.checks;
    j["violations"] = r.violations;
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << (r.consistent() ? "consistent" : "inconsistent") << " (" << r.checks.size()
              << " checks)\n";
    for (const auto& v : r.violations) std::cout << "  violation: " << v << '\n';
  }
  return r.consistent() ? kExitOk : kExitFails;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Koszul cohomology of graded modules and (N_p) verdicts for polarized surfaces"};
  app.require_subcommand(1, 1);
  Options o;
  app.add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"text", "json", "csv"}))
      ->capture_default_str();
  app.fallthrough();

  // fixtures
  auto* fixtures = app.add_subcommand("fixtures", "Write a fixture module to standard output");
  fixtures->require_subcommand(1, 1);
  fixtures->fallthrough();
  fixtures->add_option("--qmax", o.q_max, "Largest degree to tabulate")->capture_default_str();
  auto* rnc = fixtures->add_subcommand("rnc", "Rational normal curve of degree D");
  rnc->add_option("D", o.rnc_degree)->required();
  rnc->fallthrough();
  auto* ver = fixtures->add_subcommand("veronese", "Degree-D Veronese embedding of P^N");
  ver->add_option("N", o.ver_n)->required();
  ver->add_option("D", o.ver_d)->required();
  ver->fallthrough();
  auto* pts = fixtures->add_subcommand("points", "Point configuration read from FILE");
  pts->add_option("FILE", o.points_file)->required();
  pts->fallthrough();

  // betti
  auto* betti = app.add_subcommand("betti", "Betti table of a module file");
  betti->add_option("FILE", o.module_file, "Module file, or - for standard input")->required();
  betti->add_option("--pmax", o.p_max, "Largest p (default: n)");
  betti->add_option("--qlo", o.q_lo, "Smallest q (default: q_min)");
  betti->add_option("--qhi", o.q_hi, "Largest q (default: q_max - 1)");
  betti->fallthrough();

  // np
  auto* np = app.add_subcommand("np", "Check property (N_p) on a module file");
  np->add_option("FILE", o.module_file, "Module file, or - for standard input")->required();
  np->add_option("--p", o.p, "Index p")->required();
  np->add_option("--qbound", o.q_bound, "Largest q examined (default 3)");
  np->fallthrough();

  // surface
  auto* surface = app.add_subcommand("surface", "Invariants and verdicts for a surface file");
  surface->add_option("FILE", o.surface_file, "Surface file, or - for standard input")->required();
  surface->require_subcommand(1, 1);
  surface->fallthrough();
  auto* verdict = surface->add_subcommand("verdict", "(N_p) verdict for L");
  verdict->add_option("--p", o.p)->required();
  verdict->add_option("--theorem", o.theorem)->check(CLI::IsMember({"a", "k3", "enriques"}));
  auto* mukai = surface->add_subcommand("mukai", "(N_p) verdict for m L");
  mukai->add_option("--m", o.m)->required();
  mukai->add_option("--p", o.p)->required();
  auto* isotropic = surface->add_subcommand("isotropic", "Isotropic classes of low degree");
  isotropic->add_option("--maxdeg", o.max_degree);
  auto* clifford = surface->add_subcommand("clifford", "Clifford index of a general curve in |L|");
  auto* seshadri = surface->add_subcommand("seshadri", "Seshadri certificate for p");
  seshadri->add_option("--p", o.p)->required();
  auto* chain = surface->add_subcommand("chain", "Self-intersection on a chain of (-2)-curves");
  chain->add_option("n", o.chain, "Multiplicities n1 .. nr")->required();
  auto* genus2 = surface->add_subcommand("genus2", "Genus-two obstruction");
  genus2->add_option("--p", o.p)->required();
  auto* restrict_cmd = surface->add_subcommand("restrict", "Restriction obstruction for a class F");
  restrict_cmd->add_option("--p", o.p)->required();
  restrict_cmd->add_option("--class", o.class_text, "F as comma-separated coordinates")->required();
  auto* slope = surface->add_subcommand("slope", "Slope-stability inequality for a class F");
  slope->add_option("--p", o.p)->required();
  slope->add_option("--class", o.class_text, "F as comma-separated coordinates")->required();
  auto* crosscheck = surface->add_subcommand("crosscheck", "Consistency checks between procedures");
  crosscheck->add_option("--p", o.p)->required();
  for (auto* sub : surface->get_subcommands({})) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*fixtures) {
      if (*rnc) return emit_module(syz::rational_normal_curve(o.rnc_degree, o.q_max));
      if (*ver) return emit_module(syz::veronese(o.ver_n, o.ver_d, o.q_max));
      return emit_module(syz::build_point_configuration_module(
          syz::parse_points(read_input(o.points_file)), o.q_max));
    }
    if (*betti) return run_betti(o);
    if (*np) return run_np(o);
    if (*chain) return run_chain(o);
    const auto s = syz::parse_surface_json(read_input(o.surface_file));
    if (*verdict) return run_verdict(o, s);
    if (*mukai) return emit_verdict(o, syz::mukai_multiple_verdict(s, o.m, o.p));
    if (*isotropic) return run_isotropic(o, s);
    if (*clifford) return run_clifford(o, s);
    if (*seshadri) return run_seshadri(o, s);
    if (*genus2) return emit_verdict(o, syz::genus_two_obstruction(s, o.p));
    if (*restrict_cmd) {
      return emit_verdict(o, syz::restriction_obstruction(s, parse_class(o.class_text), o.p));
    }
    if (*slope) return run_slope(o, s);
    if (*crosscheck) return run_crosscheck(o, s);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
