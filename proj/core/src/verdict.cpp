#include "syz/verdict.hpp"

#include <sstream>

#include "json.hpp"

namespace syz {

namespace {

std::string coords_text(const DivisorClass& x) {
  std::string s = "(";
  for (std::size_t i = 0; i < x.size(); ++i) s += (i ? "," : "") + std::to_string(x[i]);
  return s + ")";
}

}  // namespace

std::string to_string(Outcome outcome) {
  switch (outcome) {
    case Outcome::HoldsNp:
      return "HoldsNp";
    case Outcome::FailsNp:
      return "FailsNp";
    case Outcome::HypothesisNotMet:
      return "HypothesisNotMet";
    case Outcome::Inconclusive:
      return "Inconclusive";
  }
  return "Inconclusive";
}

std::string to_json(const Verdict& v) {
  nlohmann::ordered_json j;
  j["procedure"] = v.procedure;
  j["outcome"] = to_string(v.outcome);
  j["p"] = v.p;
  j["polarization"] = v.polarization;
  auto hyps = nlohmann::ordered_json::array();
  for (const auto& h : v.hypotheses) {
    nlohmann::ordered_json values = nlohmann::ordered_json::object();
    for (const auto& [k, x] : h.values) values[k] = x;
    hyps.push_back({{"name", h.name}, {"satisfied", h.satisfied}, {"values", values}});
  }
  j["hypotheses"] = hyps;
  auto wits = nlohmann::ordered_json::array();
  for (const auto& w : v.witnesses) {
    wits.push_back(
        {{"coords", w.coords}, {"degree", w.degree}, {"self_int", w.self_int}, {"role", w.role}});
  }
  j["witnesses"] = wits;
  j["conditional_on"] = v.conditional_on ? nlohmann::ordered_json(*v.conditional_on) : nullptr;
  j["notes"] = v.notes;
  j["searched_degree_bound"] =
      v.searched_degree_bound ? nlohmann::ordered_json(*v.searched_degree_bound) : nullptr;
  return j.dump(2) + "\n";
}

std::string render_text(const Verdict& v) {
  std::ostringstream out;
  out << v.procedure << ": ";
  switch (v.outcome) {
    case Outcome::HoldsNp:
      out << "holds N_" << v.p;
      break;
    case Outcome::FailsNp:
      out << "fails N_" << v.p;
      break;
    case Outcome::HypothesisNotMet:
      out << "hypothesis not met for N_" << v.p;
      break;
    case Outcome::Inconclusive:
      out << "inconclusive for N_" << v.p;
      break;
  }
  if (v.conditional_on) out << " (conditional on " << *v.conditional_on << ")";
  out << '\n';
  out << "  polarization " << coords_text(v.polarization) << '\n';
  for (const auto& h : v.hypotheses) {
    out << "  hypothesis " << h.name << ": " << (h.satisfied ? "yes" : "no");
    if (!h.values.empty()) {
      out << " (";
      for (std::size_t i = 0; i < h.values.size(); ++i) {
        out << (i ? ", " : "") << h.values[i].first << "=" << h.values[i].second;
      }
      out << ")";
    }
    out << '\n';
  }
  if (v.searched_degree_bound) {
    out << "  isotropic classes searched up to degree " << *v.searched_degree_bound << '\n';
  }
  for (const auto& w : v.witnesses) {
    out << "  witness " << w.role << " " << coords_text(w.coords) << ": degree " << w.degree
        << ", self-intersection " << w.self_int << '\n';
  }
  for (const auto& n : v.notes) out << "  note: " << n << '\n';
  return out.str();
}

std::vector<std::string> verify_witnesses(const Verdict& v, const PicardLattice& lattice) {
  std::vector<std::string> problems;
  if (v.outcome == Outcome::FailsNp && v.witnesses.empty()) {
    problems.push_back(v.procedure + ": FailsNp without a witness");
  }
  const std::int64_t p = v.p;
  for (const auto& w : v.witnesses) {
    const std::string tag = v.procedure + " witness " + coords_text(w.coords) + ": ";
    if (w.coords.size() != lattice.rank()) {
      problems.push_back(tag + "wrong length");
      continue;
    }
    const auto degree = lattice.pair(v.polarization, w.coords);
    const auto self = lattice.square(w.coords);
    if (degree != w.degree) problems.push_back(tag + "recorded degree differs from pair()");
    if (self != w.self_int) problems.push_back(tag + "recorded self-intersection differs");
    const std::string role = w.role;
    if (role == witness_role::kIsotropic) {
      if (self != 0 || degree < 1 || degree > p + 2) problems.push_back(tag + "not isotropic of degree in [1, p+2]");
    } else if (role == witness_role::kGenusTwo) {
      if (self != 2 || degree < 1 || degree > p + 4) problems.push_back(tag + "not F^2 = 2 with degree in [1, p+4]");
    } else if (role == witness_role::kRestriction) {
      if (self < 0 || degree < 1 || degree > p + 2) problems.push_back(tag + "not F^2 >= 0 with degree in [1, p+2]");
    } else if (role == witness_role::kCliffordRestriction) {
      // degree = m L0^2, self = L0^2; Cliff <= (m - 1) L0^2 - 2
      if (self <= 0 || degree % self != 0 || degree - self - 2 > p) {
        problems.push_back(tag + "restricted Clifford bound exceeds p");
      }
    } else {
      problems.push_back(tag + "unknown role '" + role + "'");
    }
  }
  return problems;
}

}  // namespace syz
