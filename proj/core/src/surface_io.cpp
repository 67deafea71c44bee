#include "syz/surface_io.hpp"

#include "json.hpp"
#include "syz/error.hpp"
#include "syz/fixtures.hpp"

namespace syz {

namespace {

using nlohmann::json;

std::vector<std::int64_t> int_vector(const json& v, const std::string& path) {
  if (!v.is_array()) throw SchemaError(path, "expected an array of integers");
  std::vector<std::int64_t> out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!v[i].is_number_integer()) {
      throw SchemaError(path + "[" + std::to_string(i) + "]", "expected an integer");
    }
    out.push_back(v[i].get<std::int64_t>());
  }
  return out;
}

}  // namespace

PolarizedSurface parse_surface_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw SchemaError("", std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw SchemaError("", "surface document must be a JSON object");

  if (!doc.contains("kind") || !doc["kind"].is_string()) {
    throw SchemaError("kind", "expected one of \"k3\", \"abelian\", \"enriques\"");
  }
  SurfaceKind kind;
  try {
    kind = parse_surface_kind(doc["kind"].get<std::string>());
  } catch (const PreconditionError& e) {
    throw SchemaError("kind", e.what());
  }

  if (!doc.contains("gram")) throw SchemaError("gram", "missing field");
  GramMatrix gram;
  if (doc["gram"].is_string()) {
    try {
      gram = lattice_by_name(doc["gram"].get<std::string>());
    } catch (const PreconditionError& e) {
      throw SchemaError("gram", e.what());
    }
  } else if (doc["gram"].is_array()) {
    for (std::size_t i = 0; i < doc["gram"].size(); ++i) {
      gram.push_back(int_vector(doc["gram"][i], "gram[" + std::to_string(i) + "]"));
    }
  } else {
    throw SchemaError("gram", "expected an integer matrix or a built-in lattice name");
  }

  if (!doc.contains("L")) throw SchemaError("L", "missing field");
  DivisorClass l = int_vector(doc["L"], "L");
  if (l.size() != gram.size()) {
    throw SchemaError("L", "has " + std::to_string(l.size()) + " coordinates, lattice rank is " +
                               std::to_string(gram.size()));
  }

  SurfaceFlags flags;
  if (doc.contains("flags")) {
    const json& f = doc["flags"];
    if (!f.is_object()) throw SchemaError("flags", "expected an object");
    for (auto it = f.begin(); it != f.end(); ++it) {
      if (!it.value().is_boolean()) throw SchemaError("flags." + it.key(), "expected a boolean");
      if (it.key() == "ample") {
        flags.ample = it.value().get<bool>();
      } else if (it.key() == "globally_generated") {
        flags.globally_generated = it.value().get<bool>();
      } else {
        throw SchemaError("flags." + it.key(), "unknown flag");
      }
    }
  }
  return PolarizedSurface(kind, PicardLattice(std::move(gram)), std::move(l), flags);
}

std::string surface_to_json(const PolarizedSurface& surface) {
  nlohmann::ordered_json j;
  j["kind"] = to_string(surface.kind());
  j["gram"] = surface.lattice().gram();
  j["L"] = surface.polarization();
  j["flags"] = {{"ample", surface.flags().ample},
                {"globally_generated", surface.flags().globally_generated}};
  return j.dump() + "\n";
}

}  // namespace syz
