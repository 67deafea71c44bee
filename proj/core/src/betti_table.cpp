#include "syz/betti_table.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

#include "json.hpp"
#include "syz/error.hpp"

namespace syz {

namespace {

constexpr const char* kZeroGlyph = "·";

std::string pad_left(const std::string& s, std::size_t width, std::size_t visible) {
  return std::string(width > visible ? width - visible : 0, ' ') + s;
}

}  // namespace

BettiTable::BettiTable(std::size_t p_max, int q_lo, int q_hi)
    : p_max_(p_max), q_lo_(q_lo), q_hi_(q_hi) {
  if (q_hi < q_lo) throw RangeError("empty degree range for Betti table");
}

std::optional<std::size_t> BettiTable::at(std::size_t p, int q) const {
  auto it = entries_.find({p, q});
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

void BettiTable::set(std::size_t p, int q, std::size_t value) {
  if (!contains(p, q)) {
    throw RangeError("cell (" + std::to_string(p) + ", " + std::to_string(q) +
                     ") outside the Betti table window");
  }
  entries_[{p, q}] = value;
}

std::string render_text(const BettiTable& table) {
  std::size_t width = 1;
  for (std::size_t p = 0; p <= table.p_max(); ++p) width = std::max(width, std::to_string(p).size());
  for (const auto& [cell, v] : table.entries()) width = std::max(width, std::to_string(v).size());
  std::size_t label = 3;  // "q\p"
  for (int q = table.q_lo(); q <= table.q_hi(); ++q) {
    label = std::max(label, std::to_string(q).size() + 1);
  }
  width += 1;

  std::ostringstream out;
  out << pad_left("q\\p", label, 3);
  for (std::size_t p = 0; p <= table.p_max(); ++p) {
    const auto s = std::to_string(p);
    out << pad_left(s, width, s.size());
  }
  out << '\n';
  for (int q = table.q_lo(); q <= table.q_hi(); ++q) {
    const auto ql = std::to_string(q) + ":";
    out << pad_left(ql, label, ql.size());
    for (std::size_t p = 0; p <= table.p_max(); ++p) {
      const auto v = table.at(p, q);
      if (!v || *v == 0) {
        out << pad_left(kZeroGlyph, width, 1);
      } else {
        const auto s = std::to_string(*v);
        out << pad_left(s, width, s.size());
      }
    }
    out << '\n';
  }
  return out.str();
}

std::string render_csv(const BettiTable& table) {
  std::ostringstream out;
  out << "q";
  for (std::size_t p = 0; p <= table.p_max(); ++p) out << ",p" << p;
  out << '\n';
  for (int q = table.q_lo(); q <= table.q_hi(); ++q) {
    out << q;
    for (std::size_t p = 0; p <= table.p_max(); ++p) out << ',' << table.at(p, q).value_or(0);
    out << '\n';
  }
  return out.str();
}

std::string to_json(const BettiTable& table) {
  nlohmann::ordered_json j;
  j["p_max"] = table.p_max();
  j["q_lo"] = table.q_lo();
  j["q_hi"] = table.q_hi();
  auto entries = nlohmann::ordered_json::array();
  for (int q = table.q_lo(); q <= table.q_hi(); ++q) {
    for (std::size_t p = 0; p <= table.p_max(); ++p) {
      if (auto v = table.at(p, q)) entries.push_back({{"p", p}, {"q", q}, {"dim", *v}});
    }
  }
  j["entries"] = std::move(entries);
  return j.dump(2) + "\n";
}

BettiTable betti_table_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw SchemaError("", std::string("invalid JSON: ") + e.what());
  }
  auto need_int = [&](const nlohmann::json& obj, const char* key,
                      const std::string& path) -> std::int64_t {
    if (!obj.is_object() || !obj.contains(key)) throw SchemaError(path + key, "missing field");
    const auto& v = obj.at(key);
    if (!v.is_number_integer()) throw SchemaError(path + key, "expected an integer");
    return v.get<std::int64_t>();
  };
  const auto p_max = need_int(j, "p_max", "");
  if (p_max < 0) throw SchemaError("p_max", "must be nonnegative");
  BettiTable table(static_cast<std::size_t>(p_max), static_cast<int>(need_int(j, "q_lo", "")),
                   static_cast<int>(need_int(j, "q_hi", "")));
  if (!j.contains("entries") || !j["entries"].is_array()) {
    throw SchemaError("entries", "expected an array");
  }
  for (std::size_t k = 0; k < j["entries"].size(); ++k) {
    const auto& e = j["entries"][k];
    const std::string path = "entries[" + std::to_string(k) + "].";
    const auto p = need_int(e, "p", path);
    const auto q = need_int(e, "q", path);
    const auto d = need_int(e, "dim", path);
    if (p < 0 || d < 0) throw SchemaError(path, "p and dim must be nonnegative");
    if (!table.contains(static_cast<std::size_t>(p), static_cast<int>(q))) {
      throw SchemaError(path, "cell outside the declared window");
    }
    table.set(static_cast<std::size_t>(p), static_cast<int>(q), static_cast<std::size_t>(d));
  }
  return table;
}

}  // namespace syz
