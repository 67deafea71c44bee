#include "syz/module_io.hpp"

#include <set>
#include <sstream>

#include "json.hpp"
#include "syz/error.hpp"
#include "syz/rational.hpp"

namespace syz {

namespace {

using nlohmann::json;

std::string line_column(const std::string& text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

json parse_document(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw SchemaError(line_column(text, e.byte == 0 ? 0 : e.byte - 1), "invalid JSON");
  }
}

std::int64_t get_int(const json& v, const std::string& path) {
  if (!v.is_number_integer()) throw SchemaError(path, "expected an integer");
  return v.get<std::int64_t>();
}

std::size_t get_count(const json& v, const std::string& path) {
  const auto x = get_int(v, path);
  if (x < 0) throw SchemaError(path, "expected a nonnegative integer");
  return static_cast<std::size_t>(x);
}

const json& field(const json& obj, const char* key) {
  if (!obj.contains(key)) throw SchemaError(key, "missing field");
  return obj.at(key);
}

}  // namespace

GradedModuleTable parse_module_json(const std::string& text) {
  const json doc = parse_document(text);
  if (!doc.is_object()) throw SchemaError("", "module document must be a JSON object");

  const std::size_t n = get_count(field(doc, "n"), "n");
  const auto q_min = get_int(field(doc, "q_min"), "q_min");
  const auto q_max = get_int(field(doc, "q_max"), "q_max");
  if (q_max < q_min) throw SchemaError("q_max", "must be at least q_min");
  const auto span = static_cast<std::size_t>(q_max - q_min);

  const json& jd = field(doc, "dims");
  if (!jd.is_array()) throw SchemaError("dims", "expected an array");
  if (jd.size() != span + 1) {
    throw SchemaError("dims", "expected " + std::to_string(span + 1) + " entries for window [" +
                                  std::to_string(q_min) + ", " + std::to_string(q_max) +
                                  "], got " + std::to_string(jd.size()));
  }
  std::vector<std::size_t> dims;
  for (std::size_t k = 0; k < jd.size(); ++k) {
    dims.push_back(get_count(jd[k], "dims[" + std::to_string(k) + "]"));
  }

  const json& jm = field(doc, "mult");
  if (!jm.is_array()) throw SchemaError("mult", "expected an array");
  if (jm.size() != span) {
    throw SchemaError("mult", "expected " + std::to_string(span) + " degrees, got " +
                                  std::to_string(jm.size()));
  }
  std::vector<std::vector<RationalMatrix>> mult(span);
  for (std::size_t k = 0; k < span; ++k) {
    const std::string pk = "mult[" + std::to_string(k) + "]";
    if (!jm[k].is_array() || jm[k].size() != n) {
      throw SchemaError(pk, "expected an array of n = " + std::to_string(n) + " matrices");
    }
    for (std::size_t j = 0; j < n; ++j) {
      const std::string pj = pk + "[" + std::to_string(j) + "]";
      const json& entries = jm[k][j];
      if (!entries.is_array()) throw SchemaError(pj, "expected an array of triplets");
      std::vector<Triplet> t;
      for (std::size_t e = 0; e < entries.size(); ++e) {
        const std::string pe = pj + "[" + std::to_string(e) + "]";
        const json& trip = entries[e];
        if (!trip.is_array() || trip.size() != 3) {
          throw SchemaError(pe, "expected [row, col, \"num/den\"]");
        }
        const std::size_t r = get_count(trip[0], pe + "[0]");
        const std::size_t c = get_count(trip[1], pe + "[1]");
        if (r >= dims[k + 1]) {
          throw SchemaError(pe + "[0]", "row " + std::to_string(r) + " out of range (dim " +
                                            std::to_string(dims[k + 1]) + ")");
        }
        if (c >= dims[k]) {
          throw SchemaError(pe + "[1]", "column " + std::to_string(c) + " out of range (dim " +
                                            std::to_string(dims[k]) + ")");
        }
        Rational value;
        if (trip[2].is_string()) {
          try {
            value = parse_rational(trip[2].get<std::string>());
          } catch (const std::invalid_argument& ex) {
            throw SchemaError(pe + "[2]", ex.what());
          }
        } else if (trip[2].is_number_integer()) {
          value = Rational(Integer(std::to_string(trip[2].get<std::int64_t>())));
        } else {
          throw SchemaError(pe + "[2]", "expected a rational string \"num/den\"");
        }
        t.push_back({r, c, std::move(value)});
      }
      mult[k].push_back(RationalMatrix::from_triplets(dims[k + 1], dims[k], std::move(t)));
    }
  }
  return GradedModuleTable(n, static_cast<int>(q_min), static_cast<int>(q_max), std::move(dims),
                           std::move(mult));
}

std::string module_to_json(const GradedModuleTable& m) {
  // hand-written so that each triplet stays on one line
  std::ostringstream out;
  out << "{\n  \"n\": " << m.n() << ",\n  \"q_min\": " << m.q_min() << ",\n  \"q_max\": "
      << m.q_max() << ",\n  \"dims\": [";
  for (std::size_t k = 0; k < m.dims().size(); ++k) out << (k ? ", " : "") << m.dims()[k];
  out << "],\n  \"mult\": [";
  const auto& table = m.mult_table();
  for (std::size_t k = 0; k < table.size(); ++k) {
    out << (k ? "," : "") << "\n    [";
    for (std::size_t j = 0; j < table[k].size(); ++j) {
      out << (j ? "," : "") << "\n      [";
      bool first = true;
      for (const auto& t : table[k][j].triplets()) {
        out << (first ? "" : ", ") << "[" << t.row << ", " << t.col << ", \""
            << format_rational(t.value) << "\"]";
        first = false;
      }
      out << "]";
    }
    out << (table[k].empty() ? "]" : "\n    ]");
  }
  out << (table.empty() ? "]" : "\n  ]") << "\n}\n";
  return out.str();
}

std::vector<LatticePoint> parse_points(const std::string& text) {
  std::vector<LatticePoint> points;
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '[') {
    const json doc = parse_document(text);
    if (!doc.is_array()) throw SchemaError("", "expected an array of points");
    for (std::size_t i = 0; i < doc.size(); ++i) {
      const std::string pi = "[" + std::to_string(i) + "]";
      if (!doc[i].is_array()) throw SchemaError(pi, "expected an array of integers");
      LatticePoint pt;
      for (std::size_t c = 0; c < doc[i].size(); ++c) {
        pt.push_back(get_int(doc[i][c], pi + "[" + std::to_string(c) + "]"));
      }
      points.push_back(std::move(pt));
    }
  } else {
    std::istringstream in(text);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
      for (char& ch : line) {
        if (ch == ',') ch = ' ';
      }
      std::istringstream row(line);
      LatticePoint pt;
      std::string tok;
      while (row >> tok) {
        try {
          std::size_t used = 0;
          const long long v = std::stoll(tok, &used);
          if (used != tok.size()) throw std::invalid_argument(tok);
          pt.push_back(v);
        } catch (const std::exception&) {
          throw SchemaError("line " + std::to_string(lineno), "not an integer: '" + tok + "'");
        }
      }
      if (!pt.empty()) points.push_back(std::move(pt));
    }
  }
  if (points.empty()) throw SchemaError("", "no points given");
  std::set<LatticePoint> seen;
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (points[i].size() != points.front().size()) {
      throw SchemaError("point " + std::to_string(i + 1), "dimension differs from the first point");
    }
    if (!seen.insert(points[i]).second) {
      throw SchemaError("point " + std::to_string(i + 1), "duplicate point");
    }
  }
  return points;
}

}  // namespace syz
