#include "syz/fixtures.hpp"

#include <array>
#include <utility>

#include "syz/error.hpp"

namespace syz {

GramMatrix hyperbolic_plane() { return {{0, 1}, {1, 0}}; }

GramMatrix e8_negative() {
  GramMatrix g(8, std::vector<std::int64_t>(8, 0));
  for (std::size_t i = 0; i < 8; ++i) g[i][i] = -2;
  // Bourbaki numbering 1..8, shifted to 0..7
  constexpr std::array<std::pair<int, int>, 7> edges{
      {{0, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {1, 3}}};
  for (auto [a, b] : edges) g[a][b] = g[b][a] = 1;
  return g;
}

GramMatrix rank_one(std::int64_t self_int) { return {{self_int}}; }

GramMatrix direct_sum(const GramMatrix& a, const GramMatrix& b) {
  const std::size_t n = a.size() + b.size();
  GramMatrix g(n, std::vector<std::int64_t>(n, 0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) g[i][j] = a[i][j];
  for (std::size_t i = 0; i < b.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) g[a.size() + i][a.size() + j] = b[i][j];
  return g;
}

GramMatrix enriques_lattice() { return direct_sum(hyperbolic_plane(), e8_negative()); }

GramMatrix lattice_by_name(const std::string& name) {
  if (name == "U") return hyperbolic_plane();
  if (name == "U+E8(-1)") return enriques_lattice();
  if (name.size() > 2 && name.front() == '<' && name.back() == '>') {
    const std::string inner = name.substr(1, name.size() - 2);
    std::size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(inner, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == inner.size() && v > 0 && v % 2 == 0) return rank_one(v);
  }
  throw PreconditionError("unknown lattice fixture '" + name +
                          "' (expected U, U+E8(-1), <2>, <2n>)");
}

}  // namespace syz
