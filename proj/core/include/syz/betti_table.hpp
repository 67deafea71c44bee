#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>

namespace syz {

/// dim K_{p,q} for 0 <= p <= p_max and q_lo <= q <= q_hi. Cells outside the
/// window are absent, not zero.
class BettiTable {
 public:
  BettiTable(std::size_t p_max, int q_lo, int q_hi);

  std::size_t p_max() const noexcept { return p_max_; }
  int q_lo() const noexcept { return q_lo_; }
  int q_hi() const noexcept { return q_hi_; }

  bool contains(std::size_t p, int q) const noexcept {
    return p <= p_max_ && q >= q_lo_ && q <= q_hi_;
  }
  std::optional<std::size_t> at(std::size_t p, int q) const;
  void set(std::size_t p, int q, std::size_t value);

  const std::map<std::pair<std::size_t, int>, std::size_t>& entries() const noexcept {
    return entries_;
  }

  friend bool operator==(const BettiTable&, const BettiTable&) = default;

 private:
  std::size_t p_max_;
  int q_lo_;
  int q_hi_;
  std::map<std::pair<std::size_t, int>, std::size_t> entries_;
};

/// Rows are q, columns are p; zero cells print as "·".
std::string render_text(const BettiTable& table);
/// Header "q,p0,p1,..."; one line per q.
std::string render_csv(const BettiTable& table);
/// {"p_max", "q_lo", "q_hi", "entries": [{"p", "q", "dim"}, ...]}
std::string to_json(const BettiTable& table);
/// Inverse of to_json; throws SchemaError.
BettiTable betti_table_from_json(const std::string& text);

}  // namespace syz
