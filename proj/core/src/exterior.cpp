#include "syz/exterior.hpp"

#include "syz/error.hpp"

namespace syz {

namespace {

std::uint64_t mask_of(const Subset& s) {
  std::uint64_t m = 0;
  for (std::size_t i : s) m |= std::uint64_t{1} << i;
  return m;
}

}  // namespace

ExteriorIndex::ExteriorIndex(std::size_t n, std::size_t p) : n_(n), p_(p) {
  if (n > 64) throw RangeError("exterior powers are limited to n <= 64, got " + std::to_string(n));
  if (p > n) return;
  Subset current(p);
  for (std::size_t i = 0; i < p; ++i) current[i] = i;
  while (true) {
    by_mask_.emplace(mask_of(current), subsets_.size());
    subsets_.push_back(current);
    // advance to the next subset in lexicographic order
    std::size_t i = p;
    while (i > 0 && current[i - 1] == n - p + i - 1) --i;
    if (i == 0) break;
    ++current[i - 1];
    for (std::size_t j = i; j < p; ++j) current[j] = current[j - 1] + 1;
  }
}

std::size_t ExteriorIndex::index_of(const Subset& s) const {
  if (s.size() != p_) return npos;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] >= n_ || (i > 0 && s[i] <= s[i - 1])) return npos;
  }
  return index_of_mask(mask_of(s));
}

std::size_t ExteriorIndex::index_of_mask(std::uint64_t mask) const {
  auto it = by_mask_.find(mask);
  return it == by_mask_.end() ? npos : it->second;
}

ExteriorIndex exterior_basis(std::size_t n, std::size_t p) { return ExteriorIndex(n, p); }

std::size_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace syz
