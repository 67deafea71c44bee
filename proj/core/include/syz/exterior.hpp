#pragma once

#include <cstddef>
#include <cstdint>
#include <unordered_map>
#include <vector>

namespace syz {

using Subset = std::vector<std::size_t>;

/// Basis of the p-th exterior power of an n-dimensional space: the p-element
/// subsets of {0..n-1} in lexicographic order. That order is the contractual
/// basis order for every Koszul matrix. p > n gives the empty basis.
class ExteriorIndex {
 public:
  ExteriorIndex(std::size_t n, std::size_t p);

  std::size_t n() const noexcept { return n_; }
  std::size_t p() const noexcept { return p_; }
  std::size_t size() const noexcept { return subsets_.size(); }

  const std::vector<Subset>& order() const noexcept { return subsets_; }
  const Subset& subset(std::size_t index) const { return subsets_.at(index); }

  /// Position of a strictly increasing subset, or npos if it is not a
  /// p-subset of {0..n-1}.
  std::size_t index_of(const Subset& s) const;
  std::size_t index_of_mask(std::uint64_t mask) const;

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

 private:
  std::size_t n_;
  std::size_t p_;
  std::vector<Subset> subsets_;
  std::unordered_map<std::uint64_t, std::size_t> by_mask_;
};

ExteriorIndex exterior_basis(std::size_t n, std::size_t p);

/// Binomial coefficient as an unsigned count; 0 when k > n.
std::size_t binomial(std::size_t n, std::size_t k);

}  // namespace syz
