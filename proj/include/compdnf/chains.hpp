#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <vector>

#include "compdnf/bitvec.hpp"

namespace compdnf {

inline constexpr std::size_t kMaxChainWidth = 20;

/// A saturated chain in B^width; points are chi values in ascending order.
struct Chain {
  std::size_t width = 0;
  std::vector<std::uint64_t> points;

  std::size_t size() const { return points.size(); }
  std::uint64_t bottom() const { return points.front(); }
  std::uint64_t top() const { return points.back(); }
  BitVec point(std::size_t i) const { return chi_inv(points[i], width); }

  friend bool operator==(const Chain&, const Chain&) = default;
};

/// Symmetric chain decomposition of B^k, chains sorted by chi of their bottom point.
std::vector<Chain> hansel(std::size_t k);

/// Hansel chains cut to the points whose ones-count lies in [lo, hi].
std::vector<Chain> band_chains(std::size_t k, std::size_t lo, std::size_t hi);

/// chain length -> number of chains.
std::map<std::size_t, std::size_t> chain_census(const std::vector<Chain>& chains);

/// Expected census C(k,p) - C(k,p-1) chains of length k-2p+1.
std::map<std::size_t, std::size_t> hansel_census(std::size_t k);

}  // namespace compdnf
