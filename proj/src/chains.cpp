#include "compdnf/chains.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "compdnf/error.hpp"

namespace compdnf {

namespace {

std::uint64_t binom(std::size_t n, std::size_t r) {
  if (r > n) return 0;
  std::uint64_t c = 1;
  for (std::size_t i = 1; i <= r; ++i) c = c * (n - r + i) / i;
  return c;
}

}  // namespace

std::vector<Chain> hansel(std::size_t k) {
  if (k < 1 || k > kMaxChainWidth) {
    throw Error(ErrorKind::invalid_argument,
                "hansel needs 1 <= k <= " + std::to_string(kMaxChainWidth));
  }
  std::vector<std::vector<std::uint64_t>> chains{{0, 1}};
  for (std::size_t w = 2; w <= k; ++w) {
    std::vector<std::vector<std::uint64_t>> next;
    next.reserve(chains.size() * 2);
    for (const auto& c : chains) {
      // c.0 ... top.0, top.1  and  c.1 without the top
      std::vector<std::uint64_t> longer;
      longer.reserve(c.size() + 1);
      for (auto p : c) longer.push_back(p << 1);
      longer.push_back((c.back() << 1) | 1u);
      next.push_back(std::move(longer));
      if (c.size() >= 2) {
        std::vector<std::uint64_t> shorter;
        shorter.reserve(c.size() - 1);
        for (std::size_t i = 0; i + 1 < c.size(); ++i) shorter.push_back((c[i] << 1) | 1u);
        next.push_back(std::move(shorter));
      }
    }
    chains = std::move(next);
  }
  std::vector<Chain> out;
  out.reserve(chains.size());
  for (auto& c : chains) out.push_back({k, std::move(c)});
  std::sort(out.begin(), out.end(),
            [](const Chain& a, const Chain& b) { return a.bottom() < b.bottom(); });
  return out;
}

std::vector<Chain> band_chains(std::size_t k, std::size_t lo, std::size_t hi) {
  if (lo > hi || hi > k) {
    throw Error(ErrorKind::invalid_argument,
                "band [" + std::to_string(lo) + ", " + std::to_string(hi) +
                    "] is not inside [0, " + std::to_string(k) + "]");
  }
  std::vector<Chain> out;
  for (auto& c : hansel(k)) {
    Chain cut{k, {}};
    for (auto p : c.points) {
      const auto ones = static_cast<std::size_t>(std::popcount(p));
      if (ones >= lo && ones <= hi) cut.points.push_back(p);
    }
    if (!cut.points.empty()) out.push_back(std::move(cut));
  }
  return out;
}

std::map<std::size_t, std::size_t> chain_census(const std::vector<Chain>& chains) {
  std::map<std::size_t, std::size_t> census;
  for (const auto& c : chains) ++census[c.size()];
  return census;
}

std::map<std::size_t, std::size_t> hansel_census(std::size_t k) {
  std::map<std::size_t, std::size_t> census;
  for (std::size_t p = 0; 2 * p <= k; ++p) {
    const auto count = binom(k, p) - (p == 0 ? 0 : binom(k, p - 1));
    if (count != 0) census[k - 2 * p + 1] = count;
  }
  return census;
}

}  // namespace compdnf
