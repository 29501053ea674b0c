#pragma once

// Property checks shared by the property suite and the acceptance runner.
// Each returns an empty string on success, otherwise a description of the
// first counterexample.

#include <bit>
#include <random>
#include <string>
#include <vector>

#include "brute.hpp"
#include "compdnf/complete.hpp"
#include "compdnf/oracle.hpp"
#include "compdnf/skeleton.hpp"

namespace checks {

using namespace compdnf;

inline std::vector<int> bits_of(std::uint64_t v, std::size_t w) {
  std::vector<int> out(w);
  for (std::size_t i = 0; i < w; ++i) out[i] = static_cast<int>((v >> (w - 1 - i)) & 1u);
  return out;
}

inline bool check_pair(std::uint64_t alpha, const std::vector<std::uint64_t>& parts,
                       std::size_t w, std::string& why) {
  std::vector<BitVec> bparts;
  std::vector<std::vector<int>> iparts;
  for (auto p : parts) {
    bparts.push_back(chi_inv(p, w));
    iparts.push_back(bits_of(p, w));
  }
  const auto a = chi_inv(alpha, w);
  const auto ia = bits_of(alpha, w);
  const bool d1 = is_decomposition(a, bparts);
  const bool d2 = is_orthogonal_decomposition(a, bparts);
  const bool m1 = is_decomposition(ColMask{alpha}, std::span<const ColMask>(parts));
  const bool m2 = is_orthogonal_decomposition(ColMask{alpha}, std::span<const ColMask>(parts));
  if (d1 != brute::decomposition(ia, iparts) || m1 != d1 ||
      d2 != brute::orthogonal(ia, iparts) || m2 != d2) {
    why = "predicates disagree at alpha=" + a.to_string();
    return false;
  }
  return true;
}

// Both decomposition predicates against position-by-position brute force:
// all pairs of parts exhaustively and random triples, widths 1..6.
inline std::string decomposition_predicates() {
  std::string why;
  std::mt19937_64 rng(101);
  for (std::size_t w = 1; w <= 6; ++w) {
    const std::uint64_t top = std::uint64_t{1} << w;
    for (std::uint64_t alpha = 1; alpha < top; ++alpha) {
      for (std::uint64_t p = 0; p < top; ++p) {
        if (!check_pair(alpha, {p}, w, why)) return why;
        for (std::uint64_t q = 0; q < top; ++q) {
          if (!check_pair(alpha, {p, q}, w, why)) return why;
        }
      }
      for (int t = 0; t < 200; ++t) {
        const auto sub = [&] { return rng() & (rng() % 3 == 0 ? (top - 1) : alpha); };
        if (!check_pair(alpha, {sub(), sub(), sub()}, w, why)) return why;
      }
    }
  }
  return {};
}

// Every decomposition of alpha has chi-sum >= chi(alpha), and proper parts
// have smaller chi. Exhaustive over all part sets for width <= 4, random
// covers for widths 5 and 6.
inline std::string chi_sum_inequality() {
  auto test = [](std::uint64_t alpha, const std::vector<std::uint64_t>& parts,
                 std::size_t w) -> std::string {
    if (!is_decomposition(ColMask{alpha}, std::span<const ColMask>(parts))) return {};
    std::uint64_t sum = 0;
    for (auto p : parts) {
      sum += p;
      if (p != alpha && p >= alpha) return "part not below alpha";
    }
    if (sum < alpha) return "chi sum below chi(alpha) for " + chi_inv(alpha, w).to_string();
    return {};
  };
  for (std::size_t w = 1; w <= 4; ++w) {
    const std::uint64_t top = std::uint64_t{1} << w;
    for (std::uint64_t alpha = 1; alpha < top; ++alpha) {
      // every set of nonzero subvectors of alpha
      std::vector<std::uint64_t> subs;
      for (std::uint64_t s = 1; s < top; ++s) {
        if ((s & ~alpha) == 0) subs.push_back(s);
      }
      for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << subs.size()); ++mask) {
        std::vector<std::uint64_t> parts;
        for (std::size_t i = 0; i < subs.size(); ++i) {
          if ((mask >> i) & 1u) parts.push_back(subs[i]);
        }
        if (auto e = test(alpha, parts, w); !e.empty()) return e;
      }
    }
  }
  std::mt19937_64 rng(102);
  for (std::size_t w = 5; w <= 6; ++w) {
    const std::uint64_t top = std::uint64_t{1} << w;
    for (std::uint64_t alpha = 1; alpha < top; ++alpha) {
      for (int t = 0; t < 300; ++t) {
        std::vector<std::uint64_t> parts;
        std::uint64_t covered = 0;
        while (covered != alpha) {
          const auto p = rng() & alpha;
          if (p == 0) continue;
          parts.push_back(p);
          covered |= p;
        }
        if (auto e = test(alpha, parts, w); !e.empty()) return e;
      }
    }
  }
  return {};
}

// For G_k: no two columns OR to the all-ones vector, no complemented column
// fits inside another, unit columns all present.
inline std::string g_column_properties(std::size_t k_max) {
  for (std::size_t k = 3; k <= k_max; ++k) {
    const auto g = make_G(k);
    const auto cols = g.columns();
    const auto all = g.all_ones();
    for (std::size_t i = 0; i < cols.size(); ++i) {
      for (std::size_t j = 0; j < cols.size(); ++j) {
        if (i == j) continue;
        if ((cols[i] | cols[j]) == all) {
          return "k=" + std::to_string(k) + ": columns " + std::to_string(i + 1) + ", " +
                 std::to_string(j + 1) + " cover every row";
        }
        if (((~cols[j] & all) & ~cols[i]) == 0) {
          return "k=" + std::to_string(k) + ": complement of column " + std::to_string(j + 1) +
                 " inside column " + std::to_string(i + 1);
        }
      }
    }
  }
  return {};
}

// Every own literal of a verified DNF is decomposed by its co-literals.
inline std::string occurrence_census(std::size_t k_max) {
  std::vector<std::pair<ZeroMatrix, Dnf>> cases;
  for (std::size_t k = 3; k <= k_max; ++k) {
    for (auto kind : {CompleteKind::F, CompleteKind::G}) {
      const auto m = make_complete(kind, k);
      cases.emplace_back(m, synthesize(m).dnf);
    }
  }
  const auto g4 = make_G(4);
  cases.emplace_back(g4, minimal_dnf(g4, Measure::rank));
  cases.emplace_back(g4, minimal_dnf(g4, Measure::length));
  cases.emplace_back(g4, blake_dnf(g4));
  for (const auto& [m, d] : cases) {
    if (!verify_realizes(d, m).realizes) return "unverified DNF in the census";
    const auto c = literal_occurrences(d, m);
    if (!c.violations.empty()) {
      return "k=" + std::to_string(m.k()) + ": own literal x" +
             std::to_string(c.violations.front().var) + " is not decomposed";
    }
  }
  return {};
}

// is_absorbed(K, D) iff every point of K is a point of D, random n <= 6.
inline std::string absorption_semantics(int cases) {
  std::mt19937_64 rng(103);
  for (int t = 0; t < cases; ++t) {
    const std::size_t n = 1 + rng() % 6;
    const auto k = brute::random_term(rng, n);
    std::vector<Term> others;
    const auto count = rng() % 7;
    for (std::size_t i = 0; i < count; ++i) others.push_back(brute::random_term(rng, n));
    Dnf d;
    for (const auto& o : others) d.add(o);
    const auto kt = brute::dnf_table(Dnf{k}, n);
    const auto dt = brute::dnf_table(d, n);
    bool inside = true;
    for (std::size_t c = 0; c < kt.size(); ++c) inside = inside && (!kt[c] || dt[c]);
    if (is_absorbed(k, others, n) != inside) {
      return "case " + std::to_string(t) + ": absorption disagrees for " + k.to_string();
    }
  }
  return {};
}

}  // namespace checks
