#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "compdnf/core.hpp"

namespace compdnf {

inline constexpr std::size_t kMaxBlakeVars = 24;
inline constexpr std::size_t kMaxBlakeTerms = 1'000'000;
inline constexpr std::size_t kMaxMinimalVars = 14;

/// All prime implicants of the function of m, by multiplying the clauses of
/// its zeros with absorption. Terms are sorted. Throws guard_exceeded.
Dnf blake_dnf(const ZeroMatrix& m);

/// Absorption criterion: the terms of `others`, with the literals of K
/// deleted (and those contradicting K dropped), form a tautology.
bool is_absorbed(const Term& k, const std::vector<Term>& others, std::size_t n);

/// Tautology test by recursive splitting; terms are over x_1..x_n.
bool is_tautology(const std::vector<Term>& terms, std::size_t n);

enum class Measure { rank, length, conv };

/// Exact optimum over covers by prime implicants (branch and bound).
/// measure = conv uses alpha * rank + (1 - alpha) * length. Ties keep the
/// first optimum met in depth-first order. Throws guard_exceeded.
Dnf minimal_dnf(const ZeroMatrix& m, Measure measure, double alpha = 0.5);

struct ZeroScan {
  std::vector<BitVec> points;  // sorted; at most limit + 1
  bool overflow = false;       // more than `limit` zeros exist
};

/// Backtracking over the clauses {!K : K in d} with unit propagation.
ZeroScan scan_zero_set(const Dnf& d, std::size_t n, std::size_t limit);
/// Points where d is 0, sorted. Throws Error(overflow) past `limit` points.
std::vector<BitVec> enumerate_zero_set(const Dnf& d, std::size_t n, std::size_t limit);

struct VerificationReport {
  bool realizes = false;
  std::vector<BitVec> missing_points;  // ones of M where d is 0
  std::vector<std::pair<std::size_t, std::size_t>> covered_zeros;  // (term, row)
  bool overflow = false;
};

VerificationReport verify_realizes(const Dnf& d, const ZeroMatrix& m);

struct OccurrenceCensus {
  std::map<Literal, std::size_t> counts;
  std::vector<Literal> own;  // literals in exactly one term
  /// Own literals whose co-literal complements do not decompose the
  /// literal's vector.
  std::vector<Literal> violations;
};

OccurrenceCensus literal_occurrences(const Dnf& d, const ZeroMatrix& m);

}  // namespace compdnf
