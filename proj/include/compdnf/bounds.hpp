#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "compdnf/core.hpp"

namespace compdnf {

/// 3n(1 - e^{-log2(n)/36}), n >= 2.
double lower_rank(double n);
/// 3n + 6n/log2(n) + 6 n^0.93 log2(n), n >= 2.
double upper_rank(double n);

/// Exact binomial coefficient; throws overflow past 2^63.
std::int64_t binomial(std::size_t n, std::size_t r);

/// Literal count of the construction for k zeros (k <= 60):
/// 2(k+1) sum_{i<=lambda} C(k,i) - (k^2+3k) + 3 sum_{i>lambda} C(k,i)
///   + 3 (C(k, floor(k/2)) - C(k, lambda)).
/// Requires floor(k/4) <= lambda < k/2.
std::int64_t formula5_rank(std::size_t k, std::size_t lambda);
/// 3n + 3 * 2^k / sqrt(k) + 2(k+1) 2^{k H(lambda/k)} with n = 2^{k-1} - 1.
double formula5_relaxation(std::size_t k, std::size_t lambda);
/// Binary entropy.
double entropy(double x);

struct OtherBounds {
  std::size_t length_lower = 0;        // n
  std::int64_t dyakonov_length = 0;    // 2n + (k^2 - 5k)/2
  double m_set_threshold = 0.0;        // k/3
};
OtherBounds other_bounds(std::size_t n, std::size_t k);

/// Variables whose column weight exceeds k/3; both literals of such a
/// variable have that weight.
std::vector<std::uint32_t> m_set(const ZeroMatrix& m);
/// Terms of d that contain a literal of a variable of m_set(m).
std::size_t m_set_terms(const Dnf& d, const ZeroMatrix& m);
/// ceil(n (1 - e^{-log2(n)/36})).
std::size_t m_set_term_bound(std::size_t n);

struct BoundReport {
  std::size_t n = 0;
  std::size_t k = 0;
  std::size_t lambda = 0;
  std::size_t rank = 0;
  std::size_t length = 0;
  std::size_t chains = 0;
  double lower_rank = 0.0;
  double upper_rank = 0.0;
  std::size_t lower_length = 0;
  std::optional<std::int64_t> formula5_rank;  // when lambda is admissible
  std::int64_t dyakonov_length = 0;
  bool complete = false;
  // Unset when the bound does not apply (non-complete matrices).
  std::optional<bool> rank_above_lower;
  std::optional<bool> rank_below_upper;
  std::optional<bool> length_above_lower;
  std::optional<bool> rank_below_formula5;  // rank <= formula5 + 4 * chains

  bool conforms() const;
};

/// Fills a BoundReport for a DNF of m. Throws invalid_argument when d does
/// not realize m.
BoundReport conformance(const Dnf& d, const ZeroMatrix& m, std::size_t lambda,
                        std::size_t chains = 0);

}  // namespace compdnf
