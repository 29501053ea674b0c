#pragma once

#include <cstddef>
#include <cstdint>

#include "compdnf/core.hpp"

namespace compdnf {

inline constexpr std::size_t kMaxCompleteK = 24;

enum class CompleteKind { F, G };

/// Number of variables of a complete function with k zeros: 2^{k-1} - 1.
std::size_t complete_n(std::size_t k);

/// Canonical complete function: column j (1-based) is the vector with chi = j.
ZeroMatrix make_F(std::size_t k);
/// F_k with every column of more than k/2 ones complemented (ties kept).
ZeroMatrix make_G(std::size_t k);
ZeroMatrix make_complete(CompleteKind kind, std::size_t k);

/// Reduced and n = 2^{k-1} - 1.
bool is_complete(const ZeroMatrix& m);

/// k distinct uniformly random rows of width n; `trial` selects an
/// independent stream for the same seed.
ZeroMatrix sample_P(std::size_t k, std::size_t n, std::uint64_t seed,
                    std::uint64_t trial = 0);
/// Uniform over functions in P_k^n without constant columns (k <= 63).
ZeroMatrix sample_proper(std::size_t k, std::size_t n, std::uint64_t seed,
                         std::uint64_t trial = 0);

enum class Population {
  all,     // uniform over P_k^n
  proper,  // uniform over P_k^n conditioned on no constant column
};

struct ReductionRate {
  std::size_t trials = 0;
  std::size_t proper = 0;    // samples without a constant column
  std::size_t complete = 0;  // samples whose reduced form is complete
  double rate() const {
    return trials == 0 ? 0.0 : static_cast<double>(complete) / static_cast<double>(trials);
  }
};

ReductionRate reduction_experiment(std::size_t k, std::size_t n, std::size_t trials,
                                   std::uint64_t seed,
                                   Population population = Population::proper);

/// Fraction of sampled functions that reduce to a complete function.
inline double reduction_rate(std::size_t k, std::size_t n, std::size_t trials,
                             std::uint64_t seed,
                             Population population = Population::proper) {
  return reduction_experiment(k, n, trials, seed, population).rate();
}

}  // namespace compdnf
