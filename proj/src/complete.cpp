#include "compdnf/complete.hpp"

#include <bit>
#include <random>
#include <string>
#include <unordered_set>

#include "compdnf/transform.hpp"

namespace compdnf {

namespace {

void check_k(std::size_t k) {
  if (k < 2 || k > kMaxCompleteK) {
    throw Error(ErrorKind::invalid_argument,
                "complete functions are supported for 2 <= k <= " +
                    std::to_string(kMaxCompleteK) + " (got " + std::to_string(k) + ")");
  }
}

std::mt19937_64 stream(std::uint64_t seed, std::uint64_t trial) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(trial),
                    static_cast<std::uint32_t>(trial >> 32)};
  return std::mt19937_64(seq);
}

}  // namespace

std::size_t complete_n(std::size_t k) { return (std::size_t{1} << (k - 1)) - 1; }

ZeroMatrix make_F(std::size_t k) {
  check_k(k);
  std::vector<ColMask> cols(complete_n(k));
  for (std::size_t j = 0; j < cols.size(); ++j) cols[j] = j + 1;
  return ZeroMatrix::from_columns(k, cols);
}

ZeroMatrix make_G(std::size_t k) {
  check_k(k);
  const auto ones = all_ones_mask(k);
  std::vector<ColMask> cols(complete_n(k));
  for (std::size_t j = 0; j < cols.size(); ++j) {
    const ColMask c = j + 1;
    cols[j] = 2 * static_cast<std::size_t>(std::popcount(c)) <= k ? c : (~c & ones);
  }
  return ZeroMatrix::from_columns(k, cols);
}

ZeroMatrix make_complete(CompleteKind kind, std::size_t k) {
  return kind == CompleteKind::F ? make_F(k) : make_G(k);
}

bool is_complete(const ZeroMatrix& m) {
  if (m.k() < 2 || m.k() > kMaxMaskRows) return false;
  if (m.n() != complete_n(m.k())) return false;
  return is_reduced(m);
}

ZeroMatrix sample_P(std::size_t k, std::size_t n, std::uint64_t seed, std::uint64_t trial) {
  if (k == 0 || n == 0) {
    throw Error(ErrorKind::invalid_argument, "sampling needs k >= 1 and n >= 1");
  }
  if (n < 64 && k > (std::uint64_t{1} << n)) {
    throw Error(ErrorKind::invalid_argument,
                "cannot pick " + std::to_string(k) + " distinct points of B_" +
                    std::to_string(n));
  }
  auto gen = stream(seed, trial);
  std::unordered_set<BitVec, BitVecHash> seen;
  std::vector<BitVec> rows;
  rows.reserve(k);
  while (rows.size() < k) {
    BitVec row(n);
    for (std::size_t j = 0; j < n; j += 64) {
      auto word = gen();
      for (std::size_t b = 0; b < 64 && j + b < n; ++b, word >>= 1) row.set(j + b, word & 1u);
    }
    if (seen.insert(row).second) rows.push_back(std::move(row));
  }
  return ZeroMatrix(std::move(rows));
}

ZeroMatrix sample_proper(std::size_t k, std::size_t n, std::uint64_t seed,
                         std::uint64_t trial) {
  if (k < 2 || k > 63 || n == 0) {
    throw Error(ErrorKind::invalid_argument,
                "proper sampling needs 2 <= k <= 63 and n >= 1");
  }
  if (n < 64 && k > (std::uint64_t{1} << n)) {
    throw Error(ErrorKind::invalid_argument, "more rows than points");
  }
  auto gen = stream(seed, trial);
  const auto ones = all_ones_mask(k);
  std::vector<ColMask> cols(n);
  // Rejection on duplicate rows keeps the distribution uniform.
  for (;;) {
    for (auto& c : cols) {
      do {
        c = gen() & ones;
      } while (c == 0 || c == ones);
    }
    try {
      return ZeroMatrix::from_columns(k, cols);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::invalid_argument) throw;
    }
  }
}

ReductionRate reduction_experiment(std::size_t k, std::size_t n, std::size_t trials,
                                   std::uint64_t seed, Population population) {
  if (trials == 0) {
    throw Error(ErrorKind::invalid_argument, "reduction experiment needs trials >= 1");
  }
  ReductionRate result;
  result.trials = trials;
  for (std::size_t t = 0; t < trials; ++t) {
    const auto m = population == Population::all ? sample_P(k, n, seed, t)
                                                 : sample_proper(k, n, seed, t);
    const auto ones = m.all_ones();
    bool proper = true;
    for (auto c : m.columns()) proper = proper && c != 0 && c != ones;
    if (!proper) continue;
    ++result.proper;
    if (is_complete(reduce(m).first)) ++result.complete;
  }
  return result;
}

}  // namespace compdnf
