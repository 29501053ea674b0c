#include "compdnf/bounds.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <string>

#include "compdnf/complete.hpp"
#include "compdnf/oracle.hpp"
#include "compdnf/transform.hpp"

namespace compdnf {

namespace {

void check_n(double n) {
  if (!(n >= 2.0)) throw Error(ErrorKind::invalid_argument, "bound needs n >= 2");
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw Error(ErrorKind::overflow, "int64 overflow");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw Error(ErrorKind::overflow, "int64 overflow");
  return r;
}

}  // namespace

double lower_rank(double n) {
  check_n(n);
  return 3.0 * n * (1.0 - std::exp(-std::log2(n) / 36.0));
}

double upper_rank(double n) {
  check_n(n);
  const double lg = std::log2(n);
  return 3.0 * n + 6.0 * n / lg + 6.0 * std::pow(n, 0.93) * lg;
}

std::int64_t binomial(std::size_t n, std::size_t r) {
  if (r > n) return 0;
  r = std::min(r, n - r);
  std::int64_t c = 1;
  for (std::size_t i = 1; i <= r; ++i) {
    // c * (n - r + i) is divisible by i; divide first where possible
    const auto g = std::gcd(c, static_cast<std::int64_t>(i));
    c = checked_mul(c / g, static_cast<std::int64_t>(n - r + i) / (static_cast<std::int64_t>(i) / g));
  }
  return c;
}

std::int64_t formula5_rank(std::size_t k, std::size_t lambda) {
  if (k < 2 || k > 60) throw Error(ErrorKind::invalid_argument, "formula needs 2 <= k <= 60");
  if (lambda < k / 4 || 2 * lambda >= k) {
    throw Error(ErrorKind::bad_lambda, "lambda = " + std::to_string(lambda) +
                                           " outside [floor(k/4), k/2)");
  }
  std::int64_t low = 0;
  std::int64_t high = 0;
  for (std::size_t i = 0; i <= k; ++i) {
    (i <= lambda ? low : high) = checked_add(i <= lambda ? low : high, binomial(k, i));
  }
  const auto kk = static_cast<std::int64_t>(k);
  std::int64_t total = checked_mul(2 * (kk + 1), low);
  total -= kk * kk + 3 * kk;
  total = checked_add(total, checked_mul(3, high));
  total = checked_add(total, 3 * (binomial(k, k / 2) - binomial(k, lambda)));
  return total;
}

double entropy(double x) {
  if (x <= 0.0 || x >= 1.0) return 0.0;
  return -x * std::log2(x) - (1.0 - x) * std::log2(1.0 - x);
}

double formula5_relaxation(std::size_t k, std::size_t lambda) {
  const double n = std::ldexp(1.0, static_cast<int>(k) - 1) - 1.0;
  const double kd = static_cast<double>(k);
  return 3.0 * n + 3.0 * std::ldexp(1.0, static_cast<int>(k)) / std::sqrt(kd) +
         2.0 * (kd + 1.0) * std::exp2(kd * entropy(static_cast<double>(lambda) / kd));
}

OtherBounds other_bounds(std::size_t n, std::size_t k) {
  OtherBounds b;
  b.length_lower = n;
  const auto kk = static_cast<std::int64_t>(k);
  b.dyakonov_length = 2 * static_cast<std::int64_t>(n) + (kk * kk - 5 * kk) / 2;
  b.m_set_threshold = static_cast<double>(k) / 3.0;
  return b;
}

std::vector<std::uint32_t> m_set(const ZeroMatrix& m) {
  std::vector<std::uint32_t> out;
  const auto cols = m.columns();
  const auto k = m.k();
  for (std::uint32_t j = 1; j <= cols.size(); ++j) {
    const auto ones = static_cast<std::size_t>(std::popcount(cols[j - 1]));
    if (3 * std::min(ones, k - ones) > k) out.push_back(j);
  }
  return out;
}

std::size_t m_set_terms(const Dnf& d, const ZeroMatrix& m) {
  std::vector<bool> in(m.n() + 1, false);
  for (auto v : m_set(m)) in[v] = true;
  std::size_t count = 0;
  for (auto term : d) {
    for (const auto& l : term) {
      if (l.var <= m.n() && in[l.var]) {
        ++count;
        break;
      }
    }
  }
  return count;
}

std::size_t m_set_term_bound(std::size_t n) {
  const double nd = static_cast<double>(n);
  return static_cast<std::size_t>(std::ceil(nd * (1.0 - std::exp(-std::log2(nd) / 36.0))));
}

bool BoundReport::conforms() const {
  for (const auto& flag : {rank_above_lower, rank_below_upper, length_above_lower,
                           rank_below_formula5}) {
    if (flag.has_value() && !*flag) return false;
  }
  return true;
}

BoundReport conformance(const Dnf& d, const ZeroMatrix& m, std::size_t lambda,
                        std::size_t chains) {
  if (!verify_realizes(d, m).realizes) {
    throw Error(ErrorKind::invalid_argument, "DNF does not realize the matrix");
  }
  BoundReport r;
  r.n = m.n();
  r.k = m.k();
  r.lambda = lambda;
  r.rank = d.rank();
  r.length = d.length();
  r.chains = chains;
  r.complete = r.k <= kMaxMaskRows && is_complete(m);
  const auto other = other_bounds(r.n, r.k);
  r.lower_length = other.length_lower;
  r.dyakonov_length = other.dyakonov_length;
  if (r.n >= 2) {
    r.lower_rank = lower_rank(static_cast<double>(r.n));
    r.upper_rank = upper_rank(static_cast<double>(r.n));
  }
  if (r.k <= 60 && lambda >= r.k / 4 && 2 * lambda < r.k) {
    r.formula5_rank = formula5_rank(r.k, lambda);
  }
  if (r.complete && r.n >= 2) {
    const auto rank = static_cast<double>(r.rank);
    r.rank_above_lower = rank >= r.lower_rank;
    r.rank_below_upper = rank <= r.upper_rank;
    r.length_above_lower = r.length >= r.n;
    if (r.formula5_rank) {
      r.rank_below_formula5 =
          static_cast<std::int64_t>(r.rank) <= *r.formula5_rank + 4 * static_cast<std::int64_t>(chains);
    }
  }
  return r;
}

}  // namespace compdnf
