#include "compdnf/oracle.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>
#include <unordered_set>

namespace compdnf {

namespace {

// Term over at most 64 variables: bit j-1 of pos/neg holds x_j / !x_j.
struct Cube {
  std::uint64_t pos = 0;
  std::uint64_t neg = 0;

  std::size_t size() const { return std::popcount(pos) + std::popcount(neg); }
  bool empty() const { return (pos | neg) == 0; }
  bool subsumes(const Cube& o) const { return (pos & ~o.pos) == 0 && (neg & ~o.neg) == 0; }
  friend bool operator==(const Cube&, const Cube&) = default;
};

Cube to_cube(TermView t, std::size_t n) {
  Cube c;
  for (const auto& l : t) {
    if (l.var > n || l.var > 64) {
      throw Error(ErrorKind::width_mismatch, "term mentions x" + std::to_string(l.var));
    }
    (l.positive ? c.pos : c.neg) |= std::uint64_t{1} << (l.var - 1);
  }
  return c;
}

Term to_term(const Cube& c) {
  std::vector<Literal> lits;
  for (auto p = c.pos; p != 0; p &= p - 1) lits.push_back(pos(std::countr_zero(p) + 1));
  for (auto q = c.neg; q != 0; q &= q - 1) lits.push_back(neg(std::countr_zero(q) + 1));
  return Term(lits);
}

// Removes duplicates and cubes subsumed by another cube.
void absorb(std::vector<Cube>& cubes) {
  std::sort(cubes.begin(), cubes.end(), [](const Cube& a, const Cube& b) {
    const auto sa = a.size(), sb = b.size();
    if (sa != sb) return sa < sb;
    return a.pos != b.pos ? a.pos < b.pos : a.neg < b.neg;
  });
  std::vector<Cube> kept;
  kept.reserve(cubes.size());
  for (const auto& c : cubes) {
    const bool absorbed = std::any_of(kept.begin(), kept.end(),
                                      [&](const Cube& k) { return k.subsumes(c); });
    if (!absorbed) kept.push_back(c);
  }
  cubes = std::move(kept);
}

Dnf sorted_dnf(const std::vector<Cube>& cubes) {
  std::vector<Term> terms;
  terms.reserve(cubes.size());
  for (const auto& c : cubes) terms.push_back(to_term(c));
  std::sort(terms.begin(), terms.end());
  Dnf d;
  for (const auto& t : terms) d.add(t);
  return d;
}

bool tautology(std::vector<Cube> cubes) {
  if (cubes.empty()) return false;
  for (const auto& c : cubes) {
    if (c.empty()) return true;
  }
  // Split on the most frequent variable; ties go to the lowest index.
  std::array<std::uint32_t, 64> freq{};
  for (const auto& c : cubes) {
    for (auto m = c.pos | c.neg; m != 0; m &= m - 1) ++freq[std::countr_zero(m)];
  }
  const auto var = static_cast<std::size_t>(
      std::max_element(freq.begin(), freq.end()) - freq.begin());
  const auto bit = std::uint64_t{1} << var;
  for (bool value : {false, true}) {
    std::vector<Cube> rest;
    rest.reserve(cubes.size());
    for (auto c : cubes) {
      if ((value ? c.neg : c.pos) & bit) continue;
      c.pos &= ~bit;
      c.neg &= ~bit;
      rest.push_back(c);
    }
    if (!tautology(std::move(rest))) return false;
  }
  return true;
}

}  // namespace

Dnf blake_dnf(const ZeroMatrix& m) {
  const auto n = m.n();
  if (n > kMaxBlakeVars) {
    throw Error(ErrorKind::guard_exceeded,
                "blake_dnf supports n <= " + std::to_string(kMaxBlakeVars));
  }
  const std::uint64_t full = (std::uint64_t{1} << n) - 1;
  std::vector<Cube> cur{Cube{}};
  for (const auto& row : m.rows()) {
    std::uint64_t ones = 0;
    for (std::size_t j = 0; j < n; ++j) ones |= std::uint64_t{row.test(j)} << j;
    // Clause of the zero: x_j where the row has 0, !x_j where it has 1.
    const Cube clause{full & ~ones, ones};
    std::vector<Cube> next;
    for (const auto& t : cur) {
      if ((t.pos & clause.pos) || (t.neg & clause.neg)) {
        next.push_back(t);
        continue;
      }
      for (auto p = clause.pos & ~t.neg; p != 0; p &= p - 1) {
        next.push_back({t.pos | (p & -p), t.neg});
      }
      for (auto q = clause.neg & ~t.pos; q != 0; q &= q - 1) {
        next.push_back({t.pos, t.neg | (q & -q)});
      }
    }
    absorb(next);
    if (next.size() > kMaxBlakeTerms) {
      throw Error(ErrorKind::guard_exceeded, "more than " + std::to_string(kMaxBlakeTerms) +
                                                 " terms while multiplying clauses");
    }
    cur = std::move(next);
  }
  return sorted_dnf(cur);
}

bool is_tautology(const std::vector<Term>& terms, std::size_t n) {
  if (n > 64) throw Error(ErrorKind::unsupported, "tautology test supports n <= 64");
  std::vector<Cube> cubes;
  cubes.reserve(terms.size());
  for (const auto& t : terms) cubes.push_back(to_cube(t, n));
  return tautology(std::move(cubes));
}

bool is_absorbed(const Term& k, const std::vector<Term>& others, std::size_t n) {
  if (n > 64) throw Error(ErrorKind::unsupported, "absorption test supports n <= 64");
  const auto kc = to_cube(k, n);
  std::vector<Cube> residual;
  for (const auto& t : others) {
    auto c = to_cube(t, n);
    if ((c.pos & kc.neg) || (c.neg & kc.pos)) continue;  // zero under K
    c.pos &= ~kc.pos;
    c.neg &= ~kc.neg;
    residual.push_back(c);
  }
  return tautology(std::move(residual));
}

namespace {

class CoverSearch {
 public:
  CoverSearch(std::vector<std::vector<std::uint32_t>> covers, std::vector<double> cost,
              std::size_t points)
      : covers_(std::move(covers)), cost_(std::move(cost)), by_point_(points),
        count_(points, 0) {
    for (std::uint32_t p = 0; p < covers_.size(); ++p) {
      for (auto o : covers_[p]) by_point_[o].push_back(p);
    }
  }

  std::vector<std::uint32_t> solve() {
    bound_ = greedy();
    dfs(0.0);
    return best_;
  }

 private:
  static constexpr double kEps = 1e-9;

  double greedy() const {
    std::vector<std::uint32_t> cnt(count_.size(), 0);
    std::size_t left = count_.size();
    double total = 0.0;
    while (left > 0) {
      double best_ratio = -1.0;
      std::uint32_t pick = 0;
      for (std::uint32_t p = 0; p < covers_.size(); ++p) {
        std::size_t fresh = 0;
        for (auto o : covers_[p]) fresh += cnt[o] == 0;
        const double ratio = static_cast<double>(fresh) / cost_[p];
        if (fresh > 0 && ratio > best_ratio + kEps) {
          best_ratio = ratio;
          pick = p;
        }
      }
      for (auto o : covers_[pick]) {
        if (cnt[o]++ == 0) --left;
      }
      total += cost_[pick];
    }
    return total;
  }

  // Sum of cheapest covers over uncovered points no two of which share a prime.
  double lower_bound(std::vector<char>& used) const {
    double lb = 0.0;
    std::vector<std::uint32_t> touched;
    for (std::size_t o = 0; o < count_.size(); ++o) {
      if (count_[o] != 0) continue;
      const auto& ps = by_point_[o];
      if (std::any_of(ps.begin(), ps.end(), [&](auto p) { return used[p] != 0; })) continue;
      double cheapest = std::numeric_limits<double>::infinity();
      for (auto p : ps) {
        cheapest = std::min(cheapest, cost_[p]);
        used[p] = 1;
        touched.push_back(p);
      }
      lb += cheapest;
    }
    for (auto p : touched) used[p] = 0;
    return lb;
  }

  void dfs(double spent) {
    std::size_t target = count_.size();
    for (std::size_t o = 0; o < count_.size(); ++o) {
      if (count_[o] == 0 &&
          (target == count_.size() || by_point_[o].size() < by_point_[target].size())) {
        target = o;
      }
    }
    if (target == count_.size()) {
      if (found_ ? spent < bound_ - kEps : spent <= bound_ + kEps) {
        found_ = true;
        bound_ = spent;
        best_ = chosen_;
      }
      return;
    }
    used_.assign(covers_.size(), 0);
    const double lb = spent + lower_bound(used_);
    if (found_ ? lb >= bound_ - kEps : lb > bound_ + kEps) return;
    for (auto p : by_point_[target]) {
      chosen_.push_back(p);
      for (auto o : covers_[p]) ++count_[o];
      dfs(spent + cost_[p]);
      for (auto o : covers_[p]) --count_[o];
      chosen_.pop_back();
    }
  }

  std::vector<std::vector<std::uint32_t>> covers_;
  std::vector<double> cost_;
  std::vector<std::vector<std::uint32_t>> by_point_;
  std::vector<std::uint32_t> count_;
  std::vector<char> used_;
  std::vector<std::uint32_t> chosen_;
  std::vector<std::uint32_t> best_;
  double bound_ = 0.0;
  bool found_ = false;
};

}  // namespace

Dnf minimal_dnf(const ZeroMatrix& m, Measure measure, double alpha) {
  const auto n = m.n();
  if (n > kMaxMinimalVars) {
    throw Error(ErrorKind::guard_exceeded,
                "minimal_dnf supports n <= " + std::to_string(kMaxMinimalVars));
  }
  if (measure == Measure::conv) measures(Dnf{}, alpha, 1.0 - alpha);  // validates alpha
  const auto primes = blake_dnf(m);

  const std::uint32_t points = std::uint32_t{1} << n;
  std::vector<char> is_zero(points, 0);
  for (const auto& row : m.rows()) {
    std::uint32_t code = 0;
    for (std::size_t j = 0; j < n; ++j) code |= std::uint32_t{row.test(j)} << j;
    is_zero[code] = 1;
  }
  std::vector<std::int32_t> one_index(points, -1);
  std::uint32_t ones = 0;
  for (std::uint32_t c = 0; c < points; ++c) {
    if (!is_zero[c]) one_index[c] = static_cast<std::int32_t>(ones++);
  }
  std::vector<std::vector<std::uint32_t>> covers;
  std::vector<double> cost;
  const std::uint32_t full = points - 1;
  for (auto term : primes) {
    const auto cube = to_cube(term, n);
    const auto fixed = static_cast<std::uint32_t>(cube.pos | cube.neg);
    const auto free = full & ~fixed;
    std::vector<std::uint32_t> cov;
    for (std::uint32_t sub = free;; sub = (sub - 1) & free) {
      const auto code = static_cast<std::uint32_t>(cube.pos) | sub;
      if (one_index[code] >= 0) cov.push_back(static_cast<std::uint32_t>(one_index[code]));
      if (sub == 0) break;
    }
    std::sort(cov.begin(), cov.end());
    covers.push_back(std::move(cov));
    const auto r = static_cast<double>(term.size());
    switch (measure) {
      case Measure::rank: cost.push_back(r); break;
      case Measure::length: cost.push_back(1.0); break;
      case Measure::conv: cost.push_back(alpha * r + (1.0 - alpha)); break;
    }
  }
  if (ones == 0) return Dnf{};

  auto pick = CoverSearch(std::move(covers), std::move(cost), ones).solve();
  std::sort(pick.begin(), pick.end());
  Dnf out;
  for (auto p : pick) out.add(Term(primes[p]));
  return out;
}

namespace {

class ZeroEnumerator {
 public:
  ZeroEnumerator(const Dnf& d, std::size_t n) : n_(n), value_(n + 1, -1) {
    if (d.max_var() > n) {
      throw Error(ErrorKind::width_mismatch, "DNF mentions x" + std::to_string(d.max_var()) +
                                                 " beyond n = " + std::to_string(n));
    }
    offsets_.push_back(0);
    for (auto term : d) {
      for (const auto& l : term) lits_.push_back(l.complement());
      offsets_.push_back(lits_.size());
    }
    const auto clauses = offsets_.size() - 1;
    sat_.assign(clauses, 0);
    fals_.assign(clauses, 0);
    occ_.resize(2 * (n + 1));
    for (std::uint32_t c = 0; c < clauses; ++c) {
      for (auto i = offsets_[c]; i < offsets_[c + 1]; ++i) occ_[slot(lits_[i])].push_back(c);
    }
    order_.resize(n);
    std::iota(order_.begin(), order_.end(), 1u);
    std::stable_sort(order_.begin(), order_.end(), [&](std::uint32_t a, std::uint32_t b) {
      return occ_[slot(pos(a))].size() + occ_[slot(neg(a))].size() >
             occ_[slot(pos(b))].size() + occ_[slot(neg(b))].size();
    });
  }

  ZeroScan run(std::size_t limit) {
    ZeroScan out;
    bool conflict = false;
    for (std::uint32_t c = 0; c + 1 < offsets_.size() && !conflict; ++c) {
      if (offsets_[c + 1] - offsets_[c] != 1) continue;
      const auto l = lits_[offsets_[c]];
      if (value_[l.var] < 0) {
        assign(l);
      } else if ((value_[l.var] == 1) != l.positive) {
        conflict = true;
      }
    }
    if (conflict) return out;
    conflict = !propagate();
    std::size_t cursor = 0;
    for (;;) {
      if (!conflict) {
        while (cursor < order_.size() && value_[order_[cursor]] >= 0) ++cursor;
        if (cursor < order_.size()) {
          frames_.push_back({trail_.size(), cursor, false});
          assign(neg(order_[cursor]));
          conflict = !propagate();
          continue;
        }
        BitVec point(n_);
        for (std::uint32_t v = 1; v <= n_; ++v) point.set(v - 1, value_[v] == 1);
        out.points.push_back(std::move(point));
        if (out.points.size() > limit) {
          out.overflow = true;
          break;
        }
      }
      if (!backtrack(cursor)) break;
      conflict = !propagate();
    }
    std::sort(out.points.begin(), out.points.end());
    return out;
  }

 private:
  struct Frame {
    std::size_t trail_size;
    std::size_t cursor;
    bool flipped;
  };

  static std::size_t slot(Literal l) {
    return 2 * static_cast<std::size_t>(l.var) + (l.positive ? 1 : 0);
  }

  void assign(Literal l) {
    value_[l.var] = l.positive ? 1 : 0;
    trail_.push_back(l);
  }

  bool propagate() {
    bool ok = true;
    while (ok && head_ < trail_.size()) {
      const auto l = trail_[head_++];
      for (auto c : occ_[slot(l)]) ++sat_[c];
      for (auto c : occ_[slot(l.complement())]) {
        const auto size = offsets_[c + 1] - offsets_[c];
        if (++fals_[c] + 1 < size || sat_[c] != 0) continue;
        if (fals_[c] == size) {
          ok = false;
          continue;
        }
        for (auto i = offsets_[c]; i < offsets_[c + 1]; ++i) {
          if (value_[lits_[i].var] < 0) {
            assign(lits_[i]);
            break;
          }
        }
      }
    }
    return ok;
  }

  void undo(std::size_t size) {
    while (trail_.size() > size) {
      const auto l = trail_.back();
      if (trail_.size() <= head_) {
        for (auto c : occ_[slot(l)]) --sat_[c];
        for (auto c : occ_[slot(l.complement())]) --fals_[c];
      }
      value_[l.var] = -1;
      trail_.pop_back();
      head_ = std::min(head_, trail_.size());
    }
  }

  bool backtrack(std::size_t& cursor) {
    while (!frames_.empty()) {
      auto& f = frames_.back();
      undo(f.trail_size);
      if (!f.flipped) {
        f.flipped = true;
        cursor = f.cursor;
        assign(pos(order_[f.cursor]));
        return true;
      }
      frames_.pop_back();
    }
    return false;
  }

  std::size_t n_;
  std::vector<Literal> lits_;
  std::vector<std::size_t> offsets_;
  std::vector<std::uint32_t> sat_;
  std::vector<std::uint32_t> fals_;
  std::vector<std::vector<std::uint32_t>> occ_;
  std::vector<std::uint32_t> order_;
  std::vector<std::int8_t> value_;
  std::vector<Literal> trail_;
  std::size_t head_ = 0;
  std::vector<Frame> frames_;
};

}  // namespace

ZeroScan scan_zero_set(const Dnf& d, std::size_t n, std::size_t limit) {
  if (limit == 0) throw Error(ErrorKind::invalid_argument, "limit must be >= 1");
  if (n == 0) throw Error(ErrorKind::invalid_argument, "n must be >= 1");
  return ZeroEnumerator(d, n).run(limit);
}

std::vector<BitVec> enumerate_zero_set(const Dnf& d, std::size_t n, std::size_t limit) {
  auto scan = scan_zero_set(d, n, limit);
  if (scan.overflow) {
    throw Error(ErrorKind::overflow,
                "more than " + std::to_string(limit) + " zeros");
  }
  return std::move(scan.points);
}

VerificationReport verify_realizes(const Dnf& d, const ZeroMatrix& m) {
  if (d.max_var() > m.n()) {
    throw Error(ErrorKind::width_mismatch, "DNF mentions x" + std::to_string(d.max_var()) +
                                               " beyond n = " + std::to_string(m.n()));
  }
  VerificationReport report;
  for (std::size_t i = 0; i < d.length(); ++i) {
    for (std::size_t r = 0; r < m.k(); ++r) {
      if (term_satisfied(d[i], m.row(r))) report.covered_zeros.emplace_back(i, r);
    }
  }
  auto scan = scan_zero_set(d, m.n(), m.k() + 1);
  report.overflow = scan.overflow;
  for (auto& p : scan.points) {
    if (!m.is_zero(p)) report.missing_points.push_back(std::move(p));
  }
  report.realizes =
      !report.overflow && report.missing_points.empty() && report.covered_zeros.empty();
  return report;
}

OccurrenceCensus literal_occurrences(const Dnf& d, const ZeroMatrix& m) {
  OccurrenceCensus census;
  std::map<Literal, std::size_t> first_term;
  for (std::size_t i = 0; i < d.length(); ++i) {
    for (const auto& l : d[i]) {
      if (census.counts[l]++ == 0) first_term[l] = i;
    }
  }
  for (const auto& [lit, count] : census.counts) {
    if (count != 1) continue;
    census.own.push_back(lit);
    std::vector<ColMask> parts;
    for (const auto& other : d[first_term[lit]]) {
      if (other != lit) parts.push_back(m.literal_vector(other.complement()));
    }
    if (!is_decomposition(m.literal_vector(lit), std::span<const ColMask>(parts))) {
      census.violations.push_back(lit);
    }
  }
  return census;
}

}  // namespace compdnf
