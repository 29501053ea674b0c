#include "compdnf/transform.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <unordered_map>
#include <unordered_set>

namespace compdnf {

SPTransform SPTransform::identity(std::size_t n) {
  SPTransform t;
  t.perm.resize(n);
  std::iota(t.perm.begin(), t.perm.end(), 1u);
  t.invert.assign(n, false);
  return t;
}

void SPTransform::validate() const {
  if (invert.size() != perm.size()) {
    throw Error(ErrorKind::invalid_argument, "transform invert set has wrong size");
  }
  std::vector<bool> seen(perm.size(), false);
  for (auto p : perm) {
    if (p == 0 || p > perm.size() || seen[p - 1]) {
      throw Error(ErrorKind::invalid_argument, "transform permutation is malformed");
    }
    seen[p - 1] = true;
  }
}

SPTransform inverse(const SPTransform& t) {
  t.validate();
  const auto n = t.n();
  SPTransform inv;
  inv.perm.resize(n);
  inv.invert.assign(n, false);
  for (std::uint32_t j = 1; j <= n; ++j) {
    const auto src = t.perm[j - 1];
    inv.perm[src - 1] = j;
    inv.invert[j - 1] = t.invert[src - 1];
  }
  return inv;
}

SPTransform compose(const SPTransform& t, const SPTransform& s) {
  t.validate();
  s.validate();
  if (t.n() != s.n()) {
    throw Error(ErrorKind::width_mismatch, "composed transforms differ in n");
  }
  // (t . s)(M) col j = s(M) col t(j) ^ inv_t = M col s(t(j)) ^ inv_s ^ inv_t.
  const auto n = t.n();
  SPTransform out;
  out.perm.resize(n);
  out.invert.assign(n, false);
  for (std::size_t j = 0; j < n; ++j) {
    const auto mid = t.perm[j];
    const auto src = s.perm[mid - 1];
    out.perm[j] = src;
    out.invert[src - 1] = s.invert[src - 1] != t.invert[mid - 1];
  }
  return out;
}

ZeroMatrix apply_sp(const ZeroMatrix& m, const SPTransform& t) {
  t.validate();
  if (t.n() != m.n()) {
    throw Error(ErrorKind::width_mismatch, "transform defined on a different n");
  }
  const auto n = m.n();
  std::vector<BitVec> rows;
  rows.reserve(m.k());
  for (const auto& src : m.rows()) {
    BitVec out(n);
    for (std::size_t j = 0; j < n; ++j) {
      const auto s = t.perm[j] - 1;
      out.set(j, src.test(s) != t.invert[s]);
    }
    rows.push_back(std::move(out));
  }
  return ZeroMatrix(std::move(rows));
}

Dnf apply_sp(const Dnf& d, const SPTransform& t) {
  t.validate();
  if (d.max_var() > t.n()) {
    throw Error(ErrorKind::width_mismatch, "DNF mentions variables beyond the transform");
  }
  const auto inv = inverse(t);
  Dnf out;
  out.reserve(d.length(), d.rank());
  std::vector<Literal> lits;
  for (auto term : d) {
    lits.clear();
    for (const auto& lit : term) {
      lits.push_back({inv.perm[lit.var - 1], lit.positive != t.invert[lit.var - 1]});
    }
    out.add(Term(lits));
  }
  return out;
}

namespace {

bool has_constant_column(const ZeroMatrix& m) {
  const auto ones = m.all_ones();
  for (auto c : m.columns()) {
    if (c == 0 || c == ones) return true;
  }
  return false;
}

// Checks conditions 2-3 and (optionally) column distinctness.
bool check_column_structure(const ZeroMatrix& m, bool require_distinct) {
  if (has_constant_column(m)) return false;
  const auto cols = m.columns();
  const auto ones = m.all_ones();
  std::unordered_set<ColMask> seen;
  for (std::size_t j = 0; j < cols.size(); ++j) {
    const bool repeats_previous = j > 0 && cols[j] == cols[j - 1];
    if (repeats_previous) {
      if (require_distinct) return false;
      continue;
    }
    if (!seen.insert(cols[j]).second) return false;  // equal columns not adjacent
    if (seen.contains(~cols[j] & ones)) return false;
  }
  return true;
}

}  // namespace

bool is_proper(const ZeroMatrix& m) { return check_column_structure(m, false); }

bool is_reduced(const ZeroMatrix& m) { return check_column_structure(m, true); }

std::pair<ZeroMatrix, SPTransform> normalize_to_proper(const ZeroMatrix& m) {
  const auto cols = m.columns();
  const auto ones = m.all_ones();
  const auto first_row_bit = ColMask{1} << (m.k() - 1);
  const auto n = m.n();
  std::vector<ColMask> flipped(n);
  SPTransform t;
  t.invert.assign(n, false);
  for (std::size_t j = 0; j < n; ++j) {
    if (cols[j] == 0 || cols[j] == ones) {
      throw Error(ErrorKind::constant_column,
                  "column " + std::to_string(j + 1) + " is constant");
    }
    t.invert[j] = (cols[j] & first_row_bit) != 0;
    flipped[j] = t.invert[j] ? (~cols[j] & ones) : cols[j];
  }
  t.perm.resize(n);
  std::iota(t.perm.begin(), t.perm.end(), 1u);
  std::stable_sort(t.perm.begin(), t.perm.end(), [&](std::uint32_t a, std::uint32_t b) {
    return flipped[a - 1] < flipped[b - 1];
  });
  std::vector<ColMask> out(n);
  for (std::size_t j = 0; j < n; ++j) out[j] = flipped[t.perm[j] - 1];
  return {ZeroMatrix::from_columns(m.k(), out), std::move(t)};
}

std::pair<ZeroMatrix, ReductionMap> reduce_columns(const ZeroMatrix& proper) {
  if (!is_proper(proper)) {
    throw Error(ErrorKind::invalid_argument, "reduce_columns needs a proper matrix");
  }
  const auto cols = proper.columns();
  ReductionMap map;
  map.sp = SPTransform::identity(proper.n());
  std::vector<ColMask> reduced;
  for (std::uint32_t j = 1; j <= cols.size(); ++j) {
    if (j > 1 && cols[j - 1] == cols[j - 2]) {
      map.groups.back().push_back(j);
      continue;
    }
    map.groups.push_back({j});
    map.representatives.push_back(j);
    reduced.push_back(cols[j - 1]);
  }
  return {ZeroMatrix::from_columns(proper.k(), reduced), std::move(map)};
}

std::pair<ZeroMatrix, ReductionMap> reduce(const ZeroMatrix& m) {
  auto [proper, sp] = normalize_to_proper(m);
  auto [reduced, map] = reduce_columns(proper);
  map.sp = std::move(sp);
  return {std::move(reduced), std::move(map)};
}

Dnf cyclic_block(std::span<const std::uint32_t> vars) {
  Dnf block;
  if (vars.size() < 2) return block;
  for (std::size_t i = 0; i < vars.size(); ++i) {
    const auto next = vars[(i + 1) % vars.size()];
    block.add(Term{pos(vars[i]), neg(next)});
  }
  return block;
}

Dnf assemble(const Dnf& reduced, const ReductionMap& map) {
  if (reduced.max_var() > map.reduced_n()) {
    throw Error(ErrorKind::width_mismatch,
                "reduced DNF mentions variables beyond the " +
                    std::to_string(map.reduced_n()) + " representatives");
  }
  if (map.original_n() == 0 ||
      (map.groups.empty() ? 0 : map.groups.back().back()) != map.original_n()) {
    throw Error(ErrorKind::width_mismatch, "reduction map groups do not cover [1, n]");
  }
  Dnf proper_form;
  std::vector<Literal> lits;
  for (auto term : reduced) {
    lits.clear();
    for (const auto& lit : term) {
      lits.push_back({map.representatives[lit.var - 1], lit.positive});
    }
    proper_form.add(Term(lits));
  }
  for (const auto& g : map.groups) proper_form.append(cyclic_block(g));
  return apply_sp(proper_form, inverse(map.sp));
}

}  // namespace compdnf
