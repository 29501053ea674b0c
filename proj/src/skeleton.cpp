#include "compdnf/skeleton.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <set>
#include <stdexcept>

#include "compdnf/chains.hpp"
#include "compdnf/complete.hpp"
#include "compdnf/transform.hpp"

namespace compdnf {

namespace {

std::size_t ones(ColMask c) { return static_cast<std::size_t>(std::popcount(c)); }

ColMask unit_mask(std::size_t k, std::size_t row) { return ColMask{1} << (k - 1 - row); }

std::string literal_name(Literal lit) {
  return (lit.positive ? "x" : "!x") + std::to_string(lit.var);
}

}  // namespace

bool TestSelection::is_identity_var(std::uint32_t var) const {
  return std::any_of(identity.begin(), identity.end(),
                     [var](const Literal& l) { return l.var == var; });
}

std::size_t default_lambda(std::size_t k) { return std::max<std::size_t>(1, k / 4); }

TestSelection select_test(const ZeroMatrix& m, std::size_t lambda) {
  const auto k = m.k();
  if (k > kMaxMaskRows) {
    throw Error(ErrorKind::unsupported, "test selection needs k <= 64");
  }
  if (!is_reduced(m)) throw Error(ErrorKind::not_reduced, "matrix is not reduced");
  if (lambda < default_lambda(k) || lambda > k / 2) {
    throw Error(ErrorKind::bad_lambda,
                "lambda = " + std::to_string(lambda) + " outside [" +
                    std::to_string(default_lambda(k)) + ", " + std::to_string(k / 2) + "]");
  }
  TestSelection sel;
  sel.lambda = lambda;
  const auto cols = m.columns();
  const auto all = m.all_ones();
  for (std::uint32_t j = 1; j <= cols.size(); ++j) {
    const auto c = cols[j - 1];
    if (std::min(ones(c), k - ones(c)) <= lambda) sel.test_vars.push_back(j);
  }
  sel.identity.resize(k);
  for (std::size_t r = 0; r < k; ++r) {
    const auto e = unit_mask(k, r);
    bool found = false;
    for (auto j : sel.test_vars) {
      const auto c = cols[j - 1];
      if (c == e || c == (~e & all)) {
        sel.identity[r] = {j, c == e};
        found = true;
        break;
      }
    }
    if (!found) {
      throw Error(ErrorKind::missing_unit,
                  "no test literal realizes the unit vector of row " + std::to_string(r + 1));
    }
  }
  return sel;
}

Dnf dyakonov_dnf(const ZeroMatrix& m, const TestSelection& sel) {
  const auto k = m.k();
  if (sel.identity.size() != k) {
    throw Error(ErrorKind::missing_unit, "test selection has no complete identity");
  }
  Dnf d;
  for (std::size_t r = 0; r < k; ++r) {
    for (std::size_t s = r + 1; s < k; ++s) d.add(Term{sel.identity[r], sel.identity[s]});
  }
  std::vector<Literal> lits;
  for (auto y : sel.test_vars) {
    if (sel.is_identity_var(y)) continue;
    const auto c = m.column(y - 1);
    for (bool positive : {true, false}) {
      lits.assign(1, Literal{y, positive});
      for (std::size_t r = 0; r < k; ++r) {
        const bool bit = (c & unit_mask(k, r)) != 0;
        if (bit == positive) lits.push_back(sel.identity[r].complement());
      }
      d.add(Term(lits));
    }
  }
  return d;
}

Dnf test_dnf(const ZeroMatrix& m, const TestSelection& sel) {
  auto d = dyakonov_dnf(m, sel);
  if (sel.t() == m.k()) {
    std::vector<Literal> closure;
    for (const auto& u : sel.identity) closure.push_back(u.complement());
    d.add(Term(closure));
  }
  return d;
}

DyakonovCount dyakonov_count(std::size_t k, std::size_t t) {
  if (t < k) throw Error(ErrorKind::invalid_argument, "test smaller than its identity part");
  DyakonovCount c;
  c.length = k * (k - 1) / 2 + 2 * (t - k);
  c.rank = k * (k - 1) + (t - k) * (k + 2);
  const auto kk = static_cast<std::int64_t>(k);
  c.full_rank = 2 * static_cast<std::int64_t>(t) * (kk + 1) - (kk * kk + 3 * kk);
  return c;
}

LiteralIndex::LiteralIndex(const ZeroMatrix& m, const TestSelection& sel)
    : k_(m.k()), lambda_(sel.lambda) {
  table_.reserve(2 * sel.t());
  for (auto j : sel.test_vars) {
    table_.emplace(m.literal_vector(pos(j)), pos(j));
    table_.emplace(m.literal_vector(neg(j)), neg(j));
  }
}

std::optional<Literal> LiteralIndex::find(ColMask vector) const {
  const auto it = table_.find(vector);
  if (it == table_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::vector<Literal>> LiteralIndex::partition(ColMask vector) const {
  std::vector<Literal> parts;
  auto rest = vector;
  while (rest != 0) {
    bool placed = false;
    for (auto size = std::min(lambda_, ones(rest)); size >= 1 && !placed; --size) {
      ColMask chunk = 0;
      auto scan = rest;
      for (std::size_t taken = 0; taken < size; ++taken) {
        const auto top = ColMask{1} << (63 - std::countl_zero(scan));
        chunk |= top;
        scan ^= top;
      }
      if (auto lit = find(chunk)) {
        parts.push_back(*lit);
        rest ^= chunk;
        placed = true;
      }
    }
    if (!placed) return std::nullopt;
  }
  return parts;
}

Term edge_term(const Edge& e) {
  if (e.kind == EdgeKind::pair) {
    throw Error(ErrorKind::invalid_argument, "pair edges emit no term");
  }
  std::vector<Literal> lits;
  lits.reserve(e.literals.size());
  for (const auto& l : e.literals) lits.push_back(l.complement());
  return Term(lits);
}

std::vector<Edge> chain_edges(const ZeroMatrix& m, const TestSelection& sel,
                              const LiteralIndex& index, std::span<const Literal> chain) {
  (void)sel;
  if (chain.empty()) throw Error(ErrorKind::invalid_argument, "empty chain");
  const auto all = m.all_ones();
  std::vector<ColMask> v;
  v.reserve(chain.size());
  for (const auto& l : chain) v.push_back(m.literal_vector(l));
  for (std::size_t j = 0; j + 1 < v.size(); ++j) {
    const auto grown = v[j + 1] & ~v[j];
    if ((v[j] & ~v[j + 1]) != 0 || ones(grown) != 1) {
      throw Error(ErrorKind::invalid_argument,
                  "chain literals " + literal_name(chain[j]) + ", " +
                      literal_name(chain[j + 1]) + " do not differ in one row");
    }
  }
  auto split = [&](ColMask vec, const Literal& owner) {
    auto parts = index.partition(vec);
    if (!parts) {
      throw Error(ErrorKind::no_partition,
                  "no split into test literals next to " + literal_name(owner));
    }
    return std::move(*parts);
  };

  std::vector<Edge> edges;
  edges.reserve(2 * chain.size() + 1);
  Edge bottom{{chain.front().complement()}, EdgeKind::decomposition};
  for (auto l : split(v.front(), chain.front())) bottom.literals.push_back(l);
  edges.push_back(std::move(bottom));
  for (std::size_t j = 0; j + 1 < chain.size(); ++j) {
    const auto z = index.find(v[j + 1] & ~v[j]);
    if (!z) {
      throw Error(ErrorKind::no_partition,
                  "no test literal for the step " + literal_name(chain[j]) + " -> " +
                      literal_name(chain[j + 1]));
    }
    edges.push_back({{chain[j], *z, chain[j + 1].complement()}, EdgeKind::decomposition});
  }
  Edge top{{chain.back()}, EdgeKind::decomposition};
  for (auto l : split(~v.back() & all, chain.back())) top.literals.push_back(l);
  edges.push_back(std::move(top));
  for (const auto& l : chain) edges.push_back({{pos(l.var), neg(l.var)}, EdgeKind::pair});
  return edges;
}

std::vector<Edge> chain_edges(const ZeroMatrix& m, const TestSelection& sel,
                              std::span<const Literal> chain) {
  return chain_edges(m, sel, LiteralIndex(m, sel), chain);
}

namespace {

std::vector<std::vector<Literal>> band_literal_chains(const ZeroMatrix& f,
                                                      const TestSelection& sel) {
  const auto k = f.k();
  const auto lo = sel.lambda + 1;
  const auto hi = k - sel.lambda - 1;
  std::vector<std::vector<Literal>> out;
  if (lo > hi || k < 2) return out;
  std::unordered_map<ColMask, Literal> by_vector;
  std::vector<bool> is_test(f.n() + 1, false);
  for (auto j : sel.test_vars) is_test[j] = true;
  for (std::uint32_t j = 1; j <= f.n(); ++j) {
    if (is_test[j]) continue;
    by_vector.emplace(f.literal_vector(pos(j)), pos(j));
    by_vector.emplace(f.literal_vector(neg(j)), neg(j));
  }
  // Band points live in B^{k-1}; prefixing the top row with 0 gives vectors of B^k.
  for (const auto& c : band_chains(k - 1, std::min(lo, k - 1), std::min(hi, k - 1))) {
    std::vector<Literal> lits;
    for (auto p : c.points) {
      const auto it = by_vector.find(p);
      if (it == by_vector.end()) {
        throw Error(ErrorKind::not_complete,
                    "no external column with chi " + std::to_string(p));
      }
      lits.push_back(it->second);
    }
    out.push_back(std::move(lits));
  }
  return out;
}

}  // namespace

Skeleton build_skeleton(const ZeroMatrix& f, const TestSelection& sel) {
  if (!is_complete(f)) throw Error(ErrorKind::not_complete, "skeleton needs a complete function");
  Skeleton s;
  std::vector<bool> is_test(f.n() + 1, false);
  for (auto j : sel.test_vars) is_test[j] = true;
  for (std::uint32_t j = 1; j <= f.n(); ++j) {
    if (!is_test[j]) s.external_vars.push_back(j);
  }
  const LiteralIndex index(f, sel);
  for (const auto& chain : band_literal_chains(f, sel)) {
    s.chain_sizes.push_back(chain.size());
    auto edges = chain_edges(f, sel, index, chain);
    s.edges.insert(s.edges.end(), std::make_move_iterator(edges.begin()),
                   std::make_move_iterator(edges.end()));
  }
  return s;
}

const char* to_string(SkeletonIssue issue) {
  switch (issue) {
    case SkeletonIssue::not_orthogonal: return "not_orthogonal";
    case SkeletonIssue::bad_pair_edge: return "bad_pair_edge";
    case SkeletonIssue::degree: return "degree";
    case SkeletonIssue::missing_pair_edge: return "missing_pair_edge";
    case SkeletonIssue::duplicate_edge: return "duplicate_edge";
    case SkeletonIssue::not_a_path: return "not_a_path";
    case SkeletonIssue::uncovered_var: return "uncovered_var";
  }
  return "unknown";
}

SkeletonReport validate_skeleton(const Skeleton& s, const ZeroMatrix& m) {
  SkeletonReport report;
  auto flag = [&](SkeletonIssue issue, std::size_t edge, std::string detail) {
    report.violations.push_back({issue, edge, std::move(detail)});
  };
  const auto n = m.n();
  std::set<std::vector<Literal>> seen;
  for (std::size_t i = 0; i < s.edges.size(); ++i) {
    const auto& e = s.edges[i];
    auto sorted = e.literals;
    std::sort(sorted.begin(), sorted.end());
    if (std::any_of(sorted.begin(), sorted.end(),
                    [n](const Literal& l) { return l.var == 0 || l.var > n; })) {
      flag(SkeletonIssue::not_orthogonal, i, "literal outside x1..x" + std::to_string(n));
      continue;
    }
    if (!seen.insert(sorted).second) flag(SkeletonIssue::duplicate_edge, i, "repeated edge");
    if (e.kind == EdgeKind::pair) {
      if (sorted.size() != 2 || sorted[0].var != sorted[1].var) {
        flag(SkeletonIssue::bad_pair_edge, i, "pair edge is not {x, !x}");
      }
      continue;
    }
    std::vector<ColMask> parts;
    for (const auto& l : e.literals) parts.push_back(m.literal_vector(l));
    if (!is_orthogonal_decomposition(m.all_ones(), std::span<const ColMask>(parts))) {
      flag(SkeletonIssue::not_orthogonal, i, "literal vectors do not partition the rows");
    }
  }

  std::vector<bool> external(n + 1, false);
  for (auto v : s.external_vars) external[v] = true;
  // occurrences[lit] = decomposition edges holding it; has_pair[var]
  std::vector<std::vector<std::size_t>> occurrences(2 * (n + 1));
  std::vector<std::size_t> pair_edges(n + 1, 0);
  auto slot = [](Literal l) { return 2 * static_cast<std::size_t>(l.var) + (l.positive ? 1 : 0); };
  for (std::size_t i = 0; i < s.edges.size(); ++i) {
    const auto& e = s.edges[i];
    if (std::any_of(e.literals.begin(), e.literals.end(),
                    [n](const Literal& l) { return l.var == 0 || l.var > n; })) {
      continue;
    }
    if (e.kind == EdgeKind::pair) {
      if (e.literals.size() == 2 && e.literals[0].var == e.literals[1].var &&
          e.literals[0].positive != e.literals[1].positive) {
        ++pair_edges[e.literals[0].var];
      }
      continue;
    }
    for (const auto& l : e.literals) occurrences[slot(l)].push_back(i);
  }

  std::vector<std::size_t> parent(s.edges.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto root = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::vector<std::size_t> links(s.edges.size(), 0);
  for (auto v : s.external_vars) {
    if (v == 0 || v > n) continue;
    const auto& p = occurrences[slot(pos(v))];
    const auto& q = occurrences[slot(neg(v))];
    if (p.empty() && q.empty() && pair_edges[v] == 0) {
      flag(SkeletonIssue::uncovered_var, 0, "x" + std::to_string(v) + " is in no edge");
      continue;
    }
    if (pair_edges[v] != 1) {
      flag(SkeletonIssue::missing_pair_edge, 0,
           "x" + std::to_string(v) + " has " + std::to_string(pair_edges[v]) + " pair edges");
    }
    if (p.size() != 1 || q.size() != 1) {
      flag(SkeletonIssue::degree, p.empty() ? (q.empty() ? 0 : q[0]) : p[0],
           "x" + std::to_string(v) + " lies in " + std::to_string(p.size()) + " and !x" +
               std::to_string(v) + " in " + std::to_string(q.size()) +
               " decomposition edges");
      continue;
    }
    ++links[p[0]];
    ++links[q[0]];
    const auto a = root(p[0]);
    const auto b = root(q[0]);
    if (a == b) {
      flag(SkeletonIssue::not_a_path, p[0], "edges around x" + std::to_string(v) + " close a cycle");
    } else {
      parent[a] = b;
    }
  }
  for (std::size_t i = 0; i < s.edges.size(); ++i) {
    if (links[i] > 2) {
      flag(SkeletonIssue::not_a_path, i, "edge holds more than two external literals");
    }
  }
  return report;
}

Synthesis synthesize(const ZeroMatrix& m, std::optional<std::size_t> lambda) {
  const auto k = m.k();
  if (k < 3) throw Error(ErrorKind::invalid_argument, "synthesis needs k >= 3");
  if (k > kMaxCompleteK) {
    throw Error(ErrorKind::unsupported,
                "synthesis supports k <= " + std::to_string(kMaxCompleteK));
  }
  auto [f, map] = reduce(m);
  if (!is_complete(f)) {
    throw Error(ErrorKind::not_complete,
                "reduced form has " + std::to_string(f.n()) + " distinct columns, not " +
                    std::to_string(complete_n(k)));
  }
  const auto sel = select_test(f, lambda.value_or(default_lambda(k)));
  const auto skeleton = build_skeleton(f, sel);

  Synthesis out;
  auto& st = out.stats;
  st.k = k;
  st.n = m.n();
  st.lambda = sel.lambda;
  st.test_size = sel.t();

  Dnf d = dyakonov_dnf(f, sel);
  for (const auto& e : skeleton.edges) {
    if (e.kind == EdgeKind::pair) continue;
    if (e.literals.size() > 3) ++st.terminal_edge_oversize_count;
    d.add(edge_term(e));
  }
  for (auto size : skeleton.chain_sizes) ++st.chain_census[size];
  st.chains = skeleton.chain_sizes.size();
  if (sel.t() == k && st.chains == 0) {
    std::vector<Literal> closure;
    for (const auto& u : sel.identity) closure.push_back(u.complement());
    d.add(Term(closure));
    st.closure_terms = 1;
  }

  const auto all = f.all_ones();
  for (auto term : d) {
    ColMask covered = all;
    for (const auto& l : term) covered &= f.literal_vector(l);
    if (covered != 0) {
      throw std::logic_error("synthesized term " + term_to_string(term) + " covers a zero");
    }
  }

  out.dnf = assemble(d, map);
  st.rank = out.dnf.rank();
  st.length = out.dnf.length();
  return out;
}

}  // namespace compdnf
