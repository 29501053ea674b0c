#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "compdnf/core.hpp"

namespace compdnf {

struct TestSelection {
  std::size_t lambda = 0;
  std::vector<std::uint32_t> test_vars;  // ascending
  /// identity[r] is the test literal whose vector is the unit vector with a
  /// single 1 in row r (0-based, top row first).
  std::vector<Literal> identity;

  std::size_t t() const { return test_vars.size(); }
  bool is_identity_var(std::uint32_t var) const;
};

/// Smallest admissible lambda for k zeros: max(1, floor(k/4)).
std::size_t default_lambda(std::size_t k);

/// Test variables are those whose column has weight <= lambda. Throws
/// not_reduced, bad_lambda (outside [default_lambda(k), floor(k/2)]) or
/// missing_unit.
TestSelection select_test(const ZeroMatrix& m, std::size_t lambda);

/// Base DNF over the test variables: all pairs of identity literals, and for
/// each other test variable y with column c the terms
///   x_y  & AND_{c[r]=1} !u_r   and   !x_y & AND_{c[r]=0} !u_r.
/// Length 2t + (k^2 - 5k)/2.
Dnf dyakonov_dnf(const ZeroMatrix& m, const TestSelection& sel);

/// dyakonov_dnf plus, when every test variable is an identity one, the term
/// AND_r !u_r; realizes the test submatrix.
Dnf test_dnf(const ZeroMatrix& m, const TestSelection& sel);

struct DyakonovCount {
  std::size_t length = 0;
  std::size_t rank = 0;        // literals of the emitted form
  std::int64_t full_rank = 0;  // 2t(k+1) - (k^2 + 3k)
};
DyakonovCount dyakonov_count(std::size_t k, std::size_t t);

/// Maps literal vectors of test literals back to literals.
class LiteralIndex {
 public:
  LiteralIndex(const ZeroMatrix& m, const TestSelection& sel);
  std::optional<Literal> find(ColMask vector) const;
  /// Orthogonal split of `vector` into test literal vectors of at most
  /// lambda ones each, greedily from the top row; empty if impossible.
  std::optional<std::vector<Literal>> partition(ColMask vector) const;

 private:
  std::size_t k_ = 0;
  std::size_t lambda_ = 0;
  std::unordered_map<ColMask, Literal> table_;
};

enum class EdgeKind { pair, decomposition };

struct Edge {
  std::vector<Literal> literals;
  EdgeKind kind = EdgeKind::decomposition;

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Terms emitted for the edges: the conjunction of the complements of the
/// literals of each decomposition edge.
Term edge_term(const Edge& e);

/// Edges of one chain of literals l_1 < ... < l_m whose vectors grow by one
/// row at each step:
///   bottom   {!l_1} + split(v_1)
///   internal {l_j, unit(v_j ^ v_{j+1}), !l_{j+1}}
///   top      {l_m} + split(!v_m)
/// followed by the pair edges {l_j, !l_j}. Throws no_partition.
std::vector<Edge> chain_edges(const ZeroMatrix& m, const TestSelection& sel,
                              const LiteralIndex& index, std::span<const Literal> chain);
std::vector<Edge> chain_edges(const ZeroMatrix& m, const TestSelection& sel,
                              std::span<const Literal> chain);

struct Skeleton {
  std::vector<Edge> edges;
  std::vector<std::uint32_t> external_vars;  // ascending
  std::vector<std::size_t> chain_sizes;      // one entry per chain, in edge order
};

enum class SkeletonIssue {
  not_orthogonal,
  bad_pair_edge,
  degree,
  missing_pair_edge,
  duplicate_edge,
  not_a_path,
  uncovered_var,
};
const char* to_string(SkeletonIssue issue);

struct SkeletonViolation {
  SkeletonIssue issue;
  std::size_t edge = 0;  // index into Skeleton::edges, when applicable
  std::string detail;
};

struct SkeletonReport {
  std::vector<SkeletonViolation> violations;
  bool valid() const { return violations.empty(); }
};

SkeletonReport validate_skeleton(const Skeleton& s, const ZeroMatrix& m);

struct SynthesisStats {
  std::size_t k = 0;
  std::size_t n = 0;
  std::size_t lambda = 0;
  std::size_t test_size = 0;
  std::map<std::size_t, std::size_t> chain_census;  // chain length -> count
  std::size_t chains = 0;
  std::size_t rank = 0;
  std::size_t length = 0;
  std::size_t terminal_edge_oversize_count = 0;  // terminal edges with > 3 literals
  std::size_t closure_terms = 0;
};

struct Synthesis {
  Dnf dnf;
  SynthesisStats stats;
};

/// Skeleton of the canonical complete function F_k (column j has chi = j):
/// band chains over the external columns plus their pair edges.
Skeleton build_skeleton(const ZeroMatrix& f, const TestSelection& sel);

/// DNF for a function whose reduced form is complete (k >= 3). The reduced
/// form is F_k; the result is carried back through the reduction map.
/// Throws not_complete, bad_lambda.
Synthesis synthesize(const ZeroMatrix& m, std::optional<std::size_t> lambda = std::nullopt);

}  // namespace compdnf
