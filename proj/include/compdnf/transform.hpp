#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "compdnf/core.hpp"

namespace compdnf {

/// Shannon-Povarov transform: output column j (1-based) is source column
/// perm[j-1], complemented iff that source variable is in `invert`.
struct SPTransform {
  std::vector<std::uint32_t> perm;  // 1-based source variables
  std::vector<bool> invert;         // indexed by source variable - 1

  static SPTransform identity(std::size_t n);
  std::size_t n() const { return perm.size(); }
  /// Throws Error(invalid_argument) unless perm is a bijection on [1, n].
  void validate() const;

  friend bool operator==(const SPTransform&, const SPTransform&) = default;
};

SPTransform inverse(const SPTransform& t);
/// t applied after s.
SPTransform compose(const SPTransform& t, const SPTransform& s);

ZeroMatrix apply_sp(const ZeroMatrix& m, const SPTransform& t);
/// Renames a DNF realizing M into one realizing apply_sp(M, t); rank and
/// length are unchanged.
Dnf apply_sp(const Dnf& d, const SPTransform& t);

/// Conditions 1-3: no constant column, equal columns adjacent, no pair of
/// complementary columns.
bool is_proper(const ZeroMatrix& m);
/// Proper with pairwise distinct columns.
bool is_reduced(const ZeroMatrix& m);

/// Canonical proper form: complement each column whose first entry is 1,
/// then stable-sort the columns by chi. Throws Error(constant_column).
std::pair<ZeroMatrix, SPTransform> normalize_to_proper(const ZeroMatrix& m);

struct ReductionMap {
  SPTransform sp;                                 // original -> proper form
  std::vector<std::vector<std::uint32_t>> groups;  // proper-form positions, 1-based, consecutive
  std::vector<std::uint32_t> representatives;      // first position of each group

  std::size_t reduced_n() const { return groups.size(); }
  std::size_t original_n() const { return sp.n(); }
};

/// Keeps one column per run of equal columns of a proper matrix; the
/// returned map has an identity transform.
std::pair<ZeroMatrix, ReductionMap> reduce_columns(const ZeroMatrix& proper);
/// normalize_to_proper followed by reduce_columns, transform recorded.
std::pair<ZeroMatrix, ReductionMap> reduce(const ZeroMatrix& m);

/// Cyclic block x_a1 !x_a2 v x_a2 !x_a3 v ... v x_ag !x_a1; empty for g < 2.
Dnf cyclic_block(std::span<const std::uint32_t> vars);

/// Carries a DNF of the reduced function back to the original variables:
/// renames reduced variable j to the representative of group j, adds a
/// cyclic block per group of size >= 2, then undoes the transform.
Dnf assemble(const Dnf& reduced, const ReductionMap& map);

}  // namespace compdnf
