#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "compdnf/bitvec.hpp"
#include "compdnf/error.hpp"

namespace compdnf {

/// A column of a zero matrix packed into an integer: row r (0-based) sits at
/// bit k-1-r, so the integer value equals chi() of the column. Needs k <= 64.
using ColMask = std::uint64_t;

inline constexpr std::size_t kMaxMaskRows = 64;

inline ColMask all_ones_mask(std::size_t k) {
  return k >= 64 ? ~ColMask{0} : (ColMask{1} << k) - 1;
}

/// A variable (1-based, as in x_1..x_n) with a polarity.
struct Literal {
  std::uint32_t var = 0;
  bool positive = true;

  constexpr Literal complement() const { return {var, !positive}; }
  /// Signed file notation: 3 for x_3, -3 for its negation.
  constexpr std::int64_t signed_index() const {
    return positive ? std::int64_t{var} : -std::int64_t{var};
  }
  bool satisfied_by(const BitVec& point) const {
    return point.test(var - 1) == positive;
  }

  friend constexpr auto operator<=>(const Literal&, const Literal&) = default;
};

constexpr Literal pos(std::uint32_t var) { return {var, true}; }
constexpr Literal neg(std::uint32_t var) { return {var, false}; }

using TermView = std::span<const Literal>;

bool term_satisfied(TermView term, const BitVec& point);
std::string term_to_string(TermView term);

/// Conjunction of literals over pairwise distinct variables, kept sorted by
/// (var, polarity).
class Term {
 public:
  Term() = default;
  /// Throws Error(invalid_argument) if empty, or if a variable repeats.
  explicit Term(std::vector<Literal> literals);
  Term(std::initializer_list<Literal> literals)
      : Term(std::vector<Literal>(literals)) {}
  explicit Term(TermView literals)
      : Term(std::vector<Literal>(literals.begin(), literals.end())) {}

  TermView literals() const { return literals_; }
  std::size_t rank() const { return literals_.size(); }
  bool contains(Literal lit) const;
  bool satisfied_by(const BitVec& point) const {
    return term_satisfied(literals_, point);
  }
  std::string to_string() const { return term_to_string(literals_); }

  operator TermView() const { return literals_; }  // NOLINT(google-explicit-constructor)

  friend bool operator==(const Term&, const Term&) = default;
  friend auto operator<=>(const Term& a, const Term& b) {
    return a.literals_ <=> b.literals_;
  }

 private:
  std::vector<Literal> literals_;
};

/// Ordered disjunction of terms, stored contiguously.
class Dnf {
 public:
  class const_iterator {
   public:
    using value_type = TermView;
    using difference_type = std::ptrdiff_t;

    const_iterator() = default;
    const_iterator(const Dnf* dnf, std::size_t index) : dnf_(dnf), index_(index) {}
    TermView operator*() const { return (*dnf_)[index_]; }
    const_iterator& operator++() {
      ++index_;
      return *this;
    }
    const_iterator operator++(int) {
      auto copy = *this;
      ++index_;
      return copy;
    }
    friend bool operator==(const const_iterator& a, const const_iterator& b) {
      return a.index_ == b.index_;
    }

   private:
    const Dnf* dnf_ = nullptr;
    std::size_t index_ = 0;
  };

  Dnf() = default;
  Dnf(std::initializer_list<Term> terms);

  void add(const Term& term);
  void append(const Dnf& other);
  void reserve(std::size_t terms, std::size_t literals);

  std::size_t length() const { return offsets_.size() - 1; }
  std::size_t rank() const { return literals_.size(); }
  bool empty() const { return length() == 0; }
  /// Largest variable index mentioned, 0 for an empty DNF.
  std::uint32_t max_var() const;

  TermView operator[](std::size_t i) const {
    return TermView(literals_).subspan(offsets_[i], offsets_[i + 1] - offsets_[i]);
  }
  const_iterator begin() const { return {this, 0}; }
  const_iterator end() const { return {this, length()}; }

  std::vector<Term> terms() const;

  friend bool operator==(const Dnf&, const Dnf&) = default;

 private:
  std::vector<Literal> literals_;
  std::vector<std::size_t> offsets_{0};
};

/// k x n matrix of pairwise distinct rows: the zeros of a Boolean function.
class ZeroMatrix {
 public:
  /// Throws on k = 0, n = 0, ragged widths or duplicate rows.
  explicit ZeroMatrix(std::vector<BitVec> rows);
  /// Builds the matrix from packed columns (k <= 64).
  static ZeroMatrix from_columns(std::size_t k, std::span<const ColMask> columns);
  static ZeroMatrix from_strings(std::initializer_list<std::string_view> rows);

  std::size_t k() const { return rows_.size(); }
  std::size_t n() const { return rows_.front().width(); }

  const BitVec& row(std::size_t r) const { return rows_[r]; }
  const std::vector<BitVec>& rows() const { return rows_; }

  /// Column-oriented access; all of these need k <= 64.
  bool has_column_masks() const { return !columns_.empty(); }
  ColMask column(std::size_t j) const;
  std::span<const ColMask> columns() const;
  ColMask literal_vector(Literal lit) const;
  ColMask all_ones() const { return all_ones_mask(k()); }
  BitVec column_bits(std::size_t j) const;

  bool is_zero(const BitVec& point) const;

  friend bool operator==(const ZeroMatrix& a, const ZeroMatrix& b) {
    return a.rows_ == b.rows_;
  }

 private:
  ZeroMatrix(std::vector<BitVec> rows, std::vector<ColMask> columns);
  void require_columns() const;

  std::vector<BitVec> rows_;
  std::vector<ColMask> columns_;
};

/// Same zero set irrespective of row order.
bool same_function(const ZeroMatrix& a, const ZeroMatrix& b);

/// Value of the function of M at `point`: 0 iff the point is a row of M.
bool eval(const ZeroMatrix& m, const BitVec& point);
bool eval_dnf(const Dnf& d, const BitVec& point);

/// OR of parts equals alpha and every part lies inside the support of alpha.
bool is_decomposition(const BitVec& alpha, std::span<const BitVec> parts);
/// Parts have pairwise disjoint supports whose union is the support of alpha.
bool is_orthogonal_decomposition(const BitVec& alpha, std::span<const BitVec> parts);
/// Packed-column variants.
bool is_decomposition(ColMask alpha, std::span<const ColMask> parts);
bool is_orthogonal_decomposition(ColMask alpha, std::span<const ColMask> parts);

struct Measures {
  std::size_t rank = 0;
  std::size_t length = 0;
  double conv = 0.0;
};

/// rank, length and conv_{alpha,beta} = alpha*rank + beta*length.
/// Requires alpha, beta > 0 and alpha + beta = 1.
Measures measures(const Dnf& d, double alpha = 0.5, double beta = 0.5);

}  // namespace compdnf
