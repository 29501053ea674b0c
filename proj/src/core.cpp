#include "compdnf/core.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <unordered_set>

namespace compdnf {

bool term_satisfied(TermView term, const BitVec& point) {
  return std::all_of(term.begin(), term.end(),
                     [&](const Literal& lit) { return lit.satisfied_by(point); });
}

std::string term_to_string(TermView term) {
  std::string out;
  for (const auto& lit : term) {
    if (!out.empty()) out += ' ';
    out += std::to_string(lit.signed_index());
  }
  return out;
}

Term::Term(std::vector<Literal> literals) : literals_(std::move(literals)) {
  if (literals_.empty()) {
    throw Error(ErrorKind::invalid_argument, "a term needs at least one literal");
  }
  std::sort(literals_.begin(), literals_.end());
  for (std::size_t i = 0; i < literals_.size(); ++i) {
    if (literals_[i].var == 0) {
      throw Error(ErrorKind::invalid_argument, "variables are 1-based");
    }
    if (i > 0 && literals_[i].var == literals_[i - 1].var) {
      throw Error(ErrorKind::invalid_argument,
                  "variable x" + std::to_string(literals_[i].var) +
                      " occurs twice in a term");
    }
  }
}

bool Term::contains(Literal lit) const {
  return std::binary_search(literals_.begin(), literals_.end(), lit);
}

Dnf::Dnf(std::initializer_list<Term> terms) {
  for (const auto& t : terms) add(t);
}

void Dnf::add(const Term& term) {
  const auto lits = term.literals();
  literals_.insert(literals_.end(), lits.begin(), lits.end());
  offsets_.push_back(literals_.size());
}

void Dnf::append(const Dnf& other) {
  const auto base = literals_.size();
  literals_.insert(literals_.end(), other.literals_.begin(), other.literals_.end());
  for (std::size_t i = 1; i < other.offsets_.size(); ++i) {
    offsets_.push_back(base + other.offsets_[i]);
  }
}

void Dnf::reserve(std::size_t terms, std::size_t literals) {
  offsets_.reserve(terms + 1);
  literals_.reserve(literals);
}

std::uint32_t Dnf::max_var() const {
  std::uint32_t m = 0;
  for (const auto& lit : literals_) m = std::max(m, lit.var);
  return m;
}

std::vector<Term> Dnf::terms() const {
  std::vector<Term> out;
  out.reserve(length());
  for (auto t : *this) out.emplace_back(t);
  return out;
}

ZeroMatrix::ZeroMatrix(std::vector<BitVec> rows, std::vector<ColMask> columns)
    : rows_(std::move(rows)), columns_(std::move(columns)) {}

ZeroMatrix::ZeroMatrix(std::vector<BitVec> rows) : rows_(std::move(rows)) {
  if (rows_.empty()) {
    throw Error(ErrorKind::invalid_argument, "zero matrix needs k >= 1 rows");
  }
  const auto n = rows_.front().width();
  if (n == 0) {
    throw Error(ErrorKind::invalid_argument, "zero matrix needs n >= 1 columns");
  }
  std::unordered_set<BitVec, BitVecHash> seen;
  for (const auto& r : rows_) {
    if (r.width() != n) {
      throw Error(ErrorKind::width_mismatch, "zero matrix rows have different widths");
    }
    if (!seen.insert(r).second) {
      throw Error(ErrorKind::invalid_argument, "zero matrix rows must be distinct: " +
                                                   r.to_string());
    }
  }
  const auto k = rows_.size();
  if (k <= kMaxMaskRows) {
    columns_.assign(n, 0);
    for (std::size_t r = 0; r < k; ++r) {
      const ColMask bit = ColMask{1} << (k - 1 - r);
      const auto& words = rows_[r].words();
      for (std::size_t w = 0; w < words.size(); ++w) {
        for (auto word = words[w]; word != 0; word &= word - 1) {
          columns_[w * 64 + static_cast<std::size_t>(std::countr_zero(word))] |= bit;
        }
      }
    }
  }
}

ZeroMatrix ZeroMatrix::from_columns(std::size_t k, std::span<const ColMask> columns) {
  if (k == 0 || k > kMaxMaskRows) {
    throw Error(ErrorKind::unsupported, "from_columns needs 1 <= k <= 64");
  }
  if (columns.empty()) {
    throw Error(ErrorKind::invalid_argument, "zero matrix needs n >= 1 columns");
  }
  const auto n = columns.size();
  std::vector<BitVec> rows(k, BitVec(n));
  const auto mask = all_ones_mask(k);
  for (std::size_t j = 0; j < n; ++j) {
    if (columns[j] & ~mask) {
      throw Error(ErrorKind::invalid_argument, "column mask wider than k");
    }
    for (auto c = columns[j]; c != 0; c &= c - 1) {
      const auto bit = static_cast<std::size_t>(std::countr_zero(c));
      rows[k - 1 - bit].set(j);
    }
  }
  std::unordered_set<BitVec, BitVecHash> seen;
  for (const auto& r : rows) {
    if (!seen.insert(r).second) {
      throw Error(ErrorKind::invalid_argument,
                  "zero matrix rows must be distinct: " + r.to_string());
    }
  }
  return ZeroMatrix(std::move(rows), std::vector<ColMask>(columns.begin(), columns.end()));
}

ZeroMatrix ZeroMatrix::from_strings(std::initializer_list<std::string_view> rows) {
  std::vector<BitVec> parsed;
  parsed.reserve(rows.size());
  for (auto r : rows) parsed.push_back(BitVec::from_string(r));
  return ZeroMatrix(std::move(parsed));
}

void ZeroMatrix::require_columns() const {
  if (columns_.empty()) {
    throw Error(ErrorKind::unsupported,
                "column operations need k <= 64 (k = " + std::to_string(k()) + ")");
  }
}

ColMask ZeroMatrix::column(std::size_t j) const {
  require_columns();
  return columns_.at(j);
}

std::span<const ColMask> ZeroMatrix::columns() const {
  require_columns();
  return columns_;
}

ColMask ZeroMatrix::literal_vector(Literal lit) const {
  const auto c = column(lit.var - 1);
  return lit.positive ? c : (~c & all_ones());
}

BitVec ZeroMatrix::column_bits(std::size_t j) const {
  BitVec v(k());
  for (std::size_t r = 0; r < k(); ++r) v.set(r, rows_[r].test(j));
  return v;
}

bool ZeroMatrix::is_zero(const BitVec& point) const {
  if (point.width() != n()) {
    throw Error(ErrorKind::width_mismatch, "point width " + std::to_string(point.width()) +
                                               " differs from n = " + std::to_string(n()));
  }
  return std::find(rows_.begin(), rows_.end(), point) != rows_.end();
}

bool same_function(const ZeroMatrix& a, const ZeroMatrix& b) {
  if (a.k() != b.k() || a.n() != b.n()) return false;
  auto ra = a.rows();
  auto rb = b.rows();
  std::sort(ra.begin(), ra.end());
  std::sort(rb.begin(), rb.end());
  return ra == rb;
}

bool eval(const ZeroMatrix& m, const BitVec& point) { return !m.is_zero(point); }

bool eval_dnf(const Dnf& d, const BitVec& point) {
  if (d.max_var() > point.width()) {
    throw Error(ErrorKind::width_mismatch, "DNF mentions a variable beyond the point width");
  }
  for (auto term : d) {
    if (term_satisfied(term, point)) return true;
  }
  return false;
}

namespace {

template <typename Vec>
void check_parts_width(const Vec& alpha, std::span<const Vec> parts) {
  for (const auto& p : parts) {
    if (p.width() != alpha.width()) {
      throw Error(ErrorKind::width_mismatch, "decomposition parts differ in width");
    }
  }
}

}  // namespace

bool is_decomposition(const BitVec& alpha, std::span<const BitVec> parts) {
  check_parts_width(alpha, parts);
  BitVec acc(alpha.width());
  for (const auto& p : parts) {
    if (!p.subset_of(alpha)) return false;
    acc |= p;
  }
  return acc == alpha;
}

bool is_orthogonal_decomposition(const BitVec& alpha, std::span<const BitVec> parts) {
  check_parts_width(alpha, parts);
  BitVec acc(alpha.width());
  for (const auto& p : parts) {
    if (!acc.disjoint(p)) return false;
    acc |= p;
  }
  return acc == alpha;
}

bool is_decomposition(ColMask alpha, std::span<const ColMask> parts) {
  ColMask acc = 0;
  for (auto p : parts) {
    if (p & ~alpha) return false;
    acc |= p;
  }
  return acc == alpha;
}

bool is_orthogonal_decomposition(ColMask alpha, std::span<const ColMask> parts) {
  ColMask acc = 0;
  for (auto p : parts) {
    if (acc & p) return false;
    acc |= p;
  }
  return acc == alpha;
}

Measures measures(const Dnf& d, double alpha, double beta) {
  if (!(alpha > 0.0) || !(beta > 0.0) || std::abs(alpha + beta - 1.0) > 1e-12) {
    throw Error(ErrorKind::invalid_argument,
                "conv needs alpha, beta > 0 with alpha + beta = 1");
  }
  Measures m;
  m.rank = d.rank();
  m.length = d.length();
  m.conv = alpha * static_cast<double>(m.rank) + beta * static_cast<double>(m.length);
  return m;
}

}  // namespace compdnf
