#include "compdnf/bitvec.hpp"

#include <algorithm>
#include <bit>

#include "compdnf/error.hpp"

namespace compdnf {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::width_mismatch: return "WidthMismatch";
    case ErrorKind::invalid_argument: return "InvalidArgument";
    case ErrorKind::constant_column: return "ConstantColumn";
    case ErrorKind::not_reduced: return "NotReduced";
    case ErrorKind::not_complete: return "NotComplete";
    case ErrorKind::missing_unit: return "MissingUnit";
    case ErrorKind::bad_lambda: return "BadLambda";
    case ErrorKind::no_partition: return "NoPartition";
    case ErrorKind::overflow: return "Overflow";
    case ErrorKind::guard_exceeded: return "GuardExceeded";
    case ErrorKind::parse_error: return "ParseError";
    case ErrorKind::unsupported: return "Unsupported";
  }
  return "Unknown";
}

BitVec::BitVec(std::size_t width) : width_(width), words_((width + 63) / 64, 0) {}

BitVec BitVec::from_string(std::string_view bits) {
  BitVec v(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] == '1') {
      v.set(i);
    } else if (bits[i] != '0') {
      throw Error(ErrorKind::parse_error,
                  "bit string contains '" + std::string(1, bits[i]) + "'");
    }
  }
  return v;
}

BitVec BitVec::from_chi(std::uint64_t value, std::size_t width) {
  if (width == 0 || width > 64) {
    throw Error(ErrorKind::unsupported, "chi_inv needs 1 <= width <= 64");
  }
  if (width < 64 && (value >> width) != 0) {
    throw Error(ErrorKind::invalid_argument, "chi value out of range for width");
  }
  BitVec v(width);
  for (std::size_t i = 0; i < width; ++i) {
    v.set(i, (value >> (width - 1 - i)) & 1u);
  }
  return v;
}

std::size_t BitVec::count() const noexcept {
  std::size_t total = 0;
  for (auto w : words_) total += static_cast<std::size_t>(std::popcount(w));
  return total;
}

bool BitVec::none() const noexcept {
  return std::all_of(words_.begin(), words_.end(), [](auto w) { return w == 0; });
}

bool BitVec::all() const noexcept { return count() == width_; }

void BitVec::clear_tail() noexcept {
  if (const auto rem = width_ & 63; rem != 0) {
    words_.back() &= (std::uint64_t{1} << rem) - 1;
  }
}

void BitVec::check_width(const BitVec& other) const {
  if (width_ != other.width_) {
    throw Error(ErrorKind::width_mismatch,
                "bit vector widths differ: " + std::to_string(width_) + " vs " +
                    std::to_string(other.width_));
  }
}

BitVec BitVec::operator~() const {
  BitVec out(*this);
  for (auto& w : out.words_) w = ~w;
  out.clear_tail();
  return out;
}

BitVec& BitVec::operator&=(const BitVec& other) {
  check_width(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  return *this;
}

BitVec& BitVec::operator|=(const BitVec& other) {
  check_width(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

BitVec& BitVec::operator^=(const BitVec& other) {
  check_width(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= other.words_[i];
  return *this;
}

bool BitVec::disjoint(const BitVec& other) const {
  check_width(other);
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if (words_[i] & other.words_[i]) return false;
  }
  return true;
}

bool BitVec::subset_of(const BitVec& other) const {
  check_width(other);
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if (words_[i] & ~other.words_[i]) return false;
  }
  return true;
}

std::string BitVec::to_string() const {
  std::string s(width_, '0');
  for (std::size_t i = 0; i < width_; ++i) {
    if (test(i)) s[i] = '1';
  }
  return s;
}

bool operator<(const BitVec& a, const BitVec& b) {
  const auto common = std::min(a.width_, b.width_);
  for (std::size_t w = 0; w * 64 < common; ++w) {
    const auto diff = a.words_[w] ^ b.words_[w];
    if (diff == 0) continue;
    // Lowest differing position decides; position 0 is the most significant.
    const auto pos = w * 64 + static_cast<std::size_t>(std::countr_zero(diff));
    if (pos >= common) break;
    return b.test(pos);
  }
  return a.width_ < b.width_;
}

std::uint64_t chi(const BitVec& v) {
  if (v.width() > 64) {
    throw Error(ErrorKind::unsupported, "chi needs width <= 64");
  }
  std::uint64_t value = 0;
  for (std::size_t i = 0; i < v.width(); ++i) value = (value << 1) | (v.test(i) ? 1u : 0u);
  return value;
}

std::size_t weight(const BitVec& v) {
  const auto ones = v.count();
  return std::min(ones, v.width() - ones);
}

std::size_t BitVecHash::operator()(const BitVec& v) const noexcept {
  std::size_t h = std::hash<std::size_t>{}(v.width());
  for (auto w : v.words()) {
    h ^= std::hash<std::uint64_t>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

}  // namespace compdnf
