#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace compdnf {

/// Dense fixed-width bit vector. Position 0 is the leftmost bit, which is the
/// most significant one for chi().
class BitVec {
 public:
  BitVec() = default;
  explicit BitVec(std::size_t width);

  /// Parses a string of '0'/'1' characters, leftmost character = position 0.
  static BitVec from_string(std::string_view bits);
  /// Inverse of chi(): the width-`width` vector whose number is `value`.
  static BitVec from_chi(std::uint64_t value, std::size_t width);

  std::size_t width() const noexcept { return width_; }

  bool test(std::size_t pos) const noexcept {
    return (words_[pos >> 6] >> (pos & 63)) & 1u;
  }
  bool operator[](std::size_t pos) const noexcept { return test(pos); }
  void set(std::size_t pos, bool value = true) noexcept {
    const std::uint64_t bit = std::uint64_t{1} << (pos & 63);
    if (value) {
      words_[pos >> 6] |= bit;
    } else {
      words_[pos >> 6] &= ~bit;
    }
  }
  void flip(std::size_t pos) noexcept { words_[pos >> 6] ^= std::uint64_t{1} << (pos & 63); }

  std::size_t count() const noexcept;
  bool none() const noexcept;
  bool all() const noexcept;

  BitVec operator~() const;
  BitVec& operator&=(const BitVec& other);
  BitVec& operator|=(const BitVec& other);
  BitVec& operator^=(const BitVec& other);
  friend BitVec operator&(BitVec a, const BitVec& b) { return a &= b; }
  friend BitVec operator|(BitVec a, const BitVec& b) { return a |= b; }
  friend BitVec operator^(BitVec a, const BitVec& b) { return a ^= b; }

  /// True iff no position is set in both vectors.
  bool disjoint(const BitVec& other) const;
  /// True iff every set position of *this is set in `other`.
  bool subset_of(const BitVec& other) const;

  std::string to_string() const;

  const std::vector<std::uint64_t>& words() const noexcept { return words_; }

  friend bool operator==(const BitVec& a, const BitVec& b) = default;
  /// Lexicographic order, position 0 first (matches chi order for equal widths).
  friend bool operator<(const BitVec& a, const BitVec& b);

 private:
  void check_width(const BitVec& other) const;
  void clear_tail() noexcept;

  std::size_t width_ = 0;
  std::vector<std::uint64_t> words_;
};

/// chi(v) = v_1 2^{w-1} + ... + v_w 2^0. Requires width <= 64.
std::uint64_t chi(const BitVec& v);
inline BitVec chi_inv(std::uint64_t value, std::size_t width) {
  return BitVec::from_chi(value, width);
}

/// min(#ones, #zeros).
std::size_t weight(const BitVec& v);

struct BitVecHash {
  std::size_t operator()(const BitVec& v) const noexcept;
};

}  // namespace compdnf
