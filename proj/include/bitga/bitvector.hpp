#pragma once

/// @file bitvector.hpp
/// Fixed-length bit string packed into 32-bit words. Bit i lives in word i / 32
/// at position i % 32. Bits past length() in the last word are always zero.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "bitga/rng.hpp"

namespace bitga {

class BitVector {
 public:
  using Word = std::uint32_t;
  static constexpr std::size_t kWordBits = 32;

  BitVector() = default;
  /// All zeros.
  explicit BitVector(std::size_t length);

  static BitVector zeros(std::size_t length) { return BitVector(length); }
  static BitVector ones(std::size_t length);
  /// Parses '0'/'1' characters, bit 0 first. Throws ContractViolation on any other character.
  static BitVector fromString(std::string_view bits);

  static constexpr std::size_t wordsFor(std::size_t length) {
    return (length + kWordBits - 1) / kWordBits;
  }

  std::size_t length() const { return length_; }
  std::span<const Word> words() const { return words_; }

  bool test(std::size_t i) const;
  void flip(std::size_t i);
  void set(std::size_t i, bool value);

  std::size_t popcount() const;

  BitVector& operator^=(const BitVector& other);
  BitVector& operator&=(const BitVector& other);
  BitVector& operator|=(const BitVector& other);
  /// Complements in place, keeping the excess bits zero.
  void invert();

  /// Exchanges with `other` every bit where `mask` is 1, a word at a time.
  void exchangeMasked(BitVector& other, const BitVector& mask);

  /// Exchanges bits [first, last) with `other`, a word at a time.
  void swapRange(BitVector& other, std::size_t first, std::size_t last);

  /// Overwrites with uniform bits, one 32-bit block per word.
  template <UniformSource S>
  void randomize(S& src) {
    for (Word& w : words_) w = src.nextBlock32();
    maskTail();
  }

  bool isCanonical() const;

  /// Bit 0 first, e.g. "1000" for a length-4 vector with only bit 0 set.
  std::string toString() const;

  friend bool operator==(const BitVector&, const BitVector&) = default;

 private:
  Word tailMask() const;
  void maskTail();
  void checkIndex(std::size_t i) const;
  void checkSameLength(const BitVector& other) const;

  std::size_t length_ = 0;
  std::vector<Word> words_;
};

BitVector operator^(BitVector a, const BitVector& b);
BitVector operator&(BitVector a, const BitVector& b);
BitVector operator|(BitVector a, const BitVector& b);
BitVector operator~(BitVector a);

inline std::size_t popcount(const BitVector& v) { return v.popcount(); }

/// Number of positions where a and b differ.
std::size_t hammingDistance(const BitVector& a, const BitVector& b);

template <UniformSource S>
BitVector randomVector(std::size_t length, S& src) {
  BitVector v(length);
  v.randomize(src);
  return v;
}

}  // namespace bitga
