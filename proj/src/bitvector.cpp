#include "bitga/bitvector.hpp"

#include <bit>
#include <cassert>

#include "bitga/error.hpp"

namespace bitga {

BitVector::BitVector(std::size_t length) : length_(length), words_(wordsFor(length), 0) {}

BitVector BitVector::ones(std::size_t length) {
  BitVector v(length);
  v.invert();
  return v;
}

BitVector BitVector::fromString(std::string_view bits) {
  BitVector v(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) {
    require(bits[i] == '0' || bits[i] == '1', "BitVector::fromString: expected only '0' and '1'");
    if (bits[i] == '1') v.flip(i);
  }
  return v;
}

BitVector::Word BitVector::tailMask() const {
  const std::size_t used = length_ % kWordBits;
  return used == 0 ? ~Word{0} : (Word{1} << used) - 1;
}

void BitVector::maskTail() {
  if (!words_.empty()) words_.back() &= tailMask();
}

void BitVector::checkIndex(std::size_t i) const {
  require(i < length_, "BitVector: bit index out of range");
}

void BitVector::checkSameLength(const BitVector& other) const {
  require(length_ == other.length_, "BitVector: operands must have equal length");
}

bool BitVector::test(std::size_t i) const {
  checkIndex(i);
  return (words_[i / kWordBits] >> (i % kWordBits)) & 1u;
}

void BitVector::flip(std::size_t i) {
  checkIndex(i);
  words_[i / kWordBits] ^= Word{1} << (i % kWordBits);
}

void BitVector::set(std::size_t i, bool value) {
  checkIndex(i);
  const Word bit = Word{1} << (i % kWordBits);
  if (value) {
    words_[i / kWordBits] |= bit;
  } else {
    words_[i / kWordBits] &= ~bit;
  }
}

std::size_t BitVector::popcount() const {
  std::size_t count = 0;
  for (Word w : words_) count += static_cast<std::size_t>(std::popcount(w));
  return count;
}

BitVector& BitVector::operator^=(const BitVector& other) {
  checkSameLength(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= other.words_[i];
  return *this;
}

BitVector& BitVector::operator&=(const BitVector& other) {
  checkSameLength(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  return *this;
}

BitVector& BitVector::operator|=(const BitVector& other) {
  checkSameLength(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

void BitVector::invert() {
  for (Word& w : words_) w = ~w;
  maskTail();
  assert(isCanonical());
}

void BitVector::exchangeMasked(BitVector& other, const BitVector& mask) {
  checkSameLength(other);
  checkSameLength(mask);
  for (std::size_t i = 0; i < words_.size(); ++i) {
    const Word diff = (words_[i] ^ other.words_[i]) & mask.words_[i];
    words_[i] ^= diff;
    other.words_[i] ^= diff;
  }
}

void BitVector::swapRange(BitVector& other, std::size_t first, std::size_t last) {
  checkSameLength(other);
  require(first <= last && last <= length_, "BitVector::swapRange: invalid range");
  if (first == last) return;

  const std::size_t first_word = first / kWordBits;
  const std::size_t last_word = (last - 1) / kWordBits;
  for (std::size_t w = first_word; w <= last_word; ++w) {
    Word mask = ~Word{0};
    if (w == first_word) mask &= ~Word{0} << (first % kWordBits);
    if (w == last_word && last % kWordBits != 0) mask &= (Word{1} << (last % kWordBits)) - 1;
    const Word diff = (words_[w] ^ other.words_[w]) & mask;
    words_[w] ^= diff;
    other.words_[w] ^= diff;
  }
}

bool BitVector::isCanonical() const {
  if (words_.size() != wordsFor(length_)) return false;
  return words_.empty() || (words_.back() & ~tailMask()) == 0;
}

std::string BitVector::toString() const {
  std::string out(length_, '0');
  for (std::size_t i = 0; i < length_; ++i) {
    if (test(i)) out[i] = '1';
  }
  return out;
}

BitVector operator^(BitVector a, const BitVector& b) { return a ^= b; }
BitVector operator&(BitVector a, const BitVector& b) { return a &= b; }
BitVector operator|(BitVector a, const BitVector& b) { return a |= b; }
BitVector operator~(BitVector a) {
  a.invert();
  return a;
}

std::size_t hammingDistance(const BitVector& a, const BitVector& b) { return (a ^ b).popcount(); }

}  // namespace bitga
