#pragma once

/// @file rng.hpp
/// Uniform randomness shared by every operator: a seedable SplitMix64 source,
/// a call-counting decorator, and Fisher-Yates shuffling.

#include <concepts>
#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>

#include "bitga/error.hpp"

namespace bitga {

/// Anything that can hand out the three kinds of uniform draws the operators use.
template <class S>
concept UniformSource = requires(S& s, std::uint32_t bound) {
  { s.nextReal() } -> std::same_as<double>;
  { s.nextInt(bound) } -> std::same_as<std::uint32_t>;
  { s.nextBlock32() } -> std::same_as<std::uint32_t>;
};

namespace detail {

/// Lemire's multiply-then-compare bounded integer. `next_word` yields raw
/// uniform 32-bit words; the modulo and the retry loop only run when the low
/// half of the product lands in the biased sliver below 2^32 mod bound.
template <class WordFn>
inline std::uint32_t boundedInt(std::uint32_t bound, WordFn&& next_word) {
  std::uint64_t product = std::uint64_t{next_word()} * bound;
  auto low = static_cast<std::uint32_t>(product);
  if (low < bound) [[unlikely]] {
    const std::uint32_t threshold = (0u - bound) % bound;
    while (low < threshold) {
      product = std::uint64_t{next_word()} * bound;
      low = static_cast<std::uint32_t>(product);
    }
  }
  return static_cast<std::uint32_t>(product >> 32);
}

}  // namespace detail

/// SplitMix64 generator. Single-threaded; give every worker its own instance.
class RandomSource {
 public:
  explicit RandomSource(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next64() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, 1) with 53 bits of resolution.
  double nextReal() { return static_cast<double>(next64() >> 11) * 0x1.0p-53; }

  /// Uniform in [0, bound). Throws ContractViolation when bound is 0.
  std::uint32_t nextInt(std::uint32_t bound) {
    require(bound != 0, "nextInt: bound must be at least 1");
    return detail::boundedInt(bound, [this] { return nextBlock32(); });
  }

  std::uint32_t nextBlock32() { return static_cast<std::uint32_t>(next64() >> 32); }

 private:
  std::uint64_t state_;
};

/// Decorator tallying draws by kind. Values are forwarded untouched, so a
/// counted run reproduces the uncounted one draw for draw.
template <UniformSource Inner = RandomSource>
class CountingRandomSource {
 public:
  explicit CountingRandomSource(Inner inner) : inner_(std::move(inner)) {}
  explicit CountingRandomSource(std::uint64_t seed) requires std::constructible_from<Inner, std::uint64_t>
      : inner_(seed) {}

  double nextReal() {
    ++real_count_;
    return inner_.nextReal();
  }
  std::uint32_t nextInt(std::uint32_t bound) {
    ++int_count_;
    return inner_.nextInt(bound);
  }
  std::uint32_t nextBlock32() {
    ++block_count_;
    return inner_.nextBlock32();
  }

  std::uint64_t realCount() const { return real_count_; }
  std::uint64_t intCount() const { return int_count_; }
  std::uint64_t blockCount() const { return block_count_; }
  std::uint64_t totalCount() const { return real_count_ + int_count_ + block_count_; }

  void resetCounts() { real_count_ = int_count_ = block_count_ = 0; }

  Inner& inner() { return inner_; }

 private:
  Inner inner_;
  std::uint64_t real_count_ = 0;
  std::uint64_t int_count_ = 0;
  std::uint64_t block_count_ = 0;
};

/// Fisher-Yates: every ordering of `items` equally likely.
template <class T, UniformSource S>
void shuffle(S& src, std::span<T> items) {
  for (std::size_t i = items.size(); i > 1; --i) {
    const std::size_t j = src.nextInt(static_cast<std::uint32_t>(i));
    using std::swap;
    swap(items[i - 1], items[j]);
  }
}

}  // namespace bitga
