#pragma once

/// @file operators.hpp
/// Bitmask generation, bit-flip mutation and crossover for BitVector genomes.
///
/// Every probabilistic operator comes in two forms. The simple form asks for one
/// uniform real per bit. The optimized form draws the number of affected bits k
/// from B(n, p) and then picks which k bits with `sample`, so it spends
/// O(1) + min(k, n - k) draws instead of n. Both produce identically
/// distributed results.

#include <algorithm>
#include <cstddef>
#include <string>
#include <variant>

#include "bitga/binomial.hpp"
#include "bitga/bitvector.hpp"
#include "bitga/rng.hpp"
#include "bitga/sampling.hpp"

namespace bitga {

struct MutationParams {
  double pm = 0.0;
};

struct UniformCrossoverParams {
  double pu = 0.0;
};

struct SinglePointCrossover {};
struct TwoPointCrossover {};

using CrossoverKind = std::variant<UniformCrossoverParams, SinglePointCrossover, TwoPointCrossover>;

/// "uniform(0.33)", "onepoint" or "twopoint".
std::string toString(const CrossoverKind& kind);

inline void checkProbability(double p, const char* message) {
  require(p >= 0.0 && p <= 1.0, message);
}

// ---------------------------------------------------------------------------
// Bitmasks

template <UniformSource S>
BitVector simpleBitmask(std::size_t n, double p, S& src) {
  checkProbability(p, "simpleBitmask: probability must lie in [0, 1]");
  BitVector mask(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (src.nextReal() < p) mask.flip(i);
  }
  return mask;
}

/// Mask of length sampler.n() with each bit set with probability sampler.p().
/// p == 0.5 exactly fills whole words from nextBlock32 instead.
template <UniformSource S>
BitVector optimizedBitmask(const BinomialSampler& sampler, S& src) {
  const auto n = static_cast<std::size_t>(sampler.n());
  BitVector mask(n);
  if (sampler.p() == 0.5) {
    mask.randomize(src);
    return mask;
  }
  const auto k = static_cast<std::size_t>(sampler(src));
  for (std::size_t i : sample(n, k, src)) mask.flip(i);
  return mask;
}

template <UniformSource S>
BitVector optimizedBitmask(std::size_t n, double p, S& src) {
  checkProbability(p, "optimizedBitmask: probability must lie in [0, 1]");
  return optimizedBitmask(BinomialSampler(static_cast<std::int64_t>(n), p), src);
}

// ---------------------------------------------------------------------------
// Mutation

template <UniformSource S>
void simpleMutation(BitVector& v, double pm, S& src) {
  checkProbability(pm, "simpleMutation: mutation rate must lie in [0, 1]");
  const std::size_t n = v.length();
  for (std::size_t i = 0; i < n; ++i) {
    if (src.nextReal() < pm) v.flip(i);
  }
}

/// `sampler` must be B(v.length(), pm); build it once per genome length.
template <UniformSource S>
void optimizedMutation(BitVector& v, const BinomialSampler& sampler, S& src) {
  require(static_cast<std::size_t>(sampler.n()) == v.length(),
          "optimizedMutation: sampler length differs from the vector length");
  v ^= optimizedBitmask(sampler, src);
}

template <UniformSource S>
void optimizedMutation(BitVector& v, double pm, S& src) {
  checkProbability(pm, "optimizedMutation: mutation rate must lie in [0, 1]");
  optimizedMutation(v, BinomialSampler(static_cast<std::int64_t>(v.length()), pm), src);
}

// ---------------------------------------------------------------------------
// Crossover. All operators turn the two parents into the two children in place.

/// Swaps v1[i] and v2[i] wherever mask[i] is 1.
inline void uniformCrossoverWithMask(BitVector& v1, BitVector& v2, const BitVector& mask) {
  v1.exchangeMasked(v2, mask);
}

template <UniformSource S>
void simpleUniformCrossover(BitVector& v1, BitVector& v2, double pu, S& src) {
  require(v1.length() == v2.length(), "uniformCrossover: parents must have equal length");
  uniformCrossoverWithMask(v1, v2, simpleBitmask(v1.length(), pu, src));
}

template <UniformSource S>
void optimizedUniformCrossover(BitVector& v1, BitVector& v2, const BinomialSampler& sampler, S& src) {
  require(v1.length() == v2.length(), "uniformCrossover: parents must have equal length");
  require(static_cast<std::size_t>(sampler.n()) == v1.length(),
          "optimizedUniformCrossover: sampler length differs from the vector length");
  uniformCrossoverWithMask(v1, v2, optimizedBitmask(sampler, src));
}

template <UniformSource S>
void optimizedUniformCrossover(BitVector& v1, BitVector& v2, double pu, S& src) {
  checkProbability(pu, "optimizedUniformCrossover: exchange probability must lie in [0, 1]");
  optimizedUniformCrossover(v1, v2, BinomialSampler(static_cast<std::int64_t>(v1.length()), pu), src);
}

/// Cross point c uniform in [1, n-1]; positions >= c are exchanged.
template <UniformSource S>
void singlePointCrossover(BitVector& v1, BitVector& v2, S& src) {
  require(v1.length() == v2.length(), "singlePointCrossover: parents must have equal length");
  const std::size_t n = v1.length();
  require(n >= 2, "singlePointCrossover: length must be at least 2");
  const std::size_t c = src.nextInt(static_cast<std::uint32_t>(n - 1)) + 1;
  v1.swapRange(v2, c, n);
}

/// Exchanges the inclusive segment between two distinct sampled positions.
template <UniformSource S>
void twoPointCrossover(BitVector& v1, BitVector& v2, S& src) {
  require(v1.length() == v2.length(), "twoPointCrossover: parents must have equal length");
  const std::size_t n = v1.length();
  require(n >= 2, "twoPointCrossover: length must be at least 2");
  const auto [i, j] = samplePair(n, src);
  v1.swapRange(v2, std::min(i, j), std::max(i, j) + 1);
}

}  // namespace bitga
