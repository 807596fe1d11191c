#pragma once

/// @file sampling.hpp
/// k distinct integers from {0, ..., n-1}, choosing among reservoir, pool and
/// insertion sampling so that only min(k, n-k) bounded integers are drawn.

#include <cstddef>
#include <cstdint>
#include <limits>
#include <numeric>
#include <utility>
#include <vector>

#include "bitga/rng.hpp"

namespace bitga {

/// Distinct values in [0, n). Order is unspecified.
using IndexSample = std::vector<std::size_t>;

namespace detail {

inline void checkSampleArgs(std::size_t n, std::size_t k) {
  require(k <= n, "sample: k must not exceed n");
  require(n <= std::numeric_limits<std::uint32_t>::max(), "sample: n must fit in 32 bits");
}

}  // namespace detail

/// Draws n - k bounded integers.
template <UniformSource S>
IndexSample reservoirSample(std::size_t n, std::size_t k, S& src) {
  detail::checkSampleArgs(n, k);
  IndexSample s(k);
  std::iota(s.begin(), s.end(), std::size_t{0});
  for (std::size_t i = k; i < n; ++i) {
    const std::size_t j = src.nextInt(static_cast<std::uint32_t>(i + 1));
    if (j < k) s[j] = i;
  }
  return s;
}

/// Draws k bounded integers; allocates a length-n scratch pool on every call.
template <UniformSource S>
IndexSample poolSample(std::size_t n, std::size_t k, S& src) {
  detail::checkSampleArgs(n, k);
  IndexSample s(k);
  std::vector<std::size_t> pool(n);
  std::iota(pool.begin(), pool.end(), std::size_t{0});
  std::size_t remaining = n;
  for (std::size_t i = 0; i < k; ++i) {
    const std::size_t j = src.nextInt(static_cast<std::uint32_t>(remaining));
    s[i] = pool[j];
    --remaining;
    pool[j] = pool[remaining];
  }
  return s;
}

/// Draws k bounded integers, O(k^2) time; the result is ascending.
template <UniformSource S>
IndexSample insertionSample(std::size_t n, std::size_t k, S& src) {
  detail::checkSampleArgs(n, k);
  IndexSample s(k);
  for (std::size_t i = 0; i < k; ++i) {
    std::size_t v = src.nextInt(static_cast<std::uint32_t>(n - i));
    std::size_t j = k - i;
    // s[k-i .. k-1] holds the sorted picks so far; slide v past the ones <= it.
    while (j < k && v >= s[j]) {
      ++v;
      s[j - 1] = s[j];
      ++j;
    }
    s[j - 1] = v;
  }
  return s;
}

/// Uniform k-subset of {0, ..., n-1}. Reservoir when 2k >= n, pool when
/// k*k >= n, insertion otherwise.
template <UniformSource S>
IndexSample sample(std::size_t n, std::size_t k, S& src) {
  detail::checkSampleArgs(n, k);
  if (2 * k >= n) return reservoirSample(n, k, src);
  if (k * k >= n) return poolSample(n, k, src);
  return insertionSample(n, k, src);
}

/// Two distinct values in [0, n) using exactly two bounded integers.
template <UniformSource S>
std::pair<std::size_t, std::size_t> samplePair(std::size_t n, S& src) {
  require(n >= 2, "samplePair: n must be at least 2");
  require(n <= std::numeric_limits<std::uint32_t>::max(), "samplePair: n must fit in 32 bits");
  const std::size_t i = src.nextInt(static_cast<std::uint32_t>(n));
  std::size_t j = src.nextInt(static_cast<std::uint32_t>(n - 1));
  if (j >= i) ++j;
  return {i, j};
}

}  // namespace bitga
