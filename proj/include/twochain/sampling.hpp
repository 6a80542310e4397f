#pragma once

// Random poset generation for the statistical verification suites:
// a random DAG (edges oriented by label) with edge probability drawn from
// {0.1, ..., 0.5}, transitively closed.

#include <cstdint>
#include <random>
#include <vector>

#include "twochain/poset.hpp"

namespace twochain {

/// Fixed engine so that verification output is reproducible byte for byte.
using SampleRng = std::mt19937_64;

inline constexpr std::uint64_t kVerifySeed = 0x5eedc0de2c41u;

namespace detail {
// avoids std::uniform_* (implementation-defined sequences)
inline bool bernoulli_bits(SampleRng& rng, std::uint64_t num, std::uint64_t den) {
  return rng() % den < num;
}
}  // namespace detail

/// Random poset on n elements: pick p in {0.1,..,0.5}, add each edge i->j
/// (i < j) with probability p, close transitively.
inline Poset sample_poset(int n, SampleRng& rng) {
  const std::uint64_t tenths = 1 + rng() % 5;
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (detail::bernoulli_bits(rng, tenths, 10)) edges.emplace_back(i, j);
  return Poset::from_covers(n, edges);
}

}  // namespace twochain
