#pragma once

// Enumeration of all 2-chains of a given size, one representative per
// isomorphism class, generated by the recursive supermaximal construction
// (two choices per step) and listed in canonical-sequence order.

#include <algorithm>
#include <vector>

#include "twochain/binseq.hpp"
#include "twochain/two_chain.hpp"

namespace twochain {

inline constexpr int kEnumerateCap = 16;

/// All 2-chains of size n up to isomorphism: 1 for n = 2, 2^(n-3) for
/// n >= 3, sorted by canonical sequence.
inline std::vector<Poset> enumerate_two_chains(int n) {
  if (n < 2 || n > kEnumerateCap)
    throw SizeError("enumerate_two_chains: n must lie in [2," + std::to_string(kEnumerateCap) + "]");
  std::vector<Poset> level = {antichain_poset(2)};
  if (n >= 3) {
    // the two extensions of the 2-element antichain are isomorphic (it has
    // the swap automorphism); from size 3 on, automorphism groups are
    // trivial and the two extensions are genuinely distinct
    level = {extend_with_supermaximal(level[0], 0)};
  }
  for (int k = 4; k <= n; ++k) {
    std::vector<Poset> next;
    next.reserve(level.size() * 2);
    for (const auto& p : level)
      for (int m : maximal_elements(p)) next.push_back(extend_with_supermaximal(p, m));
    level = std::move(next);
  }
  std::vector<std::pair<BinarySeq, Poset>> keyed;
  keyed.reserve(level.size());
  for (auto& p : level) keyed.emplace_back(canonical_sequence(p), std::move(p));
  std::sort(keyed.begin(), keyed.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<Poset> out;
  out.reserve(keyed.size());
  for (auto& [seq, p] : keyed) out.push_back(std::move(p));
  return out;
}

/// Canonical sequences of all 2-chains of size n, sorted.
inline std::vector<BinarySeq> enumerate_two_chain_sequences(int n) {
  std::vector<BinarySeq> out;
  for (const auto& p : enumerate_two_chains(n)) out.push_back(canonical_sequence(p));
  return out;
}

}  // namespace twochain
