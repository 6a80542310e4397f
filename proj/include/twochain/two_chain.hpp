#pragma once

// Recognizers for the 2-chain property and the supermaximal-element
// structure theory: removal, extension, and certificates.

#include <optional>
#include <vector>

#include "twochain/poset.hpp"

namespace twochain {

inline constexpr int kDefinitionCap = 12;

/// Maximal elements lying above every non-maximal element.
inline std::vector<int> supermaximal_elements(const Poset& p) {
  const auto maxes = maximal_elements(p);
  std::vector<char> is_max(p.size(), 0);
  for (int m : maxes) is_max[m] = 1;
  std::vector<int> out;
  for (int m : maxes) {
    bool super = true;
    for (int x = 0; x < p.size() && super; ++x)
      if (!is_max[x] && !p.less(x, m)) super = false;
    if (super) out.push_back(m);
  }
  return out;
}

inline std::vector<int> superminimal_elements(const Poset& p) {
  const auto mins = minimal_elements(p);
  std::vector<char> is_min(p.size(), 0);
  for (int m : mins) is_min[m] = 1;
  std::vector<int> out;
  for (int m : mins) {
    bool super = true;
    for (int x = 0; x < p.size() && super; ++x)
      if (!is_min[x] && !p.less(m, x)) super = false;
    if (super) out.push_back(m);
  }
  return out;
}

/// The unique supermaximal element of a poset with n >= 3; absent for
/// n <= 2 (where every maximal element qualifies vacuously) and whenever
/// the element is not unique.
inline std::optional<int> supermaximal_element(const Poset& p) {
  if (p.size() <= 2) return std::nullopt;
  const auto super = supermaximal_elements(p);
  if (super.size() == 1) return super[0];
  return std::nullopt;
}

/// Definitional recognizer: exactly one chain-pair decomposition, and every
/// minimal proper refinement has at least two. Degenerate sizes n < 2 are
/// not 2-chains (the smallest 2-chain is the 2-element antichain).
inline bool is_two_chain_by_definition(const Poset& p) {
  if (p.size() > kDefinitionCap)
    throw SizeError("is_two_chain_by_definition: n > " + std::to_string(kDefinitionCap));
  if (p.size() < 2) return false;
  if (count_chain_pair_decompositions(p, 2) != 1) return false;
  for (const auto& r : minimal_proper_refinements(p))
    if (count_chain_pair_decompositions(r, 2) < 2) return false;
  return true;
}

/// Production recognizer: the incomparability graph is a tree. No size cap.
inline bool is_two_chain_fast(const Poset& p) {
  const int n = p.size();
  if (n < 2) return false;
  // edge count must be n-1
  if (incomparable_pair_count(p) != n - 1) return false;
  // connectivity of the incomparability graph, by union-find
  std::vector<int> parent(n);
  for (int i = 0; i < n; ++i) parent[i] = i;
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  int components = n;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (p.incomparable(i, j)) {
        const int a = find(i), b = find(j);
        if (a != b) {
          parent[a] = b;
          --components;
        }
      }
  return components == 1;
}

/// Ideal-count recognizer: exactly two m-element ideals for every
/// 1 <= m <= n-1.
inline bool has_two_ideals_each_size(const Poset& p) {
  if (p.size() < 2) return false;
  const auto counts = ideal_count_by_size(p);
  for (int m = 1; m < p.size(); ++m)
    if (counts[m] != 2) return false;
  return true;
}

/// Witness data for a verified 2-chain.
struct TwoChainCertificate {
  ChainPair decomposition;                // the unique one
  std::optional<int> supermaximal;        // absent when n <= 2
  std::optional<int> other_maximal;
};

/// Certificate for a 2-chain, or nullopt. The unique decomposition is read
/// off the bipartition of the incomparability tree, so there is no size cap.
inline std::optional<TwoChainCertificate> two_chain_certificate(const Poset& p) {
  if (!is_two_chain_fast(p)) return std::nullopt;
  const int n = p.size();
  // 2-colour the incomparability tree
  std::vector<int> colour(n, -1);
  std::vector<int> stack{0};
  colour[0] = 0;
  while (!stack.empty()) {
    const int x = stack.back();
    stack.pop_back();
    for (int y = 0; y < n; ++y)
      if (y != x && p.incomparable(x, y) && colour[y] < 0) {
        colour[y] = 1 - colour[x];
        stack.push_back(y);
      }
  }
  std::uint32_t side[2] = {0, 0};
  for (int i = 0; i < n; ++i) side[colour[i]] |= (1u << i);
  if (side[0] > side[1]) std::swap(side[0], side[1]);
  TwoChainCertificate cert;
  cert.decomposition = {detail::mask_to_elems(side[0]), detail::mask_to_elems(side[1])};
  if (n >= 3) {
    cert.supermaximal = supermaximal_element(p);
    for (int m : maximal_elements(p))
      if (m != cert.supermaximal) cert.other_maximal = m;
  }
  return cert;
}

/// Remove the unique supermaximal element of a 2-chain with n >= 3,
/// relabelling order-preservingly. The result is a 2-chain again.
inline Poset remove_supermaximal(const Poset& p) {
  if (p.size() < 3 || !is_two_chain_fast(p))
    throw NotTwoChainError("remove_supermaximal requires a 2-chain with n >= 3");
  const auto s = supermaximal_element(p);
  if (!s) throw NotTwoChainError("no unique supermaximal element");
  return remove_element(p, *s);
}

/// Add a new supermaximal element above everything except `keep`, which
/// must be maximal and stays maximal. Inverse of remove_supermaximal.
inline Poset extend_with_supermaximal(const Poset& p, int keep) {
  const int n = p.size();
  if (n < 2 || !is_two_chain_fast(p))
    throw NotTwoChainError("extend_with_supermaximal requires a 2-chain with n >= 2");
  bool keep_maximal = false;
  for (int m : maximal_elements(p))
    if (m == keep) keep_maximal = true;
  if (!keep_maximal) throw NotMaximalError("keep element is not maximal");
  std::vector<char> lt(static_cast<std::size_t>(n + 1) * (n + 1), 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (p.less(i, j)) lt[static_cast<std::size_t>(i) * (n + 1) + j] = 1;
  for (int i = 0; i < n; ++i)
    if (i != keep) lt[static_cast<std::size_t>(i) * (n + 1) + n] = 1;
  return Poset::from_matrix(n + 1, std::move(lt));
}

}  // namespace twochain
