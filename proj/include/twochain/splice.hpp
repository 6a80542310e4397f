#pragma once

// Splicing: gluing a poset with two maximal elements on top of one with
// two minimal elements, identifying super with super. Every 2-chain is a
// splice of the two-column posets Q(n) in exactly one way.

#include <algorithm>
#include <string>
#include <vector>

#include "twochain/binseq.hpp"
#include "twochain/two_chain.hpp"

namespace twochain {

/// The poset on {1..n} with i < j iff i <= j-2, stored 0-indexed.
inline Poset make_qn(int n) {
  if (n < 1) throw SizeError("make_qn: n must be positive");
  std::vector<char> lt(static_cast<std::size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i <= j - 2) lt[static_cast<std::size_t>(i) * n + j] = 1;
  return detail::poset_unchecked(n, std::move(lt));
}

/// The alternating word 1010... of the given length.
inline BinarySeq alternating_word(int len) {
  std::string s(len, '0');
  for (int i = 0; i < len; i += 2) s[i] = '1';
  return BinarySeq(std::move(s));
}

namespace detail {

struct TopPair {
  int super, other;
};

inline TopPair top_pair(const Poset& p) {
  if (p.size() == 2 && p.strict_pair_count() == 0) return {0, 1};
  const auto maxes = maximal_elements(p);
  const auto supers = supermaximal_elements(p);
  if (maxes.size() != 2 || supers.size() != 1)
    throw ShapeError("splice needs exactly two maximal elements, exactly one supermaximal");
  return {supers[0], maxes[0] == supers[0] ? maxes[1] : maxes[0]};
}

inline TopPair bottom_pair(const Poset& q) {
  if (q.size() == 2 && q.strict_pair_count() == 0) return {0, 1};
  const auto mins = minimal_elements(q);
  const auto supers = superminimal_elements(q);
  if (mins.size() != 2 || supers.size() != 1)
    throw ShapeError("splice needs exactly two minimal elements, exactly one superminimal");
  return {supers[0], mins[0] == supers[0] ? mins[1] : mins[0]};
}

}  // namespace detail

/// Places q above p, identifying p's supermaximal element with q's
/// superminimal one and the other maximal with the other minimal. Elements
/// of p keep their labels; the remaining elements of q get fresh labels in
/// increasing order. Splicing with the 2-element antichain is the identity.
inline Poset splice(const Poset& p, const Poset& q) {
  const auto [p0, p1] = detail::top_pair(p);
  const auto [q0, q1] = detail::bottom_pair(q);
  const int np = p.size(), nq = q.size(), n = np + nq - 2;
  std::vector<int> mu(nq, -1);
  mu[q0] = p0;
  mu[q1] = p1;
  int next = np;
  for (int v = 0; v < nq; ++v)
    if (mu[v] < 0) mu[v] = next++;
  std::vector<char> lt(static_cast<std::size_t>(n) * n, 0);
  for (int i = 0; i < np; ++i)
    for (int j = 0; j < np; ++j)
      if (p.less(i, j)) lt[static_cast<std::size_t>(i) * n + j] = 1;
  for (int u = 0; u < nq; ++u)
    for (int v = 0; v < nq; ++v)
      if (q.less(u, v)) lt[static_cast<std::size_t>(mu[u]) * n + mu[v]] = 1;
  for (int x = 0; x < np; ++x)
    for (int v = 0; v < nq; ++v) {
      if (mu[v] == x) continue;
      const bool via0 = p.leq(x, p0) && q.leq(q0, v);
      const bool via1 = p.leq(x, p1) && q.leq(q1, v);
      if (via0 || via1) lt[static_cast<std::size_t>(x) * n + mu[v]] = 1;
    }
  return Poset::from_matrix(n, std::move(lt));
}

/// Sequence-level splice: concatenation, complementing b first when its
/// first symbol differs from a's last.
inline BinarySeq splice_sequences(const BinarySeq& a, const BinarySeq& b) {
  if (a.empty()) return b;
  if (b.empty()) return a;
  const BinarySeq& tail = (a.bit(a.size() - 1) == b.bit(0)) ? b : complement(b);
  return BinarySeq(a.str() + tail.str());
}

/// The block sizes (n_1,...,n_s), each >= 3, of the unique expression of a
/// 2-chain as Q(n_1) spliced with ... with Q(n_s). Empty for the 2-element
/// antichain.
struct SpliceShape {
  std::vector<int> parts;

  int block_count() const { return static_cast<int>(parts.size()); }

  /// Size of the represented 2-chain: sum(parts) - 2s + 2.
  int poset_size() const {
    int sum = 0;
    for (int v : parts) sum += v;
    return sum - 2 * block_count() + 2;
  }

  friend bool operator==(const SpliceShape&, const SpliceShape&) = default;
};

inline void validate_shape(const SpliceShape& shape) {
  for (int v : shape.parts)
    if (v < 3) throw ShapeError("splice shape parts must be >= 3");
}

/// Rebuild the 2-chain from its shape.
inline Poset poset_from_shape(const SpliceShape& shape) {
  validate_shape(shape);
  if (shape.parts.empty()) return antichain_poset(2);
  Poset acc = make_qn(shape.parts[0]);
  for (std::size_t i = 1; i < shape.parts.size(); ++i) acc = splice(acc, make_qn(shape.parts[i]));
  return acc;
}

/// Shape of a 2-chain with n >= 3, read off the canonical sequence: each
/// maximal alternating run of length L contributes a block of size L + 2.
inline SpliceShape splice_decomposition(const Poset& p) {
  if (!is_two_chain_fast(p)) throw NotTwoChainError("splice_decomposition requires a 2-chain");
  if (p.size() < 3) throw SizeError("splice_decomposition requires n >= 3");
  const BinarySeq a = canonical_sequence(p);
  SpliceShape shape;
  int run = 1;
  for (int i = 1; i < a.size(); ++i) {
    if (a.bit(i) == a.bit(i - 1)) {
      shape.parts.push_back(run + 2);
      run = 1;
    } else {
      ++run;
    }
  }
  shape.parts.push_back(run + 2);
  return shape;
}

inline std::string format_shape(const SpliceShape& shape) {
  std::string out = "(";
  for (std::size_t i = 0; i < shape.parts.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(shape.parts[i]);
  }
  out += ')';
  return out;
}

}  // namespace twochain
