#pragma once

// Binary sequences and the poset built on the n+2 single-symbol
// insertions of a word, ordered by position-and-matching-permutation
// agreement. This construction realizes every 2-chain, and its canonical
// form gives constant-time 2-chain isomorphism.

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "twochain/permutation.hpp"
#include "twochain/poset.hpp"
#include "twochain/two_chain.hpp"

namespace twochain {

/// A finite word over {0,1}. Ordered lexicographically with '0' < '1'.
class BinarySeq {
public:
  BinarySeq() = default;

  explicit BinarySeq(std::string bits) : bits_(std::move(bits)) {
    for (char c : bits_)
      if (c != '0' && c != '1') throw ParseError("binary sequence may contain only '0' and '1'");
  }

  int size() const { return static_cast<int>(bits_.size()); }
  bool empty() const { return bits_.empty(); }

  /// Symbol at 0-based position, as 0 or 1.
  int bit(int i) const { return bits_[i] - '0'; }

  const std::string& str() const { return bits_; }

  friend bool operator==(const BinarySeq&, const BinarySeq&) = default;
  friend auto operator<=>(const BinarySeq& a, const BinarySeq& b) { return a.bits_ <=> b.bits_; }

private:
  std::string bits_;
};

inline BinarySeq complement(const BinarySeq& a) {
  std::string s = a.str();
  for (char& c : s) c = (c == '0') ? '1' : '0';
  return BinarySeq(std::move(s));
}

inline BinarySeq reverse(const BinarySeq& a) {
  std::string s = a.str();
  std::ranges::reverse(s);
  return BinarySeq(std::move(s));
}

/// Each word exceeds the other in some coordinate. Encodes incomparability
/// of the corresponding subsets in the containment order.
inline bool opposed(const BinarySeq& b, const BinarySeq& c) {
  if (b.size() != c.size()) throw LengthMismatchError("opposed: sequences differ in length");
  bool gt = false, lt = false;
  for (int i = 0; i < b.size(); ++i) {
    if (b.bit(i) > c.bit(i)) gt = true;
    if (b.bit(i) < c.bit(i)) lt = true;
  }
  return gt && lt;
}

/// The n+2 sequences a(0),...,a(n+1): a(0) prepends 1, a(n+1) appends 0,
/// and a(i) for 1 <= i <= n replaces the suffix starting at position i
/// with 0 1 a_{i+1} ... a_n.
inline std::vector<BinarySeq> lower_insertions(const BinarySeq& a) {
  const int n = a.size();
  const std::string& s = a.str();
  std::vector<BinarySeq> out;
  out.reserve(n + 2);
  out.emplace_back("1" + s);
  for (int i = 1; i <= n; ++i) out.emplace_back(s.substr(0, i - 1) + "01" + s.substr(i));
  out.emplace_back(s + "0");
  return out;
}

/// The mirrored list a[0],...,a[n+1], with the roles of 0 and 1 swapped.
/// As a set it equals lower_insertions(a).
inline std::vector<BinarySeq> upper_insertions(const BinarySeq& a) {
  const int n = a.size();
  const std::string& s = a.str();
  std::vector<BinarySeq> out;
  out.reserve(n + 2);
  out.emplace_back("0" + s);
  for (int i = 1; i <= n; ++i) out.emplace_back(s.substr(0, i - 1) + "10" + s.substr(i));
  out.emplace_back(s + "1");
  return out;
}

/// The permutation w with a(i) = a[w(i)], by the closed-form rule:
/// reading a_0 = 0 and a_{n+1} = 1,
///   if a_i = 0, w(i) is the smallest k > i with k = n+1 or a_k = 0;
///   if a_i = 1, w(i) is the largest  k < i with k = 0   or a_k = 1.
inline Permutation w_of(const BinarySeq& a) {
  const int n = a.size();
  auto at = [&](int i) { return i == 0 ? 0 : (i == n + 1 ? 1 : a.bit(i - 1)); };
  std::vector<int> img(n + 2);
  for (int i = 0; i <= n + 1; ++i) {
    if (at(i) == 0) {
      int k = i + 1;
      while (k != n + 1 && at(k) != 0) ++k;
      img[i] = k;
    } else {
      int k = i - 1;
      while (k != 0 && at(k) != 1) --k;
      img[i] = k;
    }
  }
  return Permutation(std::move(img));
}

/// A 2-chain presented on sequence labels: the base word, its n+2
/// insertion sequences in index order, the order on indices, and the
/// matching permutation.
struct LabelledTwoChain {
  BinarySeq base;
  std::vector<BinarySeq> elements;  // a(0..n+1)
  Poset order;                      // on indices 0..n+1
  Permutation w;                    // a(i) = a[w(i)]
};

/// Builds the order two ways -- the intersection of the two index orders,
/// and the opposedness rule -- and insists they agree.
inline LabelledTwoChain seq_poset(const BinarySeq& a) {
  const int m = a.size() + 2;
  auto els = lower_insertions(a);
  auto uppers = upper_insertions(a);
  auto w = w_of(a);
  for (int i = 0; i < m; ++i)
    if (els[i] != uppers[w(i)])
      throw InternalInconsistencyError("matching permutation does not satisfy a(i) = a[w(i)]");
  std::vector<char> lt(static_cast<std::size_t>(m) * m, 0);
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      if (w(i) < w(j)) lt[static_cast<std::size_t>(i) * m + j] = 1;
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      if (opposed(els[i], els[j]) != (lt[static_cast<std::size_t>(i) * m + j] != 0))
        throw InternalInconsistencyError("opposedness order disagrees with the two-total-orders rule");
    }
  return {a, std::move(els), Poset::from_matrix(m, std::move(lt)), std::move(w)};
}

namespace detail {

struct SeqBuild {
  std::string seq;
  int e0, e1;  // elements corresponding to appending 0 resp. 1
};

inline SeqBuild build_sequence(const Poset& p, std::vector<int> alive) {
  if (alive.size() == 2) return {"", alive[0], alive[1]};
  // maximal elements within the induced subposet
  std::vector<int> maxes;
  for (int x : alive) {
    bool maximal = true;
    for (int y : alive)
      if (p.less(x, y)) maximal = false;
    if (maximal) maxes.push_back(x);
  }
  if (maxes.size() != 2) throw InternalInconsistencyError("2-chain does not have two maximal elements");
  auto above_all_others = [&](int m) {
    for (int x : alive)
      if (x != m && x != maxes[0] && x != maxes[1] && !p.less(x, m)) return false;
    return true;
  };
  int super = -1;
  for (int m : maxes)
    if (above_all_others(m)) {
      if (super >= 0) throw InternalInconsistencyError("two supermaximal elements in a 2-chain");
      super = m;
    }
  if (super < 0) throw InternalInconsistencyError("no supermaximal element in a 2-chain");
  const int other = (maxes[0] == super) ? maxes[1] : maxes[0];

  std::vector<int> rest;
  for (int x : alive)
    if (x != super) rest.push_back(x);
  SeqBuild sub = build_sequence(p, std::move(rest));
  if (other == sub.e1) return {sub.seq + "1", super, other};
  if (other == sub.e0) return {sub.seq + "0", other, super};
  throw InternalInconsistencyError("surviving maximal element lost during reduction");
}

}  // namespace detail

/// The canonical sequence of a 2-chain: the word a with P isomorphic to the
/// insertion poset of a, normalized to min(a, complement(a)). Two 2-chains
/// are isomorphic iff their canonical sequences are equal.
inline BinarySeq canonical_sequence(const Poset& p) {
  if (!is_two_chain_fast(p)) throw NotTwoChainError("canonical_sequence requires a 2-chain");
  std::vector<int> alive(p.size());
  for (int i = 0; i < p.size(); ++i) alive[i] = i;
  BinarySeq a(detail::build_sequence(p, std::move(alive)).seq);
  BinarySeq c = complement(a);
  return std::min(a, c);
}

struct SelfDuality {
  bool self_dual = false;
  bool preserves_chains = false;  // rev a == a
  bool swaps_chains = false;      // rev a == complement(a)
};

inline SelfDuality is_self_dual(const BinarySeq& a) {
  SelfDuality d;
  const BinarySeq r = reverse(a);
  d.preserves_chains = (r == a);
  d.swaps_chains = (r == complement(a));
  d.self_dual = d.preserves_chains || d.swaps_chains;
  return d;
}

}  // namespace twochain
