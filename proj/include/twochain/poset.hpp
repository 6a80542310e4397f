#pragma once

// Finite strict partial orders on {0..n-1}, together with the exhaustive
// desk-scale oracles (chain-pair decompositions, minimal refinements,
// linear-extension counting, isomorphism backtracking) that the rest of
// the library validates against.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "twochain/errors.hpp"

namespace twochain {

class Poset;

namespace detail {
/// Trusted constructor for algorithms that build relations which are valid
/// by construction (hot paths only; everything public validates).
inline Poset poset_unchecked(int n, std::vector<char> lt);
}  // namespace detail

/// A strict partial order on elements 0..n-1. Values are immutable after
/// construction; every public factory validates irreflexivity, antisymmetry
/// and transitivity.
class Poset {
public:
  Poset() = default;

  /// Relation given in full (already transitively closed).
  static Poset from_relation(int n, const std::vector<std::pair<int, int>>& strict_pairs) {
    std::vector<char> lt(static_cast<std::size_t>(n) * n, 0);
    for (auto [i, j] : strict_pairs) {
      check_index(n, i);
      check_index(n, j);
      if (i == j) throw CycleError("reflexive pair (" + std::to_string(i) + "," + std::to_string(i) + ")");
      lt[static_cast<std::size_t>(i) * n + j] = 1;
    }
    return from_matrix(n, std::move(lt));
  }

  /// Transitive closure of a cover list. Throws CycleError if the closure
  /// would violate antisymmetry, IndexError on out-of-range elements.
  static Poset from_covers(int n, const std::vector<std::pair<int, int>>& covers) {
    if (n < 0) throw IndexError("negative element count");
    std::vector<char> lt(static_cast<std::size_t>(n) * n, 0);
    for (auto [i, j] : covers) {
      check_index(n, i);
      check_index(n, j);
      if (i == j) throw CycleError("pair (" + std::to_string(i) + "," + std::to_string(i) + ") closes a cycle");
      lt[static_cast<std::size_t>(i) * n + j] = 1;
    }
    close_in_place(n, lt);
    for (int i = 0; i < n; ++i) {
      if (lt[static_cast<std::size_t>(i) * n + i])
        throw CycleError("cover list closes into a cycle through " + std::to_string(i));
    }
    Poset p;
    p.n_ = n;
    p.lt_ = std::move(lt);
    return p;
  }

  /// Full n*n strict-relation matrix; validated.
  static Poset from_matrix(int n, std::vector<char> lt) {
    if (n < 0) throw IndexError("negative element count");
    if (lt.size() != static_cast<std::size_t>(n) * n) throw IndexError("relation matrix has wrong size");
    for (int i = 0; i < n; ++i) {
      if (lt[static_cast<std::size_t>(i) * n + i]) throw CycleError("relation is not irreflexive");
      for (int j = 0; j < n; ++j) {
        if (i != j && lt[static_cast<std::size_t>(i) * n + j] && lt[static_cast<std::size_t>(j) * n + i])
          throw CycleError("relation is not antisymmetric");
      }
    }
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (lt[static_cast<std::size_t>(i) * n + j])
          for (int k = 0; k < n; ++k)
            if (lt[static_cast<std::size_t>(j) * n + k] && !lt[static_cast<std::size_t>(i) * n + k])
              throw Error("relation is not transitive");
    Poset p;
    p.n_ = n;
    p.lt_ = std::move(lt);
    return p;
  }

  int size() const { return n_; }

  /// Strict relation i < j.
  bool less(int i, int j) const { return lt_[static_cast<std::size_t>(i) * n_ + j] != 0; }
  bool leq(int i, int j) const { return i == j || less(i, j); }
  bool comparable(int i, int j) const { return i == j || less(i, j) || less(j, i); }
  bool incomparable(int i, int j) const { return !comparable(i, j); }

  /// All strict pairs (i,j) with i < j in the order, sorted lexicographically.
  std::vector<std::pair<int, int>> strict_pairs() const {
    std::vector<std::pair<int, int>> out;
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j)
        if (less(i, j)) out.emplace_back(i, j);
    return out;
  }

  std::size_t strict_pair_count() const {
    std::size_t c = 0;
    for (char b : lt_) c += (b != 0);
    return c;
  }

  friend bool operator==(const Poset& a, const Poset& b) { return a.n_ == b.n_ && a.lt_ == b.lt_; }

private:
  static void check_index(int n, int i) {
    if (i < 0 || i >= n) throw IndexError("element " + std::to_string(i) + " out of range [0," + std::to_string(n) + ")");
  }

  static void close_in_place(int n, std::vector<char>& lt) {
    for (int k = 0; k < n; ++k)
      for (int i = 0; i < n; ++i)
        if (lt[static_cast<std::size_t>(i) * n + k])
          for (int j = 0; j < n; ++j)
            if (lt[static_cast<std::size_t>(k) * n + j]) lt[static_cast<std::size_t>(i) * n + j] = 1;
  }

  int n_ = 0;
  std::vector<char> lt_;

  friend Poset detail::poset_unchecked(int, std::vector<char>);
};

namespace detail {
inline Poset poset_unchecked(int n, std::vector<char> lt) {
  Poset p;
  p.n_ = n;
  p.lt_ = std::move(lt);
  return p;
}
}  // namespace detail

inline Poset poset_from_covers(int n, const std::vector<std::pair<int, int>>& covers) {
  return Poset::from_covers(n, covers);
}

inline constexpr int kSubsetAlgoCap = 20;  // bitmask-exhaustive algorithms
inline constexpr int kIsoCap = 10;         // generic isomorphism backtracker

// ---------------------------------------------------------------------------
// basic queries

/// Cover pairs (p,q): p < q with no r strictly between; sorted.
inline std::vector<std::pair<int, int>> covers(const Poset& p) {
  const int n = p.size();
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (!p.less(i, j)) continue;
      bool is_cover = true;
      for (int r = 0; r < n && is_cover; ++r)
        if (p.less(i, r) && p.less(r, j)) is_cover = false;
      if (is_cover) out.emplace_back(i, j);
    }
  return out;
}

inline std::vector<int> maximal_elements(const Poset& p) {
  std::vector<int> out;
  for (int i = 0; i < p.size(); ++i) {
    bool maximal = true;
    for (int j = 0; j < p.size() && maximal; ++j)
      if (p.less(i, j)) maximal = false;
    if (maximal) out.push_back(i);
  }
  return out;
}

inline std::vector<int> minimal_elements(const Poset& p) {
  std::vector<int> out;
  for (int i = 0; i < p.size(); ++i) {
    bool minimal = true;
    for (int j = 0; j < p.size() && minimal; ++j)
      if (p.less(j, i)) minimal = false;
    if (minimal) out.push_back(i);
  }
  return out;
}

inline Poset dual(const Poset& p) {
  const int n = p.size();
  std::vector<char> lt(static_cast<std::size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (p.less(j, i)) lt[static_cast<std::size_t>(i) * n + j] = 1;
  return detail::poset_unchecked(n, std::move(lt));
}

/// Ordered comparable pairs (p,q) with p <= q, reflexive pairs included.
inline long long comparable_pair_count(const Poset& p) {
  return static_cast<long long>(p.size()) + static_cast<long long>(p.strict_pair_count());
}

/// Unordered incomparable pairs {p,q}, p != q.
inline long long incomparable_pair_count(const Poset& p) {
  const long long n = p.size();
  return n * (n - 1) / 2 - static_cast<long long>(p.strict_pair_count());
}

// ---------------------------------------------------------------------------
// small constructions

inline Poset chain_poset(int n) {
  std::vector<std::pair<int, int>> cov;
  for (int i = 0; i + 1 < n; ++i) cov.emplace_back(i, i + 1);
  return Poset::from_covers(n, cov);
}

inline Poset antichain_poset(int n) { return Poset::from_covers(n, {}); }

/// Ordinal sum: everything in `low` below everything in `high`.
inline Poset ordinal_sum(const Poset& low, const Poset& high) {
  const int a = low.size(), b = high.size(), n = a + b;
  std::vector<char> lt(static_cast<std::size_t>(n) * n, 0);
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < a; ++j)
      if (low.less(i, j)) lt[static_cast<std::size_t>(i) * n + j] = 1;
  for (int i = 0; i < b; ++i)
    for (int j = 0; j < b; ++j)
      if (high.less(i, j)) lt[static_cast<std::size_t>(a + i) * n + (a + j)] = 1;
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < b; ++j) lt[static_cast<std::size_t>(i) * n + (a + j)] = 1;
  return detail::poset_unchecked(n, std::move(lt));
}

/// Induced subposet on the given elements, relabelled 0..k-1 in list order.
inline Poset induced_subposet(const Poset& p, const std::vector<int>& elems) {
  const int k = static_cast<int>(elems.size());
  std::vector<char> lt(static_cast<std::size_t>(k) * k, 0);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      if (p.less(elems[i], elems[j])) lt[static_cast<std::size_t>(i) * k + j] = 1;
  return detail::poset_unchecked(k, std::move(lt));
}

/// Remove one element, relabelling the rest order-preservingly.
inline Poset remove_element(const Poset& p, int x) {
  std::vector<int> keep;
  for (int i = 0; i < p.size(); ++i)
    if (i != x) keep.push_back(i);
  return induced_subposet(p, keep);
}

// ---------------------------------------------------------------------------
// chain-pair decompositions

/// An unordered pair of chains whose union is the whole poset. The two
/// subsets may overlap and may be empty; `first` is the side with the
/// numerically smaller bitmask.
struct ChainPair {
  std::vector<int> first;
  std::vector<int> second;

  friend bool operator==(const ChainPair&, const ChainPair&) = default;
};

namespace detail {

inline std::vector<std::uint32_t> comparability_masks(const Poset& p) {
  const int n = p.size();
  std::vector<std::uint32_t> comp(n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && p.comparable(i, j)) comp[i] |= (1u << j);
  return comp;
}

/// chain[m] == 1 iff the subset m is a chain.
inline std::vector<char> chain_table(const Poset& p) {
  const int n = p.size();
  const auto comp = comparability_masks(p);
  std::vector<char> chain(std::size_t{1} << n, 0);
  chain[0] = 1;
  for (std::uint32_t m = 1; m < (1u << n); ++m) {
    const int i = std::countr_zero(m);
    const std::uint32_t rest = m & (m - 1);
    chain[m] = chain[rest] && ((rest & ~comp[i]) == 0);
  }
  return chain;
}

inline std::vector<int> mask_to_elems(std::uint32_t m) {
  std::vector<int> v;
  while (m) {
    v.push_back(std::countr_zero(m));
    m &= m - 1;
  }
  return v;
}

template <class F>
void for_each_chain_pair_mask(const Poset& p, F&& fn) {
  const int n = p.size();
  const auto chain = chain_table(p);
  const std::uint32_t full = (n == 32) ? ~0u : ((1u << n) - 1);
  for (std::uint32_t b = 0;; ++b) {
    if (chain[b]) {
      const std::uint32_t u = full & ~b;
      // c must contain the complement of b; the rest is any subset of b
      std::uint32_t s = b;
      while (true) {
        const std::uint32_t c = u | s;
        if (chain[c] && b <= c) {
          if (!fn(b, c)) return;
        }
        if (s == 0) break;
        s = (s - 1) & b;
      }
    }
    if (b == full) break;
  }
}

}  // namespace detail

/// All unordered pairs of chains {B,C} with B union C = P, in deterministic
/// (bitmask-lexicographic) order. Output size can be exponential for orders
/// that are far from 2-chains.
inline std::vector<ChainPair> chain_pair_decompositions(const Poset& p) {
  if (p.size() > kSubsetAlgoCap)
    throw SizeError("chain_pair_decompositions: n > " + std::to_string(kSubsetAlgoCap));
  std::set<std::pair<std::uint32_t, std::uint32_t>> seen;
  detail::for_each_chain_pair_mask(p, [&](std::uint32_t b, std::uint32_t c) {
    seen.emplace(b, c);
    return true;
  });
  std::vector<ChainPair> out;
  out.reserve(seen.size());
  for (auto [b, c] : seen) out.push_back({detail::mask_to_elems(b), detail::mask_to_elems(c)});
  return out;
}

/// Number of distinct chain-pair decompositions, stopping early once
/// `limit` have been found.
inline int count_chain_pair_decompositions(const Poset& p, int limit) {
  if (p.size() > kSubsetAlgoCap)
    throw SizeError("count_chain_pair_decompositions: n > " + std::to_string(kSubsetAlgoCap));
  std::set<std::pair<std::uint32_t, std::uint32_t>> seen;
  detail::for_each_chain_pair_mask(p, [&](std::uint32_t b, std::uint32_t c) {
    seen.emplace(b, c);
    return static_cast<int>(seen.size()) < limit;
  });
  return static_cast<int>(seen.size());
}

// ---------------------------------------------------------------------------
// refinements

/// For each ordered incomparable pair (p,q), the transitive closure of the
/// relation with (p,q) added. Every proper refinement of the order contains
/// one of these. Empty for a total order.
inline std::vector<Poset> minimal_proper_refinements(const Poset& p) {
  const int n = p.size();
  std::vector<Poset> out;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (a == b || !p.incomparable(a, b)) continue;
      std::vector<char> lt(static_cast<std::size_t>(n) * n, 0);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          if (p.less(i, j)) lt[static_cast<std::size_t>(i) * n + j] = 1;
      // closure of lt + (a,b): down*(a) x up*(b)
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          if (p.leq(i, a) && p.leq(b, j)) lt[static_cast<std::size_t>(i) * n + j] = 1;
      out.push_back(Poset::from_matrix(n, std::move(lt)));
    }
  return out;
}

// ---------------------------------------------------------------------------
// linear extensions (DP over the lattice of ideals)

inline std::uint64_t count_linear_extensions(const Poset& p) {
  const int n = p.size();
  if (n > kSubsetAlgoCap) throw SizeError("count_linear_extensions: n > " + std::to_string(kSubsetAlgoCap));
  if (n == 0) return 1;
  std::vector<std::uint32_t> down(n, 0), up(n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (p.less(i, j)) {
        down[j] |= (1u << i);
        up[i] |= (1u << j);
      }
  const std::uint32_t full = (1u << n) - 1;
  std::vector<std::uint64_t> dp(std::size_t{1} << n, 0);
  dp[0] = 1;
  for (std::uint32_t m = 1; m <= full; ++m) {
    bool ideal = true;
    for (std::uint32_t t = m; t; t &= t - 1) {
      const int j = std::countr_zero(t);
      if (down[j] & ~m) {
        ideal = false;
        break;
      }
    }
    if (!ideal) continue;
    std::uint64_t total = 0;
    for (std::uint32_t t = m; t; t &= t - 1) {
      const int j = std::countr_zero(t);
      if ((up[j] & m) == 0) total += dp[m ^ (1u << j)];
    }
    dp[m] = total;
  }
  return dp[full];
}

// ---------------------------------------------------------------------------
// ideals

/// All down-closed subsets of the given size, as sorted element lists, in
/// ascending bitmask order.
inline std::vector<std::vector<int>> ideals_of_size(const Poset& p, int m) {
  const int n = p.size();
  if (m < 0 || m > n) throw IndexError("ideals_of_size: size out of range");
  std::vector<std::uint32_t> down(n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (p.less(i, j)) down[j] |= (1u << i);
  std::vector<std::vector<int>> out;
  const std::uint32_t full = (n == 0) ? 0 : ((1u << n) - 1);
  for (std::uint32_t mask = 0;; ++mask) {
    if (std::popcount(mask) == m) {
      bool ideal = true;
      for (std::uint32_t t = mask; t; t &= t - 1) {
        if (down[std::countr_zero(t)] & ~mask) {
          ideal = false;
          break;
        }
      }
      if (ideal) out.push_back(detail::mask_to_elems(mask));
    }
    if (mask == full) break;
  }
  return out;
}

/// Ideal counts by size, in one subset sweep.
inline std::vector<long long> ideal_count_by_size(const Poset& p) {
  const int n = p.size();
  std::vector<std::uint32_t> down(n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (p.less(i, j)) down[j] |= (1u << i);
  std::vector<long long> out(n + 1, 0);
  const std::uint32_t full = (n == 0) ? 0 : ((1u << n) - 1);
  for (std::uint32_t mask = 0;; ++mask) {
    bool ideal = true;
    for (std::uint32_t t = mask; t; t &= t - 1) {
      if (down[std::countr_zero(t)] & ~mask) {
        ideal = false;
        break;
      }
    }
    if (ideal) ++out[std::popcount(mask)];
    if (mask == full) break;
  }
  return out;
}

// ---------------------------------------------------------------------------
// isomorphism (generic backtracking with vertex invariants)

namespace detail {

struct VertexInvariant {
  int indeg, outdeg, height, depth;
  friend auto operator<=>(const VertexInvariant&, const VertexInvariant&) = default;
};

inline std::vector<VertexInvariant> vertex_invariants(const Poset& p) {
  const int n = p.size();
  std::vector<VertexInvariant> inv(n);
  std::vector<int> height(n, 0), depth(n, 0);
  // longest chain strictly below / above; relation is transitive so a
  // simple fixpoint over pairs sorted by down-degree works
  for (int pass = 0; pass < n; ++pass)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (p.less(i, j)) {
          height[j] = std::max(height[j], height[i] + 1);
          depth[i] = std::max(depth[i], depth[j] + 1);
        }
  for (int i = 0; i < n; ++i) {
    int in = 0, out = 0;
    for (int j = 0; j < n; ++j) {
      if (p.less(j, i)) ++in;
      if (p.less(i, j)) ++out;
    }
    inv[i] = {in, out, height[i], depth[i]};
  }
  return inv;
}

/// Backtracks over invariant-respecting bijections; calls fn(map) for each
/// isomorphism found, stopping when fn returns false.
template <class F>
void for_each_isomorphism(const Poset& a, const Poset& b, F&& fn) {
  const int n = a.size();
  if (n != b.size()) return;
  const auto ia = vertex_invariants(a);
  const auto ib = vertex_invariants(b);
  {
    auto sa = ia, sb = ib;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return;
  }
  // order the elements of `a` by increasing candidate-class size
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::vector<int> class_size(n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (ib[j] == ia[i]) ++class_size[i];
  std::sort(order.begin(), order.end(), [&](int x, int y) {
    return std::pair(class_size[x], x) < std::pair(class_size[y], y);
  });
  std::vector<int> map(n, -1);
  std::vector<char> used(n, 0);
  bool stop = false;
  auto rec = [&](auto&& self, int pos) -> void {
    if (stop) return;
    if (pos == n) {
      if (!fn(map)) stop = true;
      return;
    }
    const int x = order[pos];
    for (int y = 0; y < n && !stop; ++y) {
      if (used[y] || !(ib[y] == ia[x])) continue;
      bool ok = true;
      for (int q = 0; q < pos && ok; ++q) {
        const int z = order[q];
        if (a.less(x, z) != b.less(y, map[z]) || a.less(z, x) != b.less(map[z], y)) ok = false;
      }
      if (!ok) continue;
      map[x] = y;
      used[y] = 1;
      self(self, pos + 1);
      used[y] = 0;
      map[x] = -1;
    }
  };
  rec(rec, 0);
}

}  // namespace detail

inline bool are_isomorphic(const Poset& a, const Poset& b) {
  if (std::max(a.size(), b.size()) > kIsoCap)
    throw SizeError("are_isomorphic: n > " + std::to_string(kIsoCap));
  if (a.size() != b.size()) return false;
  bool found = false;
  detail::for_each_isomorphism(a, b, [&](const std::vector<int>&) {
    found = true;
    return false;
  });
  return found;
}

inline std::optional<std::vector<int>> find_isomorphism(const Poset& a, const Poset& b) {
  if (std::max(a.size(), b.size()) > kIsoCap)
    throw SizeError("find_isomorphism: n > " + std::to_string(kIsoCap));
  std::optional<std::vector<int>> out;
  detail::for_each_isomorphism(a, b, [&](const std::vector<int>& m) {
    out = m;
    return false;
  });
  return out;
}

inline std::uint64_t count_automorphisms(const Poset& p) {
  if (p.size() > kIsoCap) throw SizeError("count_automorphisms: n > " + std::to_string(kIsoCap));
  std::uint64_t count = 0;
  detail::for_each_isomorphism(p, p, [&](const std::vector<int>&) {
    ++count;
    return true;
  });
  return count;
}

// ---------------------------------------------------------------------------
// exhaustive generation of all labelled posets

namespace detail {

/// DFS over canonical insertion sequences: each poset on {0..n-1} is built
/// exactly once by inserting elements so that the newest element is always
/// the largest-labelled maximal one.
template <class F>
struct PosetEnumerator {
  int n;
  F& fn;
  std::vector<char> rel;            // n*n strict relation among used labels
  std::vector<std::uint32_t> down;  // down-sets as label masks
  std::vector<std::uint32_t> up;
  std::uint32_t used = 0;

  explicit PosetEnumerator(int n_, F& fn_)
      : n(n_), fn(fn_), rel(static_cast<std::size_t>(n_) * n_, 0), down(n_, 0), up(n_, 0) {}

  void run() { rec(0); }

  void rec(int k) {
    if (k == n) {
      fn(poset_unchecked(n, rel));
      return;
    }
    for (int x = 0; x < n; ++x) {
      if (used & (1u << x)) continue;
      // maximal elements with label > x must go below x
      std::uint32_t required = 0;
      for (std::uint32_t t = used; t; t &= t - 1) {
        const int m = std::countr_zero(t);
        if (m > x && up[m] == 0) required |= (1u << m);
      }
      // enumerate ideals D of the current poset with required <= D
      std::uint32_t d = used;
      while (true) {
        if ((d & required) == required) {
          bool ideal = true;
          for (std::uint32_t t = d; t; t &= t - 1) {
            if (down[std::countr_zero(t)] & ~d) {
              ideal = false;
              break;
            }
          }
          if (ideal) insert(x, d, k);
        }
        if (d == 0) break;
        d = (d - 1) & used;
      }
    }
  }

  void insert(int x, std::uint32_t d, int k) {
    down[x] = d;
    up[x] = 0;
    used |= (1u << x);
    for (std::uint32_t t = d; t; t &= t - 1) {
      const int e = std::countr_zero(t);
      rel[static_cast<std::size_t>(e) * n + x] = 1;
      up[e] |= (1u << x);
    }
    rec(k + 1);
    for (std::uint32_t t = d; t; t &= t - 1) {
      const int e = std::countr_zero(t);
      rel[static_cast<std::size_t>(e) * n + x] = 0;
      up[e] &= ~(1u << x);
    }
    used &= ~(1u << x);
    down[x] = 0;
  }
};

}  // namespace detail

/// Calls fn(const Poset&) once for every labelled poset on {0..n-1}.
template <class F>
void for_each_poset(int n, F&& fn) {
  if (n < 0 || n > kSubsetAlgoCap) throw SizeError("for_each_poset: n out of range");
  detail::PosetEnumerator<F> e(n, fn);
  e.run();
}

}  // namespace twochain
