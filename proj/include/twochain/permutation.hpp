#pragma once

#include <numeric>
#include <string>
#include <vector>

#include "twochain/errors.hpp"

namespace twochain {

/// A bijection of {0..m-1}, stored as its image list. Printed 1-indexed.
class Permutation {
public:
  Permutation() = default;

  explicit Permutation(std::vector<int> images) : img_(std::move(images)) {
    const int m = static_cast<int>(img_.size());
    std::vector<char> seen(m, 0);
    for (int v : img_) {
      if (v < 0 || v >= m || seen[v]) throw Error("permutation images are not a bijection");
      seen[v] = 1;
    }
  }

  static Permutation identity(int m) {
    std::vector<int> img(m);
    std::iota(img.begin(), img.end(), 0);
    return Permutation(std::move(img));
  }

  int size() const { return static_cast<int>(img_.size()); }
  int operator()(int i) const { return img_[i]; }
  const std::vector<int>& images() const { return img_; }

  Permutation inverse() const {
    std::vector<int> inv(img_.size());
    for (int i = 0; i < size(); ++i) inv[img_[i]] = i;
    return Permutation(std::move(inv));
  }

  bool is_identity() const {
    for (int i = 0; i < size(); ++i)
      if (img_[i] != i) return false;
    return true;
  }

  /// Order in the symmetric group: lcm of cycle lengths.
  long long multiplicative_order() const {
    std::vector<char> seen(img_.size(), 0);
    long long order = 1;
    for (int i = 0; i < size(); ++i) {
      if (seen[i]) continue;
      long long len = 0;
      for (int j = i; !seen[j]; j = img_[j]) {
        seen[j] = 1;
        ++len;
      }
      order = std::lcm(order, len);
    }
    return order;
  }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation& a, const Permutation& b) { return a.img_ <=> b.img_; }

private:
  std::vector<int> img_;
};

/// (u * v)(x) = u(v(x)).
inline Permutation compose(const Permutation& u, const Permutation& v) {
  std::vector<int> img(v.size());
  for (int i = 0; i < v.size(); ++i) img[i] = u(v(i));
  return Permutation(std::move(img));
}

/// Number of inversions; equals the Coxeter length.
inline long long inversion_length(const Permutation& w) {
  long long count = 0;
  for (int i = 0; i < w.size(); ++i)
    for (int j = i + 1; j < w.size(); ++j)
      if (w(i) > w(j)) ++count;
  return count;
}

/// One-line notation, 1-indexed: "[2,3,4,1]".
inline std::string format_permutation(const Permutation& w) {
  std::string out = "[";
  for (int i = 0; i < w.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(w(i) + 1);
  }
  out += ']';
  return out;
}

}  // namespace twochain
