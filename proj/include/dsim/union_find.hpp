// Disjoint-set forest with path halving and union by size.

#pragma once

#include <numeric>
#include <utility>
#include <vector>

namespace dsim {

class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(n), size_(n, 1), n_sets_(n) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }

  int find(int a) {
    while (parent_[a] != a) {
      parent_[a] = parent_[parent_[a]];
      a = parent_[a];
    }
    return a;
  }

  // Returns true if a and b were in different sets before the call.
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) {
      return false;
    }
    if (size_[a] < size_[b]) {
      std::swap(a, b);
    }
    parent_[b] = a;
    size_[a] += size_[b];
    --n_sets_;
    return true;
  }

  int n_sets() const { return n_sets_; }

 private:
  std::vector<int> parent_;
  std::vector<int> size_;
  int n_sets_;
};

}  // namespace dsim
