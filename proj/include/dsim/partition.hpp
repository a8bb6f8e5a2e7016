// Set partitions of {0, ..., size-1} in a canonical form, together with the
// join of equivalence relations and an enumerator of all partitions of a
// ground set.

#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <vector>

namespace dsim {

// A partition of the ground set {0, ..., size()-1}.
//
// The internal form is a restricted growth string: block_ids()[p] is the id
// of the block containing p, and ids are assigned in order of each block's
// first (hence minimum) point. This form is unique per partition, so
// equality and hashing are plain vector comparisons.
class Partition {
 public:
  // The unique partition of the empty set.
  Partition() = default;

  // One point per block.
  static Partition discrete(int size);

  // Every point in one block.
  static Partition single_block(int size);

  // Builds a partition from an explicit block list. Neither the order of
  // blocks nor the order of points within a block matters. Throws
  // OutOfRangeError for a point outside the ground set, OverlapOrGapError if
  // some point is covered twice or not at all.
  static Partition from_blocks(int size,
                               std::vector<std::vector<int>> const& blocks);

  // Builds a partition from an arbitrary block-id labelling of the points;
  // the labelling is renumbered into canonical form.
  static Partition from_block_ids(std::vector<int> const& ids);

  int size() const { return static_cast<int>(block_of_.size()); }
  int n_blocks() const { return n_blocks_; }
  int block_of(int p) const { return block_of_[p]; }
  std::vector<int> const& block_ids() const { return block_of_; }

  // Blocks sorted by minimum point, points ascending within each block.
  std::vector<std::vector<int>> blocks() const;

  bool operator==(Partition const&) const = default;

 private:
  int n_blocks_ = 0;
  std::vector<int> block_of_;
};

// The finest partition coarser than both p and q, i.e. the join of the two
// equivalence relations. Throws SizeMismatchError for distinct ground sets.
Partition join(Partition const& p, Partition const& q);

// Streams every partition of {0, ..., size-1} exactly once, in lexicographic
// order of the restricted growth strings. The total count is the Bell number
// of size; size 0 yields the single empty partition.
class PartitionEnumerator {
 public:
  explicit PartitionEnumerator(int size);

  // Writes the next partition into out and returns true, or returns false
  // once the stream is exhausted.
  bool next(Partition& out);

 private:
  bool started_ = false;
  bool done_ = false;
  std::vector<int> rgs_;
  std::vector<int> prefix_max_;

  bool advance();
};

// Calls f(rgs) once per restricted growth string of the given length, in
// lexicographic order. Each block-id vector passed to f is canonical as is.
template <typename F>
void for_each_rgs(int size, F&& f) {
  std::vector<int> rgs(size, 0);
  std::vector<int> prefix_max(size, 0);
  for (;;) {
    f(static_cast<std::vector<int> const&>(rgs));
    int i = size - 1;
    while (i >= 1 && rgs[i] > prefix_max[i - 1]) {
      --i;
    }
    if (i < 1) {
      return;
    }
    ++rgs[i];
    prefix_max[i] = std::max(prefix_max[i - 1], rgs[i]);
    for (int j = i + 1; j < size; ++j) {
      rgs[j] = 0;
      prefix_max[j] = prefix_max[i];
    }
  }
}

}  // namespace dsim

template <>
struct std::hash<dsim::Partition> {
  std::size_t operator()(dsim::Partition const& p) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (int id : p.block_ids()) {
      h ^= static_cast<std::size_t>(id) + 1;
      h *= 1099511628211ull;
    }
    return h;
  }
};
