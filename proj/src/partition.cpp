#include "dsim/partition.hpp"

#include <string>

#include "dsim/errors.hpp"
#include "dsim/union_find.hpp"

namespace dsim {

Partition Partition::discrete(int size) {
  Partition p;
  p.block_of_.resize(size);
  for (int i = 0; i < size; ++i) {
    p.block_of_[i] = i;
  }
  p.n_blocks_ = size;
  return p;
}

Partition Partition::single_block(int size) {
  Partition p;
  p.block_of_.assign(size, 0);
  p.n_blocks_ = size > 0 ? 1 : 0;
  return p;
}

Partition Partition::from_blocks(int size,
                                 std::vector<std::vector<int>> const& blocks) {
  std::vector<int> ids(size, -1);
  int next = 0;
  for (auto const& block : blocks) {
    for (int p : block) {
      if (p < 0 || p >= size) {
        throw OutOfRangeError("point " + std::to_string(p) +
                              " outside ground set of size " +
                              std::to_string(size));
      }
      if (ids[p] != -1) {
        throw OverlapOrGapError("point " + std::to_string(p) +
                                " occurs in two blocks");
      }
      ids[p] = next;
    }
    ++next;
  }
  for (int p = 0; p < size; ++p) {
    if (ids[p] == -1) {
      throw OverlapOrGapError("point " + std::to_string(p) +
                              " not covered by any block");
    }
  }
  return from_block_ids(ids);
}

Partition Partition::from_block_ids(std::vector<int> const& ids) {
  Partition p;
  p.block_of_.resize(ids.size());
  std::vector<int> relabel;
  for (std::size_t i = 0; i < ids.size(); ++i) {
    int id = ids[i];
    int found = -1;
    for (std::size_t k = 0; k < relabel.size(); ++k) {
      if (relabel[k] == id) {
        found = static_cast<int>(k);
        break;
      }
    }
    if (found == -1) {
      found = static_cast<int>(relabel.size());
      relabel.push_back(id);
    }
    p.block_of_[i] = found;
  }
  p.n_blocks_ = static_cast<int>(relabel.size());
  return p;
}

std::vector<std::vector<int>> Partition::blocks() const {
  std::vector<std::vector<int>> out(n_blocks_);
  for (int p = 0; p < size(); ++p) {
    out[block_of_[p]].push_back(p);
  }
  return out;
}

Partition join(Partition const& p, Partition const& q) {
  if (p.size() != q.size()) {
    throw SizeMismatchError("join of partitions of sizes " +
                            std::to_string(p.size()) + " and " +
                            std::to_string(q.size()));
  }
  int n = p.size();
  UnionFind uf(n);
  std::vector<int> first_p(p.n_blocks(), -1);
  std::vector<int> first_q(q.n_blocks(), -1);
  for (int i = 0; i < n; ++i) {
    int bp = p.block_of(i);
    if (first_p[bp] == -1) {
      first_p[bp] = i;
    } else {
      uf.unite(first_p[bp], i);
    }
    int bq = q.block_of(i);
    if (first_q[bq] == -1) {
      first_q[bq] = i;
    } else {
      uf.unite(first_q[bq], i);
    }
  }
  std::vector<int> ids(n);
  for (int i = 0; i < n; ++i) {
    ids[i] = uf.find(i);
  }
  return Partition::from_block_ids(ids);
}

PartitionEnumerator::PartitionEnumerator(int size)
    : rgs_(size, 0), prefix_max_(size, 0) {}

bool PartitionEnumerator::advance() {
  int size = static_cast<int>(rgs_.size());
  int i = size - 1;
  while (i >= 1 && rgs_[i] > prefix_max_[i - 1]) {
    --i;
  }
  if (i < 1) {
    return false;
  }
  ++rgs_[i];
  prefix_max_[i] = std::max(prefix_max_[i - 1], rgs_[i]);
  for (int j = i + 1; j < size; ++j) {
    rgs_[j] = 0;
    prefix_max_[j] = prefix_max_[i];
  }
  return true;
}

bool PartitionEnumerator::next(Partition& out) {
  if (done_) {
    return false;
  }
  if (started_ && !advance()) {
    done_ = true;
    return false;
  }
  started_ = true;
  out = Partition::from_block_ids(rgs_);
  return true;
}

}  // namespace dsim
