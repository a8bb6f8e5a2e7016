#include "dsim/block_bijection.hpp"

#include <string>

#include "dsim/errors.hpp"
#include "dsim/union_find.hpp"

namespace dsim {

BlockBijection::BlockBijection(int degree, Partition diagram)
    : degree_(degree), diagram_(std::move(diagram)) {
  if (diagram_.size() != 2 * degree_) {
    throw SizeMismatchError("diagram on " + std::to_string(diagram_.size()) +
                            " points cannot have degree " +
                            std::to_string(degree_));
  }
  std::vector<char> meets_top(diagram_.n_blocks(), 0);
  std::vector<char> meets_bottom(diagram_.n_blocks(), 0);
  for (int p = 0; p < degree_; ++p) {
    meets_top[diagram_.block_of(p)] = 1;
    meets_bottom[diagram_.block_of(degree_ + p)] = 1;
  }
  for (int b = 0; b < diagram_.n_blocks(); ++b) {
    if (!meets_top[b] || !meets_bottom[b]) {
      throw NotBiequivalenceError("block " + std::to_string(b + 1) +
                                  " lies in a single row");
    }
  }
}

BlockBijection BlockBijection::identity(int degree) {
  std::vector<int> ids(2 * degree);
  for (int i = 0; i < degree; ++i) {
    ids[i] = i;
    ids[degree + i] = i;
  }
  return BlockBijection(degree, Partition::from_block_ids(ids));
}

BlockBijection BlockBijection::from_blocks(int degree,
                                           std::vector<Block> const& blocks) {
  std::vector<std::vector<int>> point_blocks;
  point_blocks.reserve(blocks.size());
  for (auto const& block : blocks) {
    std::vector<int> points;
    for (int i : block.top) {
      if (i < 1 || i > degree) {
        throw OutOfRangeError("top label " + std::to_string(i) +
                              " outside 1.." + std::to_string(degree));
      }
      points.push_back(i - 1);
    }
    for (int i : block.bottom) {
      if (i < 1 || i > degree) {
        throw OutOfRangeError("bottom label " + std::to_string(i) +
                              " outside 1.." + std::to_string(degree));
      }
      points.push_back(degree + i - 1);
    }
    point_blocks.push_back(std::move(points));
  }
  return BlockBijection(degree,
                        Partition::from_blocks(2 * degree, point_blocks));
}

BlockBijection BlockBijection::idempotent_of(Partition const& p) {
  int n = p.size();
  std::vector<int> ids(2 * n);
  for (int i = 0; i < n; ++i) {
    ids[i] = p.block_of(i);
    ids[n + i] = p.block_of(i);
  }
  return BlockBijection(n, Partition::from_block_ids(ids));
}

BlockBijection BlockBijection::unit_of(std::vector<int> const& perm) {
  int n = static_cast<int>(perm.size());
  std::vector<int> ids(2 * n, -1);
  for (int i = 0; i < n; ++i) {
    if (perm[i] < 0 || perm[i] >= n || ids[n + perm[i]] != -1) {
      throw OutOfRangeError("not a permutation of 0.." + std::to_string(n - 1));
    }
    ids[i] = i;
    ids[n + perm[i]] = i;
  }
  return BlockBijection(n, Partition::from_block_ids(ids));
}

Partition BlockBijection::domain() const {
  std::vector<int> ids(degree_);
  for (int i = 0; i < degree_; ++i) {
    ids[i] = diagram_.block_of(i);
  }
  return Partition::from_block_ids(ids);
}

Partition BlockBijection::range() const {
  std::vector<int> ids(degree_);
  for (int i = 0; i < degree_; ++i) {
    ids[i] = diagram_.block_of(degree_ + i);
  }
  return Partition::from_block_ids(ids);
}

BlockBijection BlockBijection::inverse() const {
  std::vector<int> ids(2 * degree_);
  for (int i = 0; i < degree_; ++i) {
    ids[i] = diagram_.block_of(degree_ + i);
    ids[degree_ + i] = diagram_.block_of(i);
  }
  return BlockBijection(degree_, Partition::from_block_ids(ids));
}

bool BlockBijection::is_uniform() const {
  std::vector<int> balance(diagram_.n_blocks(), 0);
  for (int i = 0; i < degree_; ++i) {
    ++balance[diagram_.block_of(i)];
    --balance[diagram_.block_of(degree_ + i)];
  }
  for (int b : balance) {
    if (b != 0) {
      return false;
    }
  }
  return true;
}

bool BlockBijection::is_unit() const {
  return diagram_.n_blocks() == degree_;
}

bool BlockBijection::is_idempotent() const {
  for (int i = 0; i < degree_; ++i) {
    if (diagram_.block_of(i) != diagram_.block_of(degree_ + i)) {
      return false;
    }
  }
  return true;
}

BlockBijection compose(BlockBijection const& a, BlockBijection const& b) {
  if (a.degree() != b.degree()) {
    throw SizeMismatchError("product of degrees " +
                            std::to_string(a.degree()) + " and " +
                            std::to_string(b.degree()));
  }
  int n = a.degree();
  // Rows: top 0..n-1, middle n..2n-1, bottom 2n..3n-1. a's points map to
  // rows top/middle as they are; b's points shift down one row.
  UnionFind uf(3 * n);
  std::vector<int> first_a(a.diagram().n_blocks(), -1);
  std::vector<int> first_b(b.diagram().n_blocks(), -1);
  for (int p = 0; p < 2 * n; ++p) {
    int ba = a.diagram().block_of(p);
    if (first_a[ba] == -1) {
      first_a[ba] = p;
    } else {
      uf.unite(first_a[ba], p);
    }
    int bb = b.diagram().block_of(p);
    if (first_b[bb] == -1) {
      first_b[bb] = p;
    } else {
      uf.unite(first_b[bb] + n, p + n);
    }
  }
  std::vector<int> ids(2 * n);
  for (int i = 0; i < n; ++i) {
    ids[i] = uf.find(i);
    ids[n + i] = uf.find(2 * n + i);
  }
  return BlockBijection(n, Partition::from_block_ids(ids));
}

BlockBijection gen_x(int n) {
  if (n < 3) {
    throw DegreeTooSmallError("gen_x needs degree >= 3, got " +
                              std::to_string(n));
  }
  std::vector<Block> blocks{{{1, 2}, {3}}, {{3}, {1, 2}}};
  for (int i = 4; i <= n; ++i) {
    blocks.push_back({{i}, {i}});
  }
  return BlockBijection::from_blocks(n, blocks);
}

BlockBijection gen_s(int n, int i) {
  if (i < 1 || i > n - 1) {
    throw IndexOutOfRangeError("gen_s index " + std::to_string(i) +
                               " outside 1.." + std::to_string(n - 1));
  }
  std::vector<int> perm(n);
  for (int k = 0; k < n; ++k) {
    perm[k] = k;
  }
  std::swap(perm[i - 1], perm[i]);
  return BlockBijection::unit_of(perm);
}

BlockBijection epsilon(int n) {
  if (n < 2) {
    throw DegreeTooSmallError("epsilon needs degree >= 2, got " +
                              std::to_string(n));
  }
  std::vector<std::vector<int>> blocks{{0, 1}};
  for (int i = 2; i < n; ++i) {
    blocks.push_back({i});
  }
  return BlockBijection::idempotent_of(Partition::from_blocks(n, blocks));
}

BlockBijection upsilon(BlockBijection const& b) {
  int n = b.degree();
  BlockBijection e = epsilon(n);
  if (compose(compose(e, b), e) != b) {
    throw NotInLocalSubmonoidError(
        "upsilon applies only to elements fixed by the corner idempotent");
  }
  int m = n - 1;
  std::vector<int> ids(2 * m);
  for (int i = 0; i < m; ++i) {
    ids[i] = b.diagram().block_of(i == 0 ? 0 : i + 1);
    ids[m + i] = b.diagram().block_of(i == 0 ? n : n + i + 1);
  }
  return BlockBijection(m, Partition::from_block_ids(ids));
}

BlockBijection conjugate(BlockBijection const& a, BlockBijection const& g) {
  if (!g.is_unit()) {
    throw NotAUnitError("conjugation requires a unit");
  }
  return compose(compose(g.inverse(), a), g);
}

}  // namespace dsim
