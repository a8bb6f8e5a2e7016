// Block bijections: the elements of the dual symmetric inverse monoid.
//
// A block bijection of degree n is a partition of the 2n points
// {1,...,n} u {1',...,n'} in which every block meets both rows. Such a
// diagram is exactly a bijection between a quotient of the top row and a
// quotient of the bottom row. Multiplication stacks two diagrams, joins the
// equivalences along the shared middle row, and keeps the outer rows.
//
// Point encoding: top i is point i-1, bottom i' is point n+i-1 of a
// Partition on 2n points.

#pragma once

#include <cstddef>
#include <functional>
#include <utility>
#include <vector>

#include "dsim/partition.hpp"

namespace dsim {

// One block of a diagram, given by 1-based top labels and bottom labels.
struct Block {
  std::vector<int> top;
  std::vector<int> bottom;
};

class BlockBijection {
 public:
  BlockBijection() = default;  // degree 0

  // Wraps a partition of 2*degree points. Throws SizeMismatchError if the
  // partition has the wrong ground set and NotBiequivalenceError if some
  // block misses a row.
  BlockBijection(int degree, Partition diagram);

  static BlockBijection identity(int degree);

  // Builds a diagram from explicit blocks with 1-based labels, e.g. the
  // block {1, 2; 3'} is Block{{1, 2}, {3}}. Validation as in
  // Partition::from_blocks plus the both-rows condition.
  static BlockBijection from_blocks(int degree, std::vector<Block> const& blocks);

  // The idempotent whose blocks are B u B' for the blocks B of p.
  static BlockBijection idempotent_of(Partition const& p);

  // The unit mapping i+1 to perm[i]+1 (perm is a 0-based permutation).
  static BlockBijection unit_of(std::vector<int> const& perm);

  int degree() const { return degree_; }
  Partition const& diagram() const { return diagram_; }

  // Restriction of the diagram to the top row (resp. bottom row).
  Partition domain() const;
  Partition range() const;

  // Swaps the two rows; this is the unique semigroup inverse.
  BlockBijection inverse() const;

  bool is_uniform() const;     // every block meets the rows equally often
  bool is_unit() const;        // all blocks of size 2, i.e. a permutation
  bool is_idempotent() const;  // top and bottom of every block coincide

  bool operator==(BlockBijection const&) const = default;

 private:
  int degree_ = 0;
  Partition diagram_;
};

// Stacked product: the unique block bijection with a ~ b iff a and b are
// related under the join of a's relation (on rows 1, 2) and b's relation
// (on rows 2, 3), restricted to rows 1 and 3. Throws SizeMismatchError.
BlockBijection compose(BlockBijection const& a, BlockBijection const& b);

inline BlockBijection operator*(BlockBijection const& a,
                                BlockBijection const& b) {
  return compose(a, b);
}

// The generator with blocks {1,2; 3'}, {3; 1',2'} and {i; i'} for i >= 4.
// Throws DegreeTooSmallError unless n >= 3.
BlockBijection gen_x(int n);

// The transposition of i and i+1. Throws IndexOutOfRangeError unless
// 1 <= i <= n-1.
BlockBijection gen_s(int n, int i);

// The idempotent with blocks {1,2; 1',2'} and {i; i'} for i >= 3. Throws
// DegreeTooSmallError unless n >= 2.
BlockBijection epsilon(int n);

// Retraction of the local submonoid at epsilon onto degree n-1: merges top
// points 1, 2 and bottom points 1', 2', then shifts labels down by one.
// Requires epsilon(n) * b * epsilon(n) == b; throws NotInLocalSubmonoidError
// otherwise.
BlockBijection upsilon(BlockBijection const& b);

// g^{-1} * a * g. Throws NotAUnitError if g is not a unit.
BlockBijection conjugate(BlockBijection const& a, BlockBijection const& g);

}  // namespace dsim

template <>
struct std::hash<dsim::BlockBijection> {
  std::size_t operator()(dsim::BlockBijection const& b) const noexcept {
    return std::hash<dsim::Partition>()(b.diagram()) * 31 +
           static_cast<std::size_t>(b.degree());
  }
};
