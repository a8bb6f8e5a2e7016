// Breadth-first closure of a generated monoid of block bijections, with
// shortlex-minimal representative words and both Cayley tables.

#pragma once

#include <cstddef>
#include <unordered_map>
#include <vector>

#include "dsim/block_bijection.hpp"
#include "dsim/words.hpp"

namespace dsim {

struct EnumeratedMonoid {
  // elements[0] is the identity; the rest appear in shortlex order of their
  // representative words.
  std::vector<BlockBijection> elements;
  // rep_words[i] is the shortlex-least word over the generator letters whose
  // image is elements[i]. The set of representatives is prefix closed.
  std::vector<Word> rep_words;
  // right_cayley[i][g] is the index of elements[i] * generators[g];
  // left_cayley[i][g] that of generators[g] * elements[i].
  std::vector<std::vector<int>> right_cayley;
  std::vector<std::vector<int>> left_cayley;
  std::vector<BlockBijection> generators;
  std::vector<Letter> letters;  // the letter naming each generator
  std::unordered_map<BlockBijection, int> index;

  std::size_t size() const { return elements.size(); }

  // Index of an element, or -1 if it is not in the monoid.
  int index_of(BlockBijection const& b) const;

  // Index of elements[a] * elements[b], computed by walking the right
  // Cayley table along rep_words[b].
  int product(int a, int b) const;
};

// Enumerates the monoid generated by gens (the identity is always included
// as element 0, whether or not it is listed). letters[g] names gens[g] when
// building representative words; generators are tried in the given order,
// which must be the shortlex letter order for representatives to be minimal.
// Throws CapExceededError if more than cap elements appear.
EnumeratedMonoid froidure_pin(std::vector<BlockBijection> const& gens,
                              std::vector<Letter> const& letters,
                              std::size_t cap = 100000);

// Generator images of degree n (n >= 3): gen_x, gen_s(1), ..., gen_s(n-1),
// named by the letters x, s_1, ..., s_{n-1}.
std::vector<BlockBijection> x_generators(int n);
std::vector<Letter> x_letters(int n);

// Generators of the factorizable part (n >= 2): epsilon, gen_s(1), ...,
// named by t, s_1, ..., s_{n-1}.
std::vector<BlockBijection> f_generators(int n);
std::vector<Letter> f_letters(int n);

}  // namespace dsim
