// Words over the generator alphabets and the defining relation families.
//
// Two alphabets occur: {x, s_1, ..., s_{n-1}} for the full monoid and
// {t, s_1, ..., s_{n-1}} for its factorizable part. The Moore presentation
// of the symmetric group uses the s letters alone. Words evaluate to block
// bijections left to right; degree validity of letters is checked at
// evaluation time, not at construction.

#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "dsim/block_bijection.hpp"

namespace dsim {

enum class LetterKind : std::uint8_t { x, s, t };

struct Letter {
  LetterKind kind{LetterKind::x};
  int index{0};  // 1-based for s letters, 0 otherwise

  static Letter x() { return Letter{LetterKind::x, 0}; }
  static Letter s(int i) { return Letter{LetterKind::s, i}; }
  static Letter t() { return Letter{LetterKind::t, 0}; }

  bool operator==(Letter const&) const = default;
};

using Word = std::vector<Letter>;

Word concat(Word const& a, Word const& b);
Word pow(Word const& w, int k);

// The word read backwards. Generator images are self-inverse, so this
// evaluates to the inverse of the original image.
Word rev(Word const& w);

// Position of a letter in the shortlex letter order: the non-s letter comes
// first, then s_1 < s_2 < ...
int letter_rank(Letter c);

// true iff w1 precedes w2 in shortlex order (by length, then letter ranks).
bool shortlex_less(Word const& w1, Word const& w2);

// Coxeter exponent of the symmetric group: 1 on the diagonal, 3 for
// adjacent indices, 2 otherwise. Indices must be >= 1.
int m_exp(int i, int j);

// The 4-letter word s_2 s_3 s_1 s_2; its image is the double transposition
// (1 3)(2 4) extended by fixed points.
Word sigma_word();

// l_2 = x s_2 s_1 and l_{i+1} = s_{i+1} l_i s_{i+1} s_i; defined for i >= 2.
Word l_word(int i);

// y_3 = x and y_{j+1} = l_j y_j s_j; defined for j >= 3.
Word y_word(int j);

// s_2^k s_3^k s_4^k s_1^l s_2^l s_3^l where s_i^k contributes the letter s_i
// exactly when i <= k. Requires k >= 1, l >= 0.
Word pi_word(int k, int l);

// rev(g) x x g with g = (s_2 ... s_i)(s_1 ... s_{i-1}); e_1 is x x. The
// image is the idempotent merging i and i+1. Requires i >= 1.
Word e_i_word(int i);

enum class Alphabet : std::uint8_t { xs, ts, s_only };

struct Presentation {
  int degree = 0;
  Alphabet alphabet = Alphabet::xs;
  std::vector<std::pair<Word, Word>> relations;

  int n_letters() const {
    return alphabet == Alphabet::s_only ? degree - 1 : degree;
  }
};

// Column index of a letter in a class table over the given alphabet.
int letter_index(Letter c, Alphabet a);
Letter index_letter(int idx, Alphabet a);
bool letter_valid(Letter c, Alphabet a, int degree);

// Defining relations of the monoid of all block bijections of degree n
// (n >= 3), ground-instantiated with every index in range:
//   braid and involution relations of the s letters;
//   x^3 = x;  x s_1 = s_1 x = x;
//   the chain x s_2 x = x s_2 x s_2 = s_2 x s_2 x = x s_2 x^2 = x^2 s_2 x;
//   for n >= 4, x^2 o x^2 o = o x^2 o x^2 = x s_2 s_3 s_2 x with o the
//   sigma word, plus y_i s_i y_i = s_i y_i s_i for 3 <= i <= n-1;
//   for n >= 5, x s_i = s_i x for 4 <= i <= n-1.
Presentation relations_R(int n);

// Defining relations of the factorizable part, over {t, s_1, ..., s_{n-1}}
// (n >= 2): braid relations; t^2 = t; t s_1 = s_1 t = t; t s_i = s_i t for
// 3 <= i <= n-1; t s_2 t s_2 = s_2 t s_2 t; and for n >= 4 the relation
// t o t o = o t o t with o the sigma word.
Presentation relations_F(int n);

// Braid and involution relations alone, over the s letters (n >= 2). The
// presented monoid is the symmetric group of degree n.
Presentation moore_presentation(int n);

// Substitution t -> x x, s_i -> s_i, mapping words over {t, s} to words
// over {x, s}.
Word theta_subst(Word const& w);

// Degree-lowering substitution: x -> s_3 x o x s_3 (o the sigma word),
// s_1 -> x, s_j -> x x s_{j+1} for j >= 2. A word valid at degree n-1 maps
// to a word valid at degree n >= 4.
Word psi_subst(Word const& w);

// The 25 words listing one representative per element at degree 3: the six
// units over {s_1, s_2}, the products u x^c v with u in {1, s_2, s_1 s_2},
// c in {1, 2}, v in {1, s_2, s_2 s_1}, and the zero word x s_2 x.
std::vector<Word> normal_forms_3();

// Evaluates w at degree n: x -> gen_x(n), s_i -> gen_s(n, i),
// t -> epsilon(n), folding products left to right from the identity.
// Degree errors of the generator constructors propagate.
BlockBijection phi_eval(Word const& w, int n);

}  // namespace dsim
