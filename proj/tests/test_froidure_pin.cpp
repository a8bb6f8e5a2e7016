#include "doctest.h"

#include <random>
#include <set>
#include <vector>

#include "dsim/block_bijection.hpp"
#include "dsim/errors.hpp"
#include "dsim/froidure_pin.hpp"
#include "dsim/verify.hpp"
#include "dsim/words.hpp"

using namespace dsim;

TEST_CASE("froidure-pin: symmetric group from the transpositions") {
  std::vector<BlockBijection> gens{gen_s(3, 1), gen_s(3, 2)};
  std::vector<Letter> letters{Letter::s(1), Letter::s(2)};
  EnumeratedMonoid m = froidure_pin(gens, letters);
  CHECK(m.size() == 6);
  for (auto const& el : m.elements) {
    CHECK(el.is_unit());
  }
}

TEST_CASE("froidure-pin: full monoid sizes match the counting oracle") {
  EnumeratedMonoid m2 = froidure_pin(f_generators(2), f_letters(2));
  CHECK(m2.size() == cardinality_oracle(2));
  CHECK(m2.size() == 3);

  EnumeratedMonoid m3 = froidure_pin(x_generators(3), x_letters(3));
  CHECK(m3.size() == 25);
  EnumeratedMonoid m4 = froidure_pin(x_generators(4), x_letters(4));
  CHECK(m4.size() == 339);
  CHECK(m4.size() == cardinality_oracle(4));
}

TEST_CASE("froidure-pin: representative words") {
  EnumeratedMonoid m = froidure_pin(x_generators(3), x_letters(3));
  REQUIRE(m.size() == 25);
  CHECK(m.elements[0] == BlockBijection::identity(3));
  CHECK(m.rep_words[0].empty());

  for (std::size_t i = 0; i < m.size(); ++i) {
    Word const& w = m.rep_words[i];
    // Each representative evaluates to its element.
    CHECK(phi_eval(w, 3) == m.elements[i]);
    // Words are listed in strict shortlex order of their index.
    if (i > 0) {
      CHECK(shortlex_less(m.rep_words[i - 1], w));
    }
  }

  // The set of representatives is prefix closed.
  auto ranks = [](Word const& w) {
    std::vector<int> out;
    for (Letter c : w) {
      out.push_back(letter_rank(c));
    }
    return out;
  };
  std::set<std::vector<int>> reps;
  for (auto const& w : m.rep_words) {
    reps.insert(ranks(w));
  }
  for (auto const& w : m.rep_words) {
    for (std::size_t k = 0; k < w.size(); ++k) {
      CHECK(reps.count(ranks(Word(w.begin(), w.begin() + k))) == 1);
    }
  }
}

TEST_CASE("froidure-pin: cayley tables agree with composition") {
  EnumeratedMonoid m = froidure_pin(x_generators(3), x_letters(3));
  std::mt19937 rng(5100u);
  std::uniform_int_distribution<int> pick(0, static_cast<int>(m.size()) - 1);
  for (int trial = 0; trial < 200; ++trial) {
    int i = pick(rng);
    int g = std::uniform_int_distribution<int>(
        0, static_cast<int>(m.generators.size()) - 1)(rng);
    CHECK(m.right_cayley[i][g] ==
          m.index_of(m.elements[i] * m.generators[g]));
    CHECK(m.left_cayley[i][g] ==
          m.index_of(m.generators[g] * m.elements[i]));
  }
  for (int trial = 0; trial < 200; ++trial) {
    int a = pick(rng);
    int b = pick(rng);
    CHECK(m.product(a, b) == m.index_of(m.elements[a] * m.elements[b]));
  }
}

TEST_CASE("froidure-pin: index lookup") {
  EnumeratedMonoid m = froidure_pin(x_generators(3), x_letters(3));
  CHECK(m.index_of(BlockBijection::identity(3)) == 0);
  CHECK(m.index_of(gen_x(3)) >= 1);
  // Degree 4 elements are simply absent.
  CHECK(m.index_of(BlockBijection::identity(4)) == -1);
}

TEST_CASE("froidure-pin: element cap") {
  CHECK_THROWS_AS(froidure_pin(x_generators(4), x_letters(4), 100),
                  CapExceededError);
  // The cap is a bound, not a target: a fitting monoid still enumerates.
  CHECK(froidure_pin(x_generators(3), x_letters(3), 25).size() == 25);
}

TEST_CASE("froidure-pin: generator helpers") {
  CHECK(x_generators(4).size() == 4);
  CHECK(x_letters(4) ==
        std::vector<Letter>{Letter::x(), Letter::s(1), Letter::s(2),
                            Letter::s(3)});
  CHECK(f_generators(2).size() == 2);
  CHECK(f_letters(2) == std::vector<Letter>{Letter::t(), Letter::s(1)});
  CHECK(x_generators(4)[0] == gen_x(4));
  CHECK(f_generators(3)[0] == epsilon(3));
  CHECK_THROWS_AS(x_generators(2), DegreeTooSmallError);
}
