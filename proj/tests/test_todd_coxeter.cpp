#include "doctest.h"

#include <cstddef>
#include <vector>

#include "dsim/errors.hpp"
#include "dsim/todd_coxeter.hpp"
#include "dsim/words.hpp"

using namespace dsim;

namespace {

int trace(CongruenceTable const& t, Presentation const& pres, int from,
          Word const& w) {
  int c = from;
  for (Letter a : w) {
    c = t.table[c][letter_index(a, pres.alphabet)];
  }
  return c;
}

// Every relation must hold from every class of the finished table; this is
// the defining property of the congruence quotient.
void check_relations_hold(CongruenceTable const& t, Presentation const& pres) {
  for (std::size_t c = 0; c < t.n_classes; ++c) {
    for (auto const& [lhs, rhs] : pres.relations) {
      CHECK(trace(t, pres, static_cast<int>(c), lhs) ==
            trace(t, pres, static_cast<int>(c), rhs));
    }
  }
}

void check_well_formed(CongruenceTable const& t, Presentation const& pres) {
  REQUIRE(t.table.size() == t.n_classes);
  for (auto const& row : t.table) {
    REQUIRE(row.size() == static_cast<std::size_t>(pres.n_letters()));
    for (int entry : row) {
      CHECK(entry >= 0);
      CHECK(entry < static_cast<int>(t.n_classes));
    }
  }
}

}  // namespace

TEST_CASE("todd-coxeter: the full presentation at small degrees") {
  Presentation p3 = relations_R(3);
  CongruenceTable t3 = todd_coxeter(p3);
  CHECK(t3.n_classes == 25);
  check_well_formed(t3, p3);
  check_relations_hold(t3, p3);

  Presentation p4 = relations_R(4);
  CongruenceTable t4 = todd_coxeter(p4);
  CHECK(t4.n_classes == 339);
  check_well_formed(t4, p4);
  check_relations_hold(t4, p4);
}

TEST_CASE("todd-coxeter: the factorizable presentation") {
  CHECK(todd_coxeter(relations_F(2)).n_classes == 3);
  CHECK(todd_coxeter(relations_F(3)).n_classes == 16);
  // 131 uniform block bijections of degree 4, counted by block type:
  // 24 + 72 + 18 + 16 + 1 over the types 1^4, 2 1^2, 2^2, 3 1, 4.
  CHECK(todd_coxeter(relations_F(4)).n_classes == 131);

  Presentation p3 = relations_F(3);
  CongruenceTable t3 = todd_coxeter(p3);
  check_relations_hold(t3, p3);
}

TEST_CASE("todd-coxeter: braid relations alone give the symmetric group") {
  CHECK(todd_coxeter(moore_presentation(2)).n_classes == 2);
  CHECK(todd_coxeter(moore_presentation(3)).n_classes == 6);
  CHECK(todd_coxeter(moore_presentation(4)).n_classes == 24);
  CHECK(todd_coxeter(moore_presentation(5)).n_classes == 120);
}

TEST_CASE("todd-coxeter: identity class and generator traces") {
  Presentation pres = relations_R(3);
  CongruenceTable t = todd_coxeter(pres);
  // Class 0 is the empty word; x^2 and x s_1 land where x-words must.
  int x = trace(t, pres, 0, Word{Letter::x()});
  CHECK(x != 0);
  CHECK(trace(t, pres, 0, Word{Letter::x(), Letter::s(1)}) == x);
  CHECK(trace(t, pres, 0, pow(Word{Letter::x()}, 3)) == x);
  int s1 = trace(t, pres, 0, Word{Letter::s(1)});
  CHECK(trace(t, pres, s1, Word{Letter::s(1)}) == 0);
}

TEST_CASE("todd-coxeter: runs are deterministic") {
  CongruenceTable a = todd_coxeter(relations_R(4));
  CongruenceTable b = todd_coxeter(relations_R(4));
  CHECK(a.n_classes == b.n_classes);
  CHECK(a.table == b.table);
}

TEST_CASE("todd-coxeter: definition cap") {
  CHECK_THROWS_AS(todd_coxeter(relations_R(4), 50), CapExceededError);
  // The cap counts every class ever defined, including ones merged away,
  // so a successful run may need slack beyond the final count.
  CHECK(todd_coxeter(relations_R(3), 200).n_classes == 25);
}
