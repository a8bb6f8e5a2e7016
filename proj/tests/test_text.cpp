#include "doctest.h"

#include <string>

#include "dsim/block_bijection.hpp"
#include "dsim/errors.hpp"
#include "dsim/partition.hpp"
#include "dsim/text.hpp"
#include "dsim/words.hpp"

using namespace dsim;

TEST_CASE("text: partition round trip") {
  Partition p = Partition::from_blocks(5, {{0, 1}, {2}, {3, 4}});
  CHECK(format_partition(p) == "1,2|3|4,5");
  CHECK(parse_partition(5, "1,2|3|4,5") == p);
  CHECK(parse_partition(5, " 1 , 2 | 3 | 5 , 4 ") == p);
  CHECK(format_partition(Partition::single_block(3)) == "1,2,3");
  CHECK(format_partition(Partition()) == "");

  CHECK_THROWS_AS(parse_partition(3, "1,a|2,3"), ParseError);
  CHECK_THROWS_AS(parse_partition(3, "1,|2,3"), ParseError);
  CHECK_THROWS_AS(parse_partition(3, "1,2"), OverlapOrGapError);
  CHECK_THROWS_AS(parse_partition(3, "1,2|2,3"), OverlapOrGapError);
  CHECK_THROWS_AS(parse_partition(3, "0|1,2,3"), OutOfRangeError);
}

TEST_CASE("text: block bijection round trip") {
  std::string s = "1,2;2,4|3;5,6,7,8|4,6,7;1|5,8;3";
  BlockBijection theta = parse_block_bijection(8, s);
  CHECK(format_block_bijection(theta) == s);
  CHECK(format_block_bijection(BlockBijection::identity(2)) == "1;1|2;2");
  CHECK(format_block_bijection(gen_x(3)) == "1,2;3|3;1,2");
  CHECK(parse_block_bijection(3, " 1 , 2 ; 3 | 3 ; 1 , 2 ") == gen_x(3));

  // Formatting is canonical: parse of any block order formats the same.
  CHECK(format_block_bijection(parse_block_bijection(3, "3;1,2|2,1;3")) ==
        "1,2;3|3;1,2");

  CHECK_THROWS_AS(parse_block_bijection(3, "1,2|3;1,2,3"), ParseError);
  CHECK_THROWS_AS(parse_block_bijection(3, "1,2;;3|3;1,2"), ParseError);
  CHECK_THROWS_AS(parse_block_bijection(3, "nonsense"), ParseError);
  CHECK_THROWS_AS(parse_block_bijection(3, "1,2;|3;1,2,3"),
                  NotBiequivalenceError);
  CHECK_THROWS_AS(parse_block_bijection(3, "1,2;3|3;1,2|1;1"),
                  OverlapOrGapError);
}

TEST_CASE("text: word round trip and abbreviations") {
  Word w{Letter::x(), Letter::s(2), Letter::x()};
  CHECK(format_word(w) == "x s2 x");
  CHECK(parse_word("x s2 x") == w);
  CHECK(parse_word("  x   s2\tx ") == w);

  CHECK(format_word(Word{}) == "1");
  CHECK(parse_word("1") == Word{});
  CHECK(parse_word("") == Word{});
  CHECK(parse_word("x 1 x") == Word{Letter::x(), Letter::x()});
  CHECK(format_word(Word{Letter::t(), Letter::s(1)}) == "t s1");
  CHECK(parse_word("t s1") == Word{Letter::t(), Letter::s(1)});

  CHECK(parse_word("sigma") == sigma_word());
  CHECK(parse_word("l2") == l_word(2));
  CHECK(parse_word("y4") == y_word(4));
  CHECK(parse_word("e2") == e_i_word(2));
  CHECK(parse_word("x sigma x") ==
        concat(Word{Letter::x()}, concat(sigma_word(), Word{Letter::x()})));

  CHECK_THROWS_AS(parse_word("q"), ParseError);
  CHECK_THROWS_AS(parse_word("s"), ParseError);
  CHECK_THROWS_AS(parse_word("s2x"), ParseError);
  CHECK_THROWS_AS(parse_word("l1"), IndexOutOfRangeError);

  // Letter indices are range-checked at evaluation, not at parse time.
  CHECK_THROWS_AS(phi_eval(parse_word("s0"), 3), IndexOutOfRangeError);
}

TEST_CASE("text: ascii rendering") {
  CHECK(render_ascii(gen_x(3)) ==
        "1  2  3\n"
        "1  1  2\n"
        "2  2  1\n"
        "1' 2' 3'\n");
  CHECK(render_ascii(BlockBijection::identity(2)) ==
        "1  2\n"
        "1  2\n"
        "1  2\n"
        "1' 2'\n");
}

TEST_CASE("text: dot rendering") {
  std::string dot = render_dot(gen_x(3));
  CHECK(dot.find("graph blockbijection {") == 0);
  CHECK(dot.find("t1 [label=\"1\"]") != std::string::npos);
  CHECK(dot.find("b3 [label=\"3'\"]") != std::string::npos);
  // Blocks {1,2;3'} and {3;1',2'} as spanning paths.
  CHECK(dot.find("t1 -- t2;") != std::string::npos);
  CHECK(dot.find("t2 -- b3;") != std::string::npos);
  CHECK(dot.find("t3 -- b1;") != std::string::npos);
  CHECK(dot.find("b1 -- b2;") != std::string::npos);
  CHECK(dot.back() == '\n');
}
