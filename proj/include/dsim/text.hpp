// Textual forms of partitions, block bijections and words, plus the two
// diagram renderers. All labels in text are 1-based; bottom-row labels carry
// a prime. Parsers throw ParseError on malformed syntax and the usual
// validation errors on well-formed but invalid input.

#pragma once

#include <string>
#include <string_view>

#include "dsim/block_bijection.hpp"
#include "dsim/partition.hpp"
#include "dsim/words.hpp"

namespace dsim {

// "1,2|3" style block lists. Blocks in canonical order on output.
std::string format_partition(Partition const& p);
Partition parse_partition(int size, std::string_view text);

// "1,2;2,4|3;5,6,7,8|..." with one "top;bottom" pair per block. Blocks in
// canonical order (by least top label) on output.
std::string format_block_bijection(BlockBijection const& b);
BlockBijection parse_block_bijection(int degree, std::string_view text);

// Whitespace-separated letters "x", "t", "s<i>", the empty word "1", and
// the abbreviations "sigma", "l<i>", "y<j>", "e<i>" for the derived words.
std::string format_word(Word const& w);
Word parse_word(std::string_view text);

// Four text rows: top labels, block id of each top point, block id of each
// bottom point, bottom labels. Ids are 1-based in canonical order.
std::string render_ascii(BlockBijection const& b);

// Graphviz source with one node per point and one spanning path per block.
std::string render_dot(BlockBijection const& b);

}  // namespace dsim
