#include "dsim/text.hpp"

#include <cctype>
#include <sstream>
#include <vector>

#include "dsim/errors.hpp"

namespace dsim {

namespace {

// Splits on the given separator, dropping surrounding whitespace in each
// piece. A lone empty piece stands for an empty list.
std::vector<std::string> split(std::string_view text, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : text) {
    if (ch == sep) {
      out.push_back(cur);
      cur.clear();
    } else if (!std::isspace(static_cast<unsigned char>(ch))) {
      cur.push_back(ch);
    }
  }
  out.push_back(cur);
  return out;
}

int parse_int(std::string const& token) {
  if (token.empty()) {
    throw ParseError("expected a number");
  }
  std::size_t pos = 0;
  int value = 0;
  try {
    value = std::stoi(token, &pos);
  } catch (std::exception const&) {
    throw ParseError("not a number: '" + token + "'");
  }
  if (pos != token.size()) {
    throw ParseError("trailing characters after number: '" + token + "'");
  }
  return value;
}

std::vector<int> parse_labels(std::string const& text) {
  std::vector<int> out;
  if (text.empty()) {
    return out;
  }
  for (auto const& piece : split(text, ',')) {
    out.push_back(parse_int(piece));
  }
  return out;
}

}  // namespace

std::string format_partition(Partition const& p) {
  std::ostringstream os;
  bool first_block = true;
  for (auto const& block : p.blocks()) {
    if (!first_block) {
      os << '|';
    }
    first_block = false;
    for (std::size_t i = 0; i < block.size(); ++i) {
      if (i > 0) {
        os << ',';
      }
      os << block[i] + 1;
    }
  }
  return os.str();
}

Partition parse_partition(int size, std::string_view text) {
  std::vector<std::vector<int>> blocks;
  for (auto const& piece : split(text, '|')) {
    std::vector<int> block;
    for (int label : parse_labels(piece)) {
      block.push_back(label - 1);
    }
    blocks.push_back(std::move(block));
  }
  return Partition::from_blocks(size, blocks);
}

std::string format_block_bijection(BlockBijection const& b) {
  int n = b.degree();
  std::ostringstream os;
  bool first_block = true;
  for (auto const& block : b.diagram().blocks()) {
    if (!first_block) {
      os << '|';
    }
    first_block = false;
    std::string bottom;
    bool first_top = true;
    bool first_bottom = true;
    for (int p : block) {
      if (p < n) {
        if (!first_top) {
          os << ',';
        }
        first_top = false;
        os << p + 1;
      } else {
        if (!first_bottom) {
          bottom += ',';
        }
        first_bottom = false;
        bottom += std::to_string(p - n + 1);
      }
    }
    os << ';' << bottom;
  }
  return os.str();
}

BlockBijection parse_block_bijection(int degree, std::string_view text) {
  std::vector<Block> blocks;
  for (auto const& piece : split(text, '|')) {
    auto sides = split(piece, ';');
    if (sides.size() != 2) {
      throw ParseError("block '" + piece + "' must be 'top;bottom'");
    }
    blocks.push_back(Block{parse_labels(sides[0]), parse_labels(sides[1])});
  }
  return BlockBijection::from_blocks(degree, blocks);
}

std::string format_word(Word const& w) {
  if (w.empty()) {
    return "1";
  }
  std::ostringstream os;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i > 0) {
      os << ' ';
    }
    switch (w[i].kind) {
      case LetterKind::x:
        os << 'x';
        break;
      case LetterKind::t:
        os << 't';
        break;
      case LetterKind::s:
        os << 's' << w[i].index;
        break;
    }
  }
  return os.str();
}

Word parse_word(std::string_view text) {
  Word out;
  std::istringstream is{std::string(text)};
  std::string token;
  while (is >> token) {
    if (token == "1") {
      continue;
    }
    if (token == "x") {
      out.push_back(Letter::x());
      continue;
    }
    if (token == "t") {
      out.push_back(Letter::t());
      continue;
    }
    if (token == "sigma") {
      Word o = sigma_word();
      out.insert(out.end(), o.begin(), o.end());
      continue;
    }
    char head = token[0];
    if (token.size() > 1 &&
        (head == 's' || head == 'l' || head == 'y' || head == 'e')) {
      int idx = parse_int(token.substr(1));
      Word expansion;
      switch (head) {
        case 's':
          expansion = {Letter::s(idx)};
          break;
        case 'l':
          expansion = l_word(idx);
          break;
        case 'y':
          expansion = y_word(idx);
          break;
        case 'e':
          expansion = e_i_word(idx);
          break;
      }
      out.insert(out.end(), expansion.begin(), expansion.end());
      continue;
    }
    throw ParseError("unknown token '" + token + "'");
  }
  return out;
}

std::string render_ascii(BlockBijection const& b) {
  int n = b.degree();
  auto cell = [](std::string s, std::size_t width) {
    s.resize(width, ' ');
    return s;
  };
  std::size_t width = std::to_string(n).size() + 1;
  std::ostringstream rows[4];
  for (int i = 0; i < n; ++i) {
    std::string sep = i + 1 < n ? " " : "";
    rows[0] << cell(std::to_string(i + 1), width) << sep;
    rows[1] << cell(std::to_string(b.diagram().block_of(i) + 1), width) << sep;
    rows[2] << cell(std::to_string(b.diagram().block_of(n + i) + 1), width)
            << sep;
    rows[3] << cell(std::to_string(i + 1) + "'", width) << sep;
  }
  std::string out;
  for (auto& row : rows) {
    std::string line = row.str();
    while (!line.empty() && line.back() == ' ') {
      line.pop_back();
    }
    out += line;
    out += '\n';
  }
  return out;
}

std::string render_dot(BlockBijection const& b) {
  int n = b.degree();
  std::ostringstream os;
  os << "graph blockbijection {\n";
  os << "  rankdir=TB;\n";
  os << "  { rank=source;";
  for (int i = 1; i <= n; ++i) {
    os << " t" << i << " [label=\"" << i << "\"];";
  }
  os << " }\n";
  os << "  { rank=sink;";
  for (int i = 1; i <= n; ++i) {
    os << " b" << i << " [label=\"" << i << "'\"];";
  }
  os << " }\n";
  auto node = [n](int p) {
    return (p < n ? "t" + std::to_string(p + 1)
                  : "b" + std::to_string(p - n + 1));
  };
  for (auto const& block : b.diagram().blocks()) {
    for (std::size_t i = 0; i + 1 < block.size(); ++i) {
      os << "  " << node(block[i]) << " -- " << node(block[i + 1]) << ";\n";
    }
  }
  os << "}\n";
  return os.str();
}

}  // namespace dsim
