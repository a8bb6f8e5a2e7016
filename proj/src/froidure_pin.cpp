#include "dsim/froidure_pin.hpp"

#include <string>

#include "dsim/errors.hpp"

namespace dsim {

int EnumeratedMonoid::index_of(BlockBijection const& b) const {
  auto it = index.find(b);
  return it == index.end() ? -1 : it->second;
}

int EnumeratedMonoid::product(int a, int b) const {
  int cur = a;
  for (Letter c : rep_words[b]) {
    int g = -1;
    for (std::size_t k = 0; k < letters.size(); ++k) {
      if (letters[k] == c) {
        g = static_cast<int>(k);
        break;
      }
    }
    cur = right_cayley[cur][g];
  }
  return cur;
}

EnumeratedMonoid froidure_pin(std::vector<BlockBijection> const& gens,
                              std::vector<Letter> const& letters,
                              std::size_t cap) {
  EnumeratedMonoid m;
  m.generators = gens;
  m.letters = letters;
  if (gens.empty()) {
    throw IndexOutOfRangeError("froidure_pin needs at least one generator");
  }
  int degree = gens[0].degree();
  m.elements.push_back(BlockBijection::identity(degree));
  m.rep_words.push_back({});
  m.index.emplace(m.elements[0], 0);

  std::size_t n_gens = gens.size();
  for (std::size_t i = 0; i < m.elements.size(); ++i) {
    m.right_cayley.emplace_back(n_gens, -1);
    for (std::size_t g = 0; g < n_gens; ++g) {
      BlockBijection prod = compose(m.elements[i], gens[g]);
      auto [it, inserted] =
          m.index.emplace(prod, static_cast<int>(m.elements.size()));
      if (inserted) {
        if (m.elements.size() >= cap) {
          throw CapExceededError("enumeration exceeded cap of " +
                                 std::to_string(cap) + " elements");
        }
        m.elements.push_back(std::move(prod));
        Word w = m.rep_words[i];
        w.push_back(letters[g]);
        m.rep_words.push_back(std::move(w));
      }
      m.right_cayley[i][g] = it->second;
    }
  }

  m.left_cayley.resize(m.elements.size());
  for (std::size_t i = 0; i < m.elements.size(); ++i) {
    m.left_cayley[i].resize(n_gens);
    for (std::size_t g = 0; g < n_gens; ++g) {
      m.left_cayley[i][g] = m.index.at(compose(gens[g], m.elements[i]));
    }
  }
  return m;
}

std::vector<BlockBijection> x_generators(int n) {
  std::vector<BlockBijection> gens{gen_x(n)};
  for (int i = 1; i <= n - 1; ++i) {
    gens.push_back(gen_s(n, i));
  }
  return gens;
}

std::vector<Letter> x_letters(int n) {
  std::vector<Letter> letters{Letter::x()};
  for (int i = 1; i <= n - 1; ++i) {
    letters.push_back(Letter::s(i));
  }
  return letters;
}

std::vector<BlockBijection> f_generators(int n) {
  std::vector<BlockBijection> gens{epsilon(n)};
  for (int i = 1; i <= n - 1; ++i) {
    gens.push_back(gen_s(n, i));
  }
  return gens;
}

std::vector<Letter> f_letters(int n) {
  std::vector<Letter> letters{Letter::t()};
  for (int i = 1; i <= n - 1; ++i) {
    letters.push_back(Letter::s(i));
  }
  return letters;
}

}  // namespace dsim
