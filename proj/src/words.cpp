#include "dsim/words.hpp"

#include <cstdlib>
#include <string>

#include "dsim/errors.hpp"

namespace dsim {

Word concat(Word const& a, Word const& b) {
  Word out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

Word pow(Word const& w, int k) {
  Word out;
  out.reserve(w.size() * k);
  for (int r = 0; r < k; ++r) {
    out.insert(out.end(), w.begin(), w.end());
  }
  return out;
}

Word rev(Word const& w) {
  return Word(w.rbegin(), w.rend());
}

int letter_rank(Letter c) {
  return c.kind == LetterKind::s ? c.index : 0;
}

bool shortlex_less(Word const& w1, Word const& w2) {
  if (w1.size() != w2.size()) {
    return w1.size() < w2.size();
  }
  for (std::size_t i = 0; i < w1.size(); ++i) {
    int r1 = letter_rank(w1[i]);
    int r2 = letter_rank(w2[i]);
    if (r1 != r2) {
      return r1 < r2;
    }
  }
  return false;
}

int m_exp(int i, int j) {
  if (i < 1 || j < 1) {
    throw IndexOutOfRangeError("m_exp indices must be >= 1");
  }
  if (i == j) {
    return 1;
  }
  return std::abs(i - j) == 1 ? 3 : 2;
}

Word sigma_word() {
  return {Letter::s(2), Letter::s(3), Letter::s(1), Letter::s(2)};
}

Word l_word(int i) {
  if (i < 2) {
    throw IndexOutOfRangeError("l_word defined for i >= 2");
  }
  if (i == 2) {
    return {Letter::x(), Letter::s(2), Letter::s(1)};
  }
  Word out{Letter::s(i)};
  Word inner = l_word(i - 1);
  out.insert(out.end(), inner.begin(), inner.end());
  out.push_back(Letter::s(i));
  out.push_back(Letter::s(i - 1));
  return out;
}

Word y_word(int j) {
  if (j < 3) {
    throw IndexOutOfRangeError("y_word defined for j >= 3");
  }
  if (j == 3) {
    return {Letter::x()};
  }
  Word out = l_word(j - 1);
  Word inner = y_word(j - 1);
  out.insert(out.end(), inner.begin(), inner.end());
  out.push_back(Letter::s(j - 1));
  return out;
}

Word pi_word(int k, int l) {
  if (k < 1 || l < 0) {
    throw IndexOutOfRangeError("pi_word needs k >= 1 and l >= 0");
  }
  Word out;
  for (int i = 2; i <= 4; ++i) {
    if (i <= k) {
      out.push_back(Letter::s(i));
    }
  }
  for (int i = 1; i <= 3; ++i) {
    if (i <= l) {
      out.push_back(Letter::s(i));
    }
  }
  return out;
}

Word e_i_word(int i) {
  if (i < 1) {
    throw IndexOutOfRangeError("e_i_word defined for i >= 1");
  }
  Word g;
  for (int k = 2; k <= i; ++k) {
    g.push_back(Letter::s(k));
  }
  for (int k = 1; k <= i - 1; ++k) {
    g.push_back(Letter::s(k));
  }
  Word out = rev(g);
  out.push_back(Letter::x());
  out.push_back(Letter::x());
  out.insert(out.end(), g.begin(), g.end());
  return out;
}

int letter_index(Letter c, Alphabet a) {
  if (c.kind == LetterKind::s) {
    return a == Alphabet::s_only ? c.index - 1 : c.index;
  }
  return 0;
}

Letter index_letter(int idx, Alphabet a) {
  if (a == Alphabet::s_only) {
    return Letter::s(idx + 1);
  }
  if (idx == 0) {
    return a == Alphabet::xs ? Letter::x() : Letter::t();
  }
  return Letter::s(idx);
}

bool letter_valid(Letter c, Alphabet a, int degree) {
  switch (c.kind) {
    case LetterKind::x:
      return a == Alphabet::xs && degree >= 3;
    case LetterKind::t:
      return a == Alphabet::ts && degree >= 2;
    case LetterKind::s:
      return c.index >= 1 && c.index <= degree - 1;
  }
  return false;
}

namespace {

void add_braid_relations(Presentation& p) {
  int n = p.degree;
  for (int i = 1; i <= n - 1; ++i) {
    for (int j = i; j <= n - 1; ++j) {
      Word lhs = pow({Letter::s(i), Letter::s(j)}, m_exp(i, j));
      p.relations.emplace_back(lhs, Word{});
    }
  }
}

}  // namespace

Presentation relations_R(int n) {
  if (n < 3) {
    throw DegreeTooSmallError("relations_R needs degree >= 3, got " +
                              std::to_string(n));
  }
  Letter const x = Letter::x();
  Letter const s1 = Letter::s(1);
  Letter const s2 = Letter::s(2);
  Presentation p{n, Alphabet::xs, {}};
  add_braid_relations(p);
  p.relations.emplace_back(Word{x, x, x}, Word{x});
  p.relations.emplace_back(Word{x, s1}, Word{x});
  p.relations.emplace_back(Word{s1, x}, Word{x});
  Word xs2x{x, s2, x};
  p.relations.emplace_back(Word{x, s2, x, s2}, xs2x);
  p.relations.emplace_back(Word{s2, x, s2, x}, xs2x);
  p.relations.emplace_back(Word{x, s2, x, x}, xs2x);
  p.relations.emplace_back(Word{x, x, s2, x}, xs2x);
  if (n >= 4) {
    Letter const s3 = Letter::s(3);
    Word const o = sigma_word();
    Word const xx{x, x};
    Word xxoxxo = concat(concat(xx, o), concat(xx, o));
    p.relations.emplace_back(concat(concat(o, xx), concat(o, xx)), xxoxxo);
    p.relations.emplace_back(Word{x, s2, s3, s2, x}, xxoxxo);
    for (int i = 3; i <= n - 1; ++i) {
      Word y = y_word(i);
      Word si{Letter::s(i)};
      p.relations.emplace_back(concat(concat(y, si), y),
                               concat(concat(si, y), si));
    }
  }
  for (int i = 4; i <= n - 1; ++i) {
    p.relations.emplace_back(Word{x, Letter::s(i)}, Word{Letter::s(i), x});
  }
  return p;
}

Presentation relations_F(int n) {
  if (n < 2) {
    throw DegreeTooSmallError("relations_F needs degree >= 2, got " +
                              std::to_string(n));
  }
  Letter const t = Letter::t();
  Letter const s1 = Letter::s(1);
  Letter const s2 = Letter::s(2);
  Presentation p{n, Alphabet::ts, {}};
  add_braid_relations(p);
  p.relations.emplace_back(Word{t, t}, Word{t});
  p.relations.emplace_back(Word{t, s1}, Word{t});
  p.relations.emplace_back(Word{s1, t}, Word{t});
  for (int i = 3; i <= n - 1; ++i) {
    p.relations.emplace_back(Word{t, Letter::s(i)}, Word{Letter::s(i), t});
  }
  if (n >= 3) {
    p.relations.emplace_back(Word{t, s2, t, s2}, Word{s2, t, s2, t});
  }
  if (n >= 4) {
    Word const o = sigma_word();
    Word const tw{t};
    p.relations.emplace_back(concat(concat(tw, o), concat(tw, o)),
                             concat(concat(o, tw), concat(o, tw)));
  }
  return p;
}

Presentation moore_presentation(int n) {
  if (n < 2) {
    throw DegreeTooSmallError("moore_presentation needs degree >= 2, got " +
                              std::to_string(n));
  }
  Presentation p{n, Alphabet::s_only, {}};
  add_braid_relations(p);
  return p;
}

Word theta_subst(Word const& w) {
  Word out;
  for (Letter c : w) {
    switch (c.kind) {
      case LetterKind::t:
        out.push_back(Letter::x());
        out.push_back(Letter::x());
        break;
      case LetterKind::s:
        out.push_back(c);
        break;
      case LetterKind::x:
        throw IndexOutOfRangeError("theta_subst applies to words over {t, s}");
    }
  }
  return out;
}

Word psi_subst(Word const& w) {
  Word out;
  for (Letter c : w) {
    switch (c.kind) {
      case LetterKind::x: {
        out.push_back(Letter::s(3));
        out.push_back(Letter::x());
        Word o = sigma_word();
        out.insert(out.end(), o.begin(), o.end());
        out.push_back(Letter::x());
        out.push_back(Letter::s(3));
        break;
      }
      case LetterKind::s:
        if (c.index == 1) {
          out.push_back(Letter::x());
        } else {
          out.push_back(Letter::x());
          out.push_back(Letter::x());
          out.push_back(Letter::s(c.index + 1));
        }
        break;
      case LetterKind::t:
        throw IndexOutOfRangeError("psi_subst applies to words over {x, s}");
    }
  }
  return out;
}

std::vector<Word> normal_forms_3() {
  Letter const x = Letter::x();
  Letter const s1 = Letter::s(1);
  Letter const s2 = Letter::s(2);
  std::vector<Word> out{{}, {s1}, {s2}, {s1, s2}, {s2, s1}, {s1, s2, s1}};
  std::vector<Word> const left{{}, {s2}, {s1, s2}};
  std::vector<Word> const right{{}, {s2}, {s2, s1}};
  for (Word const& u : left) {
    for (int c = 1; c <= 2; ++c) {
      for (Word const& v : right) {
        out.push_back(concat(concat(u, pow({x}, c)), v));
      }
    }
  }
  out.push_back({x, s2, x});
  return out;
}

BlockBijection phi_eval(Word const& w, int n) {
  BlockBijection acc = BlockBijection::identity(n);
  for (Letter c : w) {
    switch (c.kind) {
      case LetterKind::x:
        acc = compose(acc, gen_x(n));
        break;
      case LetterKind::s:
        acc = compose(acc, gen_s(n, c.index));
        break;
      case LetterKind::t:
        acc = compose(acc, epsilon(n));
        break;
    }
  }
  return acc;
}

}  // namespace dsim
