#include "dsim/verify.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "dsim/block_bijection.hpp"
#include "dsim/errors.hpp"
#include "dsim/froidure_pin.hpp"
#include "dsim/partition.hpp"
#include "dsim/structure.hpp"
#include "dsim/text.hpp"
#include "dsim/todd_coxeter.hpp"
#include "dsim/words.hpp"

namespace dsim {

void Report::check(bool cond, std::string prefix) {
  ok = ok && cond;
  prefix += cond ? " PASS" : " FAIL";
  lines.push_back(std::move(prefix));
}

void Report::note(std::string line) {
  lines.push_back("# " + std::move(line));
}

void Report::merge(Report const& other) {
  ok = ok && other.ok;
  lines.insert(lines.end(), other.lines.begin(), other.lines.end());
}

std::string Report::text() const {
  std::string out;
  for (auto const& line : lines) {
    out += line;
    out += '\n';
  }
  return out;
}

std::uint64_t cardinality_oracle(int n) {
  if (n < 0 || n > 6) {
    throw OutOfRangeError("cardinality_oracle supports 0 <= n <= 6");
  }
  std::uint64_t count = 0;
  std::vector<char> top(2 * n + 1, 0);
  std::vector<char> bottom(2 * n + 1, 0);
  for_each_rgs(2 * n, [&](std::vector<int> const& rgs) {
    int n_blocks = 0;
    for (int id : rgs) {
      n_blocks = std::max(n_blocks, id + 1);
    }
    std::fill(top.begin(), top.begin() + n_blocks, 0);
    std::fill(bottom.begin(), bottom.begin() + n_blocks, 0);
    for (int i = 0; i < n; ++i) {
      top[rgs[i]] = 1;
      bottom[rgs[n + i]] = 1;
    }
    bool biequivalence = true;
    for (int b = 0; b < n_blocks; ++b) {
      biequivalence = biequivalence && top[b] && bottom[b];
    }
    count += biequivalence ? 1 : 0;
  });
  return count;
}

std::uint64_t bell_count(int n) {
  std::uint64_t count = 0;
  for_each_rgs(n, [&](std::vector<int> const&) { ++count; });
  return count;
}

std::uint64_t factorial(int n) {
  std::uint64_t out = 1;
  for (int i = 2; i <= n; ++i) {
    out *= i;
  }
  return out;
}

namespace {

std::string num(std::uint64_t v) { return std::to_string(v); }

std::vector<BlockBijection> all_units(int n) {
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<BlockBijection> out;
  do {
    out.push_back(BlockBijection::unit_of(perm));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

Word const kXX{Letter::x(), Letter::x()};

// Right-hand sides of the 16-case rewriting of x (x^2)^pi x, indexed by the
// case class: kc is k capped at 4, lc is l capped at 3.
Word table1_cell(int kc, int lc) {
  Word const o = sigma_word();
  Word const xxoxxo = concat(concat(kXX, o), concat(kXX, o));
  Word const xxs2xx = concat(concat(kXX, {Letter::s(2)}), kXX);
  Word const xxs232xx = concat(
      concat(kXX, {Letter::s(2), Letter::s(3), Letter::s(2)}), kXX);
  switch (kc) {
    case 1:
      if (lc <= 1) return kXX;
      return lc == 2 ? xxs2xx : xxoxxo;
    case 2:
      return lc <= 2 ? xxs2xx : xxoxxo;
    case 3:
      return lc <= 1 ? xxoxxo : xxs232xx;
    default:
      if (lc <= 1) return concat(concat({Letter::s(4)}, xxoxxo), {Letter::s(4)});
      if (lc == 2) return concat(concat({Letter::s(4)}, xxs232xx), {Letter::s(4)});
      return concat(concat({Letter::s(3), Letter::s(4)}, xxoxxo),
                    {Letter::s(4), Letter::s(3)});
  }
}

// Right-hand sides of the 9-case rewriting of e pi e over the degree-lowered
// generator words; ic is i capped at 2, jc is j capped at 3.
Word table2_cell(int ic, int jc) {
  Word const X = psi_subst({Letter::x()});
  Word const S1 = psi_subst({Letter::s(1)});
  Word const S2 = psi_subst({Letter::s(2)});
  if (ic <= 1) {
    if (jc == 1) return kXX;
    return jc == 2 ? concat(X, X) : concat(concat(X, X), S2);
  }
  if (jc <= 2) return concat(X, X);
  return concat(concat(concat(S1, S2), X), concat(S2, S1));
}

}  // namespace

Report check_presentation(int n, std::size_t tc_cap, std::size_t fp_cap) {
  Report r;
  Presentation pres = relations_R(n);
  int broken = 0;
  for (auto const& [u, v] : pres.relations) {
    if (phi_eval(u, n) != phi_eval(v, n)) {
      ++broken;
    }
  }
  r.check(broken == 0, "check_presentation n=" + num(n) + " relations=" +
                           num(pres.relations.size()) + " broken=" +
                           num(broken));
  EnumeratedMonoid m = froidure_pin(x_generators(n), x_letters(n), fp_cap);
  std::uint64_t oracle = cardinality_oracle(n);
  r.check(m.size() == oracle, "check_presentation n=" + num(n) + " closure=" +
                                  num(m.size()) + " diagrams=" + num(oracle));
  CongruenceTable tc = todd_coxeter(pres, tc_cap);
  r.check(tc.n_classes == m.size(), "check_presentation n=" + num(n) +
                                        " lhs=" + num(tc.n_classes) +
                                        " rhs=" + num(m.size()));
  r.note("since the relations hold, sending generators to diagrams extends");
  r.note("to a homomorphism from the presented monoid; the closure above");
  r.note("shows the images generate all " + num(oracle) +
         " block bijections, so it is onto; and a surjection between finite");
  r.note("sets of equal size is a bijection, hence an isomorphism.");
  return r;
}

Report verify_relations(int n) {
  Report r;
  if (n >= 3) {
    Presentation pres = relations_R(n);
    for (std::size_t i = 0; i < pres.relations.size(); ++i) {
      auto const& [u, v] = pres.relations[i];
      r.check(phi_eval(u, n) == phi_eval(v, n),
              "relation_R n=" + num(n) + " i=" + num(i) + " '" +
                  format_word(u) + "' = '" + format_word(v) + "'");
    }
  }
  Presentation fpres = relations_F(n);
  for (std::size_t i = 0; i < fpres.relations.size(); ++i) {
    auto const& [u, v] = fpres.relations[i];
    r.check(phi_eval(u, n) == phi_eval(v, n),
            "relation_F n=" + num(n) + " i=" + num(i) + " '" + format_word(u) +
                "' = '" + format_word(v) + "'");
  }
  if (n >= 3) {
    for (std::size_t i = 0; i < fpres.relations.size(); ++i) {
      auto const& [u, v] = fpres.relations[i];
      r.check(
          phi_eval(theta_subst(u), n) == phi_eval(theta_subst(v), n),
          "theta_transport n=" + num(n) + " i=" + num(i) + " '" +
              format_word(theta_subst(u)) + "' = '" +
              format_word(theta_subst(v)) + "'");
    }
  }
  return r;
}

Report verify_moore(int n, std::size_t tc_cap) {
  Report r;
  CongruenceTable tc = todd_coxeter(moore_presentation(n), tc_cap);
  r.check(tc.n_classes == factorial(n), "moore n=" + num(n) + " classes=" +
                                            num(tc.n_classes) + " expected=" +
                                            num(factorial(n)));
  return r;
}

Report verify_factorizable(int n, std::size_t tc_cap) {
  Report r;
  EnumeratedMonoid m = froidure_pin(x_generators(n), x_letters(n));
  std::vector<int> es = idempotents(m);
  std::vector<int> gs = units(m);
  std::set<int> eg;
  std::set<int> ge;
  for (int e : es) {
    for (int g : gs) {
      eg.insert(m.product(e, g));
      ge.insert(m.product(g, e));
    }
  }
  r.check(eg == ge,
          "factorizable n=" + num(n) + " EG=" + num(eg.size()) + " GE=" +
              num(ge.size()));
  std::set<int> uniform;
  for (int i = 0; i < static_cast<int>(m.size()); ++i) {
    if (m.elements[i].is_uniform()) {
      uniform.insert(i);
    }
  }
  r.check(eg == uniform, "factorizable n=" + num(n) + " EG=" + num(eg.size()) +
                             " uniform=" + num(uniform.size()));
  if (n == 3) {
    r.check(eg.size() == 16, "factorizable n=3 size=" + num(eg.size()) +
                                 " expected=16");
  }
  if (n <= 4) {
    CongruenceTable tc = todd_coxeter(relations_F(n), tc_cap);
    r.check(tc.n_classes == eg.size(), "factorizable n=" + num(n) +
                                           " classes=" + num(tc.n_classes) +
                                           " size=" + num(eg.size()));
  }
  return r;
}

Report verify_inverse_structure(int n, std::size_t n_samples) {
  Report r;
  EnumeratedMonoid m = n >= 3
                           ? froidure_pin(x_generators(n), x_letters(n))
                           : froidure_pin(f_generators(n), f_letters(n));
  int size = static_cast<int>(m.size());
  std::vector<int> es = idempotents(m);
  std::vector<int> gs = units(m);
  r.check(gs.size() == factorial(n),
          "units n=" + num(n) + " count=" + num(gs.size()) + " expected=" +
              num(factorial(n)));
  int structural_units = 0;
  for (auto const& b : m.elements) {
    structural_units += b.is_unit() ? 1 : 0;
  }
  r.check(structural_units == static_cast<int>(gs.size()),
          "units n=" + num(n) + " reachability=" + num(gs.size()) +
              " all_blocks_size_2=" + num(structural_units));
  r.check(es.size() == bell_count(n),
          "idempotents n=" + num(n) + " count=" + num(es.size()) +
              " expected=" + num(bell_count(n)));
  int commute_failures = 0;
  for (std::size_t i = 0; i < es.size(); ++i) {
    for (std::size_t j = i + 1; j < es.size(); ++j) {
      if (m.product(es[i], es[j]) != m.product(es[j], es[i])) {
        ++commute_failures;
      }
    }
  }
  r.check(commute_failures == 0, "idempotents_commute n=" + num(n) +
                                     " pairs=" +
                                     num(es.size() * (es.size() - 1) / 2));
  std::vector<int> flip(size);
  int flip_failures = 0;
  for (int a = 0; a < size; ++a) {
    flip[a] = m.index_of(m.elements[a].inverse());
    bool good = flip[a] != -1 &&
                m.product(m.product(a, flip[a]), a) == a &&
                m.product(m.product(flip[a], a), flip[a]) == flip[a];
    flip_failures += good ? 0 : 1;
  }
  r.check(flip_failures == 0,
          "inverse_exists n=" + num(n) + " elements=" + num(size));
  if (n <= 4) {
    int unique_failures = 0;
    for (int a = 0; a < size; ++a) {
      int witnesses = 0;
      for (int b = 0; b < size; ++b) {
        if (m.product(m.product(a, b), a) == a &&
            m.product(m.product(b, a), b) == b) {
          ++witnesses;
        }
      }
      unique_failures += witnesses == 1 ? 0 : 1;
    }
    r.check(unique_failures == 0, "inverse_unique n=" + num(n) +
                                      " exhaustive pairs=" +
                                      num(static_cast<std::uint64_t>(size) *
                                          size));
  } else {
    std::mt19937 rng(20260815u);
    std::uniform_int_distribution<int> pick(0, size - 1);
    int sampled_failures = 0;
    for (std::size_t k = 0; k < n_samples; ++k) {
      int a = pick(rng);
      int b = pick(rng);
      if (b == flip[a]) {
        continue;
      }
      if (m.product(m.product(a, b), a) == a &&
          m.product(m.product(b, a), b) == b) {
        ++sampled_failures;
      }
    }
    r.check(sampled_failures == 0,
            "inverse_unique n=" + num(n) + " sampled=" + num(n_samples));
  }
  r.check(is_inverse_monoid(m), "inverse_monoid n=" + num(n));
  return r;
}

Report verify_prop_conditions(int n) {
  if (n < 3 || n > 5) {
    throw DegreeTooSmallError("verify_prop_conditions supports 3 <= n <= 5");
  }
  Report r;
  std::vector<BlockBijection> gs = all_units(n);
  BlockBijection e = epsilon(n);
  BlockBijection x = gen_x(n);
  int c1_failures = 0;
  int c2_failures = 0;
  for (auto const& g : gs) {
    BlockBijection c = conjugate(e, g);
    if (compose(c, e) != compose(e, c)) {
      ++c1_failures;
    }
    if (!compose(compose(x, c), x).is_uniform()) {
      ++c2_failures;
    }
  }
  r.check(c1_failures == 0, "conjugates_of_e_commute_with_e n=" + num(n) +
                                " units=" + num(gs.size()));
  r.check(c2_failures == 0, "x_conj_x_uniform n=" + num(n) + " units=" +
                                num(gs.size()));

  std::vector<BlockBijection> x0{BlockBijection::identity(n)};
  std::unordered_set<BlockBijection> seen(x0.begin(), x0.end());
  for (auto const& g : gs) {
    BlockBijection c = conjugate(e, g);
    if (seen.insert(c).second) {
      x0.push_back(c);
    }
  }
  int commute_failures = 0;
  for (std::size_t i = 0; i < x0.size(); ++i) {
    for (std::size_t j = i + 1; j < x0.size(); ++j) {
      if (compose(x0[i], x0[j]) != compose(x0[j], x0[i])) {
        ++commute_failures;
      }
    }
  }
  r.check(commute_failures == 0,
          "squares_commute n=" + num(n) + " distinct=" + num(x0.size()));

  std::vector<BlockBijection> closure = x0;
  std::unordered_set<BlockBijection> members(closure.begin(), closure.end());
  for (std::size_t i = 0; i < closure.size(); ++i) {
    for (auto const& g : x0) {
      BlockBijection p = compose(closure[i], g);
      if (members.insert(p).second) {
        closure.push_back(p);
      }
    }
  }
  std::vector<BlockBijection> ys = gs;
  for (auto const& g : gs) {
    ys.push_back(conjugate(x, g));
  }
  int member_failures = 0;
  int idempotent_failures = 0;
  for (auto const& y : ys) {
    for (auto const& f : x0) {
      BlockBijection z = compose(compose(y.inverse(), f), y);
      if (!members.count(z)) {
        ++member_failures;
      }
      if (!z.is_idempotent()) {
        ++idempotent_failures;
      }
    }
  }
  r.check(idempotent_failures == 0, "conjugated_squares_idempotent n=" +
                                        num(n) + " checked=" +
                                        num(ys.size() * x0.size()));
  r.check(member_failures == 0,
          "conjugated_squares_in_closure n=" + num(n) + " closure=" +
              num(closure.size()) + " checked=" + num(ys.size() * x0.size()));
  return r;
}

Report verify_property_P(int n) {
  if (n < 3 || n > 5) {
    throw DegreeTooSmallError("verify_property_P supports 3 <= n <= 5");
  }
  Report r;
  BlockBijection e = epsilon(n);
  std::vector<BlockBijection> gs = all_units(n);
  PartitionEnumerator parts(n);
  Partition p;
  int checked = 0;
  int failures = 0;
  while (parts.next(p)) {
    if (p.n_blocks() == n) {
      continue;  // the identity idempotent
    }
    ++checked;
    BlockBijection f = BlockBijection::idempotent_of(p);
    bool found = false;
    for (auto const& g : gs) {
      BlockBijection h = conjugate(f, g);
      if (compose(compose(e, h), e) == h) {
        found = true;
        break;
      }
    }
    failures += found ? 0 : 1;
  }
  r.check(failures == 0,
          "property_P n=" + num(n) + " idempotents=" + num(checked));
  return r;
}

Report verify_table1(int n) {
  if (n < 5) {
    throw DegreeTooSmallError("verify_table1 needs degree >= 5");
  }
  Report r;
  Word const x{Letter::x()};
  for (int k = 1; k <= 5; ++k) {
    for (int l = 0; l <= 4; ++l) {
      Word pi = pi_word(k, l);
      Word lhs = concat(concat(concat(x, rev(pi)), kXX), concat(pi, x));
      Word rhs = table1_cell(std::min(k, 4), std::min(l, 3));
      r.check(phi_eval(lhs, n) == phi_eval(rhs, n),
              "table1 n=" + num(n) + " k=" + num(k) + " l=" + num(l) +
                  " rhs='" + format_word(rhs) + "'");
    }
  }
  return r;
}

Report verify_table2(int n) {
  if (n < 4) {
    throw DegreeTooSmallError("verify_table2 needs degree >= 4");
  }
  Report r;
  for (int i = 0; i <= 3; ++i) {
    for (int j = 1; j <= 4; ++j) {
      Word pi;
      if (j >= 2) pi.push_back(Letter::s(2));
      if (j >= 3) pi.push_back(Letter::s(3));
      if (i >= 1) pi.push_back(Letter::s(1));
      if (i >= 2) pi.push_back(Letter::s(2));
      Word lhs = concat(concat(kXX, pi), kXX);
      Word rhs = table2_cell(std::min(i, 2), std::min(j, 3));
      r.check(phi_eval(lhs, n) == phi_eval(rhs, n),
              "table2 n=" + num(n) + " i=" + num(i) + " j=" + num(j) +
                  " rhs='" + format_word(rhs) + "'");
    }
  }
  return r;
}

Report verify_local_iso(int n) {
  if (n < 4 || n > 5) {
    throw DegreeTooSmallError("verify_local_iso supports 4 <= n <= 5");
  }
  Report r;
  EnumeratedMonoid m = froidure_pin(x_generators(n), x_letters(n));
  int ei = m.index_of(epsilon(n));
  std::vector<int> local;
  for (int i = 0; i < static_cast<int>(m.size()); ++i) {
    if (m.product(m.product(ei, i), ei) == i) {
      local.push_back(i);
    }
  }
  std::uint64_t lower = cardinality_oracle(n - 1);
  r.check(local.size() == lower, "local_submonoid n=" + num(n) + " size=" +
                                     num(local.size()) + " expected=" +
                                     num(lower));
  std::unordered_map<int, BlockBijection> retract;
  std::unordered_set<BlockBijection> images;
  for (int i : local) {
    retract.emplace(i, upsilon(m.elements[i]));
    images.insert(retract.at(i));
  }
  r.check(images.size() == local.size() && images.size() == lower,
          "local_retraction_bijective n=" + num(n) + " images=" +
              num(images.size()));
  int failures = 0;
  for (int a : local) {
    for (int b : local) {
      if (retract.at(m.product(a, b)) !=
          compose(retract.at(a), retract.at(b))) {
        ++failures;
      }
    }
  }
  r.check(failures == 0,
          "local_retraction_multiplicative n=" + num(n) + " pairs=" +
              num(local.size() * local.size()));
  for (Letter c : x_letters(n - 1)) {
    Word w{c};
    BlockBijection via_substitution = upsilon(phi_eval(psi_subst(w), n));
    BlockBijection direct = phi_eval(w, n - 1);
    r.check(via_substitution == direct,
            "local_generator_words n=" + num(n) + " letter=" + format_word(w));
  }
  return r;
}

Report verify_normal_forms_3() {
  Report r;
  std::vector<Word> words = normal_forms_3();
  std::vector<BlockBijection> imgs;
  std::unordered_set<BlockBijection> distinct;
  for (Word const& w : words) {
    imgs.push_back(phi_eval(w, 3));
    distinct.insert(imgs.back());
  }
  r.check(words.size() == 25 && distinct.size() == 25,
          "normal_forms words=" + num(words.size()) + " distinct=" +
              num(distinct.size()));
  r.check(distinct.size() == cardinality_oracle(3),
          "normal_forms covered=" + num(distinct.size()) + " diagrams=" +
              num(cardinality_oracle(3)));
  std::vector<BlockBijection> gens = x_generators(3);
  int closure_failures = 0;
  for (auto const& img : imgs) {
    for (auto const& g : gens) {
      if (!distinct.count(compose(img, g))) {
        ++closure_failures;
      }
    }
  }
  r.check(closure_failures == 0, "normal_forms closed_under_generators");
  BlockBijection zero =
      phi_eval({Letter::x(), Letter::s(2), Letter::x()}, 3);
  int zero_failures = 0;
  for (auto const& g : gens) {
    if (compose(zero, g) != zero || compose(g, zero) != zero) {
      ++zero_failures;
    }
  }
  r.check(zero_failures == 0, "normal_forms zero='x s2 x'");
  return r;
}

Report verify_symmetric_words(int n, int max_len) {
  if (n < 3) {
    throw DegreeTooSmallError("verify_symmetric_words needs degree >= 3");
  }
  if (max_len < 0 || max_len > 8) {
    throw OutOfRangeError("verify_symmetric_words supports max_len <= 8");
  }
  Report r;
  std::vector<Letter> letters = x_letters(n);
  std::vector<BlockBijection> letter_imgs;
  for (Letter c : letters) {
    letter_imgs.push_back(phi_eval({c}, n));
  }
  std::uint64_t words = 0;
  std::uint64_t palindromes = 0;
  int rev_failures = 0;
  int law_failures = 0;
  for (int len = 0; len <= max_len; ++len) {
    std::vector<int> idx(len, 0);
    for (;;) {
      BlockBijection v = BlockBijection::identity(n);
      BlockBijection vr = BlockBijection::identity(n);
      for (int i = 0; i < len; ++i) {
        v = compose(v, letter_imgs[idx[i]]);
        vr = compose(vr, letter_imgs[idx[len - 1 - i]]);
      }
      ++words;
      if (vr != v.inverse()) {
        ++rev_failures;
      }
      bool palindrome = true;
      for (int i = 0; i < len / 2; ++i) {
        palindrome = palindrome && idx[i] == idx[len - 1 - i];
      }
      if (palindrome) {
        ++palindromes;
        BlockBijection vv = compose(v, v);
        if (compose(vv, v) != v || !vv.is_idempotent()) {
          ++law_failures;
        }
      }
      int pos = len - 1;
      while (pos >= 0 && idx[pos] == n - 1) {
        idx[pos--] = 0;
      }
      if (pos < 0) {
        break;
      }
      ++idx[pos];
    }
  }
  r.check(rev_failures == 0, "reversal_is_inversion n=" + num(n) +
                                 " max_len=" + num(max_len) + " words=" +
                                 num(words));
  r.check(law_failures == 0, "symmetric_word_laws n=" + num(n) +
                                 " palindromes=" + num(palindromes));
  return r;
}

}  // namespace dsim
