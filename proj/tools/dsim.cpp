// Command line interface to the block bijection library.
//
// Exit codes: 0 on success and passing checks, 1 when a verification suite
// prints a FAIL line, 2 for unusable input (parse errors, unknown options,
// degrees outside a suite's range) or an enumeration that hit its cap.

#include <cstdlib>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "dsim/block_bijection.hpp"
#include "dsim/errors.hpp"
#include "dsim/froidure_pin.hpp"
#include "dsim/text.hpp"
#include "dsim/verify.hpp"
#include "dsim/words.hpp"

namespace {

std::size_t tc_cap_from_env() {
  char const* value = std::getenv("DSIM_TC_CAP");
  if (value == nullptr) {
    return 100000;
  }
  try {
    return std::stoull(value);
  } catch (std::exception const&) {
    throw dsim::ParseError("DSIM_TC_CAP is not a number");
  }
}

int run_verify(int n, std::string const& suite) {
  using namespace dsim;
  if (n < 2) {
    throw ParseError("verify needs degree >= 2");
  }
  std::size_t cap = tc_cap_from_env();
  bool all = suite == "all";
  Report report;
  bool ran = false;

  if (suite == "relations" || all) {
    report.merge(verify_relations(n));
    if (n >= 3) {
      report.merge(verify_symmetric_words(n, n <= 4 ? 6 : 4));
    }
    ran = true;
  }
  if (suite == "presentation" || all) {
    if (n >= 3) {
      report.merge(check_presentation(n, cap));
      report.merge(verify_moore(n, cap));
      ran = true;
    } else if (!all) {
      throw ParseError("presentation checks need degree >= 3");
    } else {
      report.note("presentation checks skipped, need degree >= 3");
    }
  }
  if (suite == "tables" || all) {
    if (n >= 4) {
      report.merge(verify_table2(n));
      ran = true;
    } else if (!all) {
      throw ParseError("table checks need degree >= 4");
    } else {
      report.note("table2 skipped, needs degree >= 4");
    }
    if (n >= 5) {
      report.merge(verify_table1(n));
    } else {
      report.note("table1 skipped, needs degree >= 5");
    }
  }
  if (suite == "local" || all) {
    if (n >= 4 && n <= 5) {
      report.merge(verify_local_iso(n));
      ran = true;
    } else if (!all) {
      throw ParseError("local submonoid checks run at degree 4 or 5");
    } else {
      report.note("local submonoid checks skipped, run at degree 4 or 5");
    }
  }
  if (suite == "normal-forms" || all) {
    report.merge(verify_normal_forms_3());
    ran = true;
  }
  if (suite == "inverse" || all) {
    report.merge(verify_inverse_structure(n));
    if (n >= 3) {
      report.merge(verify_factorizable(n, cap));
    }
    if (n >= 3 && n <= 5) {
      report.merge(verify_prop_conditions(n));
      report.merge(verify_property_P(n));
    }
    ran = true;
  }
  if (!ran) {
    throw dsim::ParseError("unknown suite '" + suite + "'");
  }
  std::cout << report.text();
  return report.ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"block bijections: products, words, enumeration, checks"};
  app.require_subcommand(1);

  int degree = 0;
  std::string lhs;
  std::string rhs;
  std::string word_text;
  std::string suite = "all";
  std::string gens = "auto";
  bool dot = false;
  bool elements = false;

  auto* mul = app.add_subcommand("mul", "product of two block bijections");
  mul->add_option("n", degree, "degree")->required();
  mul->add_option("a", lhs, "left factor, e.g. \"1,2;3|3;1,2\"")->required();
  mul->add_option("b", rhs, "right factor")->required();

  auto* inv = app.add_subcommand("inv", "inverse of a block bijection");
  inv->add_option("n", degree, "degree")->required();
  inv->add_option("a", lhs, "element")->required();

  auto* eval = app.add_subcommand("eval", "evaluate a word over the generators");
  eval->add_option("n", degree, "degree")->required();
  eval->add_option("word", word_text, "e.g. \"x s2 x\" or \"sigma\"")->required();

  auto* render = app.add_subcommand("render", "draw a block bijection");
  render->add_option("n", degree, "degree")->required();
  render->add_option("a", lhs, "element")->required();
  render->add_flag("--dot", dot, "emit graphviz source instead of text rows");

  auto* enumerate = app.add_subcommand("enumerate", "generate the whole monoid");
  enumerate->add_option("n", degree, "degree")->required();
  enumerate->add_option("--gens", gens, "xs (default for degree >= 3) or f")
      ->check(CLI::IsMember({"auto", "xs", "f"}));
  enumerate->add_flag("--elements", elements, "print one element per line");

  auto* card = app.add_subcommand("card", "count block bijections directly");
  card->add_option("n", degree, "degree")->required();

  auto* verify = app.add_subcommand("verify", "run verification suites");
  verify->add_option("n", degree, "degree")->required();
  verify->add_option("suite", suite,
                     "relations | presentation | tables | local | "
                     "normal-forms | inverse | all");

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    using namespace dsim;
    if (degree < 1) {
      throw ParseError("degree must be >= 1");
    }
    if (mul->parsed()) {
      BlockBijection a = parse_block_bijection(degree, lhs);
      BlockBijection b = parse_block_bijection(degree, rhs);
      std::cout << format_block_bijection(compose(a, b)) << '\n';
    } else if (inv->parsed()) {
      BlockBijection a = parse_block_bijection(degree, lhs);
      std::cout << format_block_bijection(a.inverse()) << '\n';
    } else if (eval->parsed()) {
      std::cout << format_block_bijection(phi_eval(parse_word(word_text),
                                                   degree))
                << '\n';
    } else if (render->parsed()) {
      BlockBijection a = parse_block_bijection(degree, lhs);
      std::cout << (dot ? render_dot(a) : render_ascii(a));
    } else if (enumerate->parsed()) {
      if (gens == "auto") {
        gens = degree >= 3 ? "xs" : "f";
      }
      EnumeratedMonoid m =
          gens == "xs" ? froidure_pin(x_generators(degree), x_letters(degree))
                       : froidure_pin(f_generators(degree), f_letters(degree));
      std::cout << "size=" << m.size() << '\n';
      if (elements) {
        for (auto const& b : m.elements) {
          std::cout << format_block_bijection(b) << '\n';
        }
      }
    } else if (card->parsed()) {
      std::cout << cardinality_oracle(degree) << '\n';
    } else if (verify->parsed()) {
      return run_verify(degree, suite);
    }
  } catch (dsim::Error const& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
