// Acceptance gate: ten checks covering enumeration, presentations, structure
// and the word calculus. Prints one PASS/FAIL line per check and exits
// nonzero if any fails. All comparisons are exact; the only tolerances are
// the wall-clock budgets pinned below.

#include <chrono>
#include <cstdint>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "dsim/block_bijection.hpp"
#include "dsim/froidure_pin.hpp"
#include "dsim/structure.hpp"
#include "dsim/todd_coxeter.hpp"
#include "dsim/verify.hpp"
#include "dsim/words.hpp"

using namespace dsim;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

constexpr double kBudgetClosure = 10.0;    // criterion 1, all degrees together
constexpr double kBudgetTcSmall = 5.0;     // criterion 2, degrees 3 and 4
constexpr double kBudgetTcLarge = 120.0;   // criterion 2, degree 5
constexpr std::size_t kTcCapLarge = 1000000;  // definitions, degree 5
constexpr std::uint64_t kSizes[] = {0, 1, 3, 25, 339, 6721};

// 1. Breadth-first closure of the generators yields exactly as many elements
// as there are block bijections, for degrees 2 through 5, within budget.
bool closure_sizes(std::string& detail) {
  Clock::time_point t0 = Clock::now();
  bool ok = true;
  std::ostringstream os;
  for (int n = 2; n <= 5; ++n) {
    EnumeratedMonoid m = n == 2 ? froidure_pin(f_generators(2), f_letters(2))
                                : froidure_pin(x_generators(n), x_letters(n));
    ok = ok && m.size() == kSizes[n] && m.size() == cardinality_oracle(n);
    os << (n > 2 ? ", " : "") << "n=" << n << ":" << m.size();
  }
  double dt = seconds_since(t0);
  ok = ok && dt <= kBudgetClosure;
  os << " in " << std::fixed << std::setprecision(2) << dt << "s";
  detail = os.str();
  return ok;
}

// 2. The presented monoid has the same number of classes, for degrees 3
// through 5, within budget.
bool presentation_sizes(std::string& detail) {
  std::ostringstream os;
  Clock::time_point t0 = Clock::now();
  bool ok = todd_coxeter(relations_R(3)).n_classes == kSizes[3] &&
            todd_coxeter(relations_R(4)).n_classes == kSizes[4];
  double dt_small = seconds_since(t0);
  ok = ok && dt_small <= kBudgetTcSmall;

  t0 = Clock::now();
  ok = ok && todd_coxeter(relations_R(5), kTcCapLarge).n_classes == kSizes[5];
  double dt_large = seconds_since(t0);
  ok = ok && dt_large <= kBudgetTcLarge;

  os << "n=3,4 in " << std::fixed << std::setprecision(2) << dt_small
     << "s, n=5 in " << dt_large << "s";
  detail = os.str();
  return ok;
}

// 3. Every ground instance of both relation families holds under the
// generator assignment: the full family for degrees 3..6, the factorizable
// family (t as the corner idempotent) for degrees 2..6.
bool relations_hold(std::string& detail) {
  bool ok = true;
  int checked = 0;
  for (int n = 3; n <= 6; ++n) {
    for (auto const& [lhs, rhs] : relations_R(n).relations) {
      ok = ok && phi_eval(lhs, n) == phi_eval(rhs, n);
      ++checked;
    }
  }
  for (int n = 2; n <= 6; ++n) {
    for (auto const& [lhs, rhs] : relations_F(n).relations) {
      ok = ok && phi_eval(lhs, n) == phi_eval(rhs, n);
      ++checked;
    }
  }
  detail = std::to_string(checked) + " relation instances";
  return ok;
}

// 4. The braid-and-involution relations alone present the symmetric group.
bool moore_sizes(std::string& detail) {
  bool ok = true;
  std::ostringstream os;
  for (int n = 3; n <= 5; ++n) {
    std::size_t got = todd_coxeter(moore_presentation(n)).n_classes;
    ok = ok && got == factorial(n);
    os << (n > 3 ? ", " : "") << "n=" << n << ":" << got;
  }
  detail = os.str();
  return ok;
}

// 5. The factorizable part at degree 3: E*G = G*E = the 16 uniform
// elements, and the factorizable presentation has 16 classes.
bool factorizable_part_checks(std::string& detail) {
  Report r = verify_factorizable(3);
  detail = std::to_string(r.lines.size()) + " checks";
  return r.ok;
}

// 6. Inverse structure at degrees 3..5: n! units, one idempotent per
// partition (5, 15, 52), commuting idempotents, unique inverses (exhaustive
// through degree 4, at least 10^4 sampled pairs at degree 5).
bool inverse_structure(std::string& detail) {
  bool ok = verify_inverse_structure(3).ok && verify_inverse_structure(4).ok &&
            verify_inverse_structure(5, 10000).ok;
  detail = "degrees 3, 4 exhaustive; degree 5 sampled";
  return ok;
}

// 7. The local submonoid at the corner idempotent retracts bijectively and
// multiplicatively onto the monoid one degree down, matching the
// degree-lowering substitution on every generator letter.
bool local_retraction(std::string& detail) {
  bool ok = verify_local_iso(4).ok && verify_local_iso(5).ok;
  detail = "degrees 4 and 5";
  return ok;
}

// 8. The two case tables of the word calculus: every case class at its
// boundary representative and one value beyond it.
bool case_tables(std::string& detail) {
  Report t1 = verify_table1(5);
  Report t2a = verify_table2(4);
  Report t2b = verify_table2(5);
  detail = std::to_string(t1.lines.size() + t2a.lines.size() +
                          t2b.lines.size()) +
           " table cells";
  return t1.ok && t2a.ok && t2b.ok;
}

// 9. The conjugation closure conditions, the conjugate-into-local-submonoid
// property, and the reversal/symmetry laws for short words.
bool property_suites(std::string& detail) {
  bool ok = verify_prop_conditions(3).ok && verify_prop_conditions(4).ok &&
            verify_property_P(3).ok && verify_property_P(4).ok &&
            verify_symmetric_words(4, 6).ok;
  detail = "degrees 3, 4 exhaustive; words to length 6";
  return ok;
}

// 10. The 25 listed degree 3 normal forms are a transversal of the monoid,
// closed under right multiplication, with an absorbing zero.
bool normal_forms(std::string& detail) {
  Report r = verify_normal_forms_3();
  detail = std::to_string(r.lines.size()) + " checks";
  return r.ok;
}

}  // namespace

int main() {
  struct Criterion {
    char const* name;
    bool (*fn)(std::string&);
  };
  Criterion const criteria[] = {
      {"closure sizes 3, 25, 339, 6721 match the counting oracle",
       closure_sizes},
      {"presented monoid has 25, 339, 6721 classes", presentation_sizes},
      {"all defining relations hold in the diagram monoid", relations_hold},
      {"braid relations alone present the symmetric group", moore_sizes},
      {"factorizable part is the 16 uniform elements at degree 3",
       factorizable_part_checks},
      {"inverse structure: units, idempotents, unique inverses",
       inverse_structure},
      {"local submonoid retracts onto the monoid one degree down",
       local_retraction},
      {"case tables of the word calculus hold", case_tables},
      {"conjugation closure, local conjugates, word symmetry",
       property_suites},
      {"the 25 degree-3 normal forms are a transversal", normal_forms},
  };

  bool all_ok = true;
  int id = 0;
  for (auto const& c : criteria) {
    ++id;
    std::string detail;
    Clock::time_point t0 = Clock::now();
    bool ok = false;
    try {
      ok = c.fn(detail);
    } catch (std::exception const& ex) {
      detail = std::string("exception: ") + ex.what();
    }
    double dt = seconds_since(t0);
    std::cout << std::setw(2) << id << ". " << c.name << ": "
              << (ok ? "PASS" : "FAIL") << " [" << std::fixed
              << std::setprecision(2) << dt << "s"
              << (detail.empty() ? "" : "; " + detail) << "]\n";
    all_ok = all_ok && ok;
  }
  std::cout << (all_ok ? "all criteria passed" : "some criteria FAILED")
            << "\n";
  return all_ok ? 0 : 1;
}
