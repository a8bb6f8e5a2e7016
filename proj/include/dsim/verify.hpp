// Machine checks of the algebraic claims: the presentation of the monoid of
// block bijections, the presentation of its factorizable part, the case
// tables behind the word calculus, and the inverse-monoid structure. Every
// suite returns a line-oriented report; a line is "<prefix> PASS" or
// "<prefix> FAIL", and comment lines start with '#'.

#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace dsim {

struct Report {
  bool ok = true;
  std::vector<std::string> lines;

  void check(bool cond, std::string prefix);
  void note(std::string line);
  void merge(Report const& other);
  std::string text() const;
};

// Number of block bijections of degree n, counted by filtering every
// partition of the 2n points for the both-rows condition. Independent of
// composition and of the enumeration engine. Requires 0 <= n <= 6.
std::uint64_t cardinality_oracle(int n);

// Number of partitions of an n-point set, by direct enumeration.
std::uint64_t bell_count(int n);

std::uint64_t factorial(int n);

// Checks that the defining relations hold under the generator assignment,
// that the closure of the generator images has as many elements as there
// are block bijections of degree n, and that the presented monoid has the
// same number of classes; together these show the presented monoid and the
// diagram monoid are isomorphic. Requires n >= 3.
Report check_presentation(int n, std::size_t tc_cap = 100000,
                          std::size_t fp_cap = 100000);

// Every ground instance of the two relation families holds under the
// generator images (the factorizable relations via t -> epsilon), and the
// t -> x^2 substitution transports the factorizable relations into
// relations that also hold. Requires n >= 2; the x-side checks run when
// n >= 3.
Report verify_relations(int n);

// The braid-and-involution presentation alone yields n! classes.
Report verify_moore(int n, std::size_t tc_cap = 100000);

// The factorizable part: products of idempotents and units, equality of
// E*G and G*E, coincidence with the uniform block bijections, and (for
// n <= 4) agreement with the class count of the factorizable presentation.
// Requires n >= 3.
Report verify_factorizable(int n, std::size_t tc_cap = 100000);

// Inverse-monoid structure at degree n: n! units, one idempotent per
// partition, commuting idempotents, and unique semigroup inverses
// (exhaustive for n <= 4, sampled plus flip-witness for larger n).
Report verify_inverse_structure(int n, std::size_t n_samples = 10000);

// The commuting and uniformity conditions on conjugates of x^2, and the
// closure conditions making {units} u {conjugates of x} a suitable
// generating set. Exhaustive over units; requires 3 <= n <= 5.
Report verify_prop_conditions(int n);

// Every non-identity idempotent has a conjugate inside the local submonoid
// at epsilon. Exhaustive over idempotents and units; requires 3 <= n <= 5.
Report verify_property_P(int n);

// The 16-case table rewriting x (x^2)^pi x over {x^2, s_i}: each case class
// is evaluated at its boundary representative and one value beyond it.
// Requires n >= 5.
Report verify_table1(int n);

// The 9-case table rewriting e pi e over the degree-lowered generator
// words. Requires n >= 4.
Report verify_table2(int n);

// The local submonoid at epsilon maps onto the monoid one degree down:
// the retraction is bijective and multiplicative on it, and matches the
// degree-lowering substitution on generator words. Requires 4 <= n <= 5.
Report verify_local_iso(int n);

// The 25 listed words hit every element of degree 3 exactly once, the image
// set is closed under right multiplication by generators, and x s_2 x is a
// two-sided zero.
Report verify_normal_forms_3();

// For every word w up to the given length, the reversed word evaluates to
// the inverse image; symmetric words w satisfy w^3 = w with w^2 idempotent.
// Requires n >= 3 and max_len <= 8.
Report verify_symmetric_words(int n, int max_len);

}  // namespace dsim
