// Structure of an enumerated monoid: idempotents, units, Green's relations
// and the factorizable part. All functions work on element indices of an
// EnumeratedMonoid.

#pragma once

#include <vector>

#include "dsim/froidure_pin.hpp"

namespace dsim {

// Indices e with e * e = e, ascending.
std::vector<int> idempotents(EnumeratedMonoid const& m);

// Indices of the invertible elements: those from which the identity is
// reachable in the right Cayley graph. Ascending.
std::vector<int> units(EnumeratedMonoid const& m);

// True iff every element is regular (some b satisfies a b a = a) and all
// idempotents commute; for finite monoids this characterizes inverse
// monoids, which have exactly one such b per element with b a b = b.
bool is_inverse_monoid(EnumeratedMonoid const& m);

// Identifiers of the R-classes (strongly connected components of the right
// Cayley graph) and of the L-classes (same for the left graph).
std::vector<int> green_r_ids(EnumeratedMonoid const& m);
std::vector<int> green_l_ids(EnumeratedMonoid const& m);

// The H-class of a, i.e. the elements R- and L-related to a. Ascending.
std::vector<int> green_h_class(EnumeratedMonoid const& m, int a);

// True iff the H-class of a contains an idempotent, i.e. is a group.
bool is_completely_regular(EnumeratedMonoid const& m, int a);

// The set E(M) * G(M) of products of an idempotent and a unit, ascending.
std::vector<int> factorizable_part(EnumeratedMonoid const& m);

}  // namespace dsim
