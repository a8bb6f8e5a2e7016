// Coset-style enumeration of a finitely presented monoid.

#pragma once

#include <cstddef>
#include <vector>

#include "dsim/words.hpp"

namespace dsim {

// The multiplication table of the presented monoid on its classes. Class 0
// is the class of the empty word; table[c][a] is the class of (a word for c)
// followed by letter a. Classes are numbered consecutively in the order in
// which their first representatives were defined, so the table is identical
// across runs on the same presentation.
struct CongruenceTable {
  std::size_t n_classes = 0;
  std::vector<std::vector<int>> table;
};

// Enumerates the quotient of the free monoid on the presentation's alphabet
// by the congruence its relations generate. Terminates whenever that
// quotient is finite and at most cap classes are ever defined; throws
// CapExceededError past the cap. cap bounds definitions, including classes
// later merged away, so a run may need a cap a few times the final size.
CongruenceTable todd_coxeter(Presentation const& pres,
                             std::size_t cap = 100000);

}  // namespace dsim
