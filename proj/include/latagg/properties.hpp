#ifndef LATAGG_PROPERTIES_HPP
#define LATAGG_PROPERTIES_HPP

#include "latagg/lattice.hpp"

namespace latagg {

// All predicates are exhaustive scans; desk-scale lattices make O(n^3)
// irrelevant and the direct definitions are their own documentation.

// a <= c implies a v (b ^ c) == (a v b) ^ c, over all triples.
bool is_modular(const Lattice& L);
// Every x has y with x ^ y = bottom and x v y = top.
bool is_complemented(const Lattice& L);
// Every interval [a, b] is complemented.
bool is_relatively_complemented(const Lattice& L);

bool atoms_join_is_top(const Lattice& L);
bool coatoms_meet_is_bottom(const Lattice& L);

struct PropertyProfile {
  bool simple = false;
  bool modular = false;
  bool complemented = false;
  bool relatively_complemented = false;
  bool atoms_join_is_top = false;
  bool coatoms_meet_is_bottom = false;
  bool tolerance_trivial = false;
  bool smallest_agg = false;
};

// Computes every field and asserts the implication set between them before
// returning; a violated implication can only mean a library bug and raises
// ImplicationViolation.
PropertyProfile profile(const Lattice& L);

// The cross-field implications, exposed so test suites can re-assert them.
void check_profile_implications(const PropertyProfile& p);

}  // namespace latagg

#endif  // LATAGG_PROPERTIES_HPP
