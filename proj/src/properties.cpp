#include "latagg/properties.hpp"

#include "latagg/aggregation.hpp"
#include "latagg/relation.hpp"

namespace latagg {

bool is_modular(const Lattice& L) {
  for (Elem a = 0; a < L.size(); ++a)
    for (Elem c = 0; c < L.size(); ++c) {
      if (!L.leq(a, c)) continue;
      for (Elem b = 0; b < L.size(); ++b)
        if (L.join(a, L.meet(b, c)) != L.meet(L.join(a, b), c)) return false;
    }
  return true;
}

namespace {

bool interval_complemented(const Lattice& L, Elem lo, Elem hi) {
  for (Elem x = 0; x < L.size(); ++x) {
    if (!(L.leq(lo, x) && L.leq(x, hi))) continue;
    bool found = false;
    for (Elem y = 0; y < L.size() && !found; ++y) {
      if (!(L.leq(lo, y) && L.leq(y, hi))) continue;
      found = L.meet(x, y) == lo && L.join(x, y) == hi;
    }
    if (!found) return false;
  }
  return true;
}

}  // namespace

bool is_complemented(const Lattice& L) {
  return interval_complemented(L, L.bottom(), L.top());
}

bool is_relatively_complemented(const Lattice& L) {
  for (Elem lo = 0; lo < L.size(); ++lo)
    for (Elem hi = 0; hi < L.size(); ++hi)
      if (L.leq(lo, hi) && !interval_complemented(L, lo, hi)) return false;
  return true;
}

bool atoms_join_is_top(const Lattice& L) {
  require_nondegenerate(L);
  Elem acc = L.bottom();
  for (Elem a : L.atoms()) acc = L.join(acc, a);
  return acc == L.top();
}

bool coatoms_meet_is_bottom(const Lattice& L) {
  require_nondegenerate(L);
  Elem acc = L.top();
  for (Elem c : L.coatoms()) acc = L.meet(acc, c);
  return acc == L.bottom();
}

void check_profile_implications(const PropertyProfile& p) {
  auto fail = [](const char* what) { throw ImplicationViolation(what); };
  if (p.smallest_agg != p.tolerance_trivial)
    fail("smallest_agg must coincide with tolerance triviality");
  if (p.smallest_agg && !p.simple)
    fail("a smallest-class lattice must be simple");
  if (p.modular && p.complemented && !p.relatively_complemented)
    fail("modular complemented lattices must be relatively complemented");
  if (p.relatively_complemented && !p.complemented)
    fail("relatively complemented lattices must be complemented");
  if (p.simple && p.relatively_complemented && !p.smallest_agg)
    fail("simple relatively complemented lattices must be smallest-class");
  if (p.simple && (p.atoms_join_is_top || p.coatoms_meet_is_bottom) && !p.smallest_agg)
    fail("simple lattices with spanning atoms or coatoms must be smallest-class");
}

PropertyProfile profile(const Lattice& L) {
  require_nondegenerate(L);
  PropertyProfile p;
  p.simple = is_simple(L);
  p.modular = is_modular(L);
  p.complemented = is_complemented(L);
  p.relatively_complemented = is_relatively_complemented(L);
  p.atoms_join_is_top = atoms_join_is_top(L);
  p.coatoms_meet_is_bottom = coatoms_meet_is_bottom(L);
  p.tolerance_trivial = has_only_trivial_tolerances(L).trivial;
  p.smallest_agg = decide_smallest_agg(L).smallest;
  check_profile_implications(p);
  return p;
}

}  // namespace latagg
