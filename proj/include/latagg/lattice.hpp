#ifndef LATAGG_LATTICE_HPP
#define LATAGG_LATTICE_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "latagg/errors.hpp"

namespace latagg {

// Element identity is the dense index 0..n-1 in declaration order.
using Elem = int;

using CoverPair = std::pair<Elem, Elem>;  // (lo, hi): hi covers lo

// A validated finite bounded lattice. Immutable after construction; all
// queries are table lookups or bitset scans over precomputed data, so a
// Lattice may be shared freely across threads.
//
// Construction validates everything eagerly: acyclic cover relation that is
// its own transitive reduction, unique least/greatest element, and existence
// of all binary joins and meets. Every later operation assumes validity.
class Lattice {
 public:
  // Builds and fully validates a lattice from its cover relation.
  // Throws BadParam, CycleError, RedundantCover, NotBounded, NotALattice.
  static Lattice from_covers(std::vector<std::string> names,
                             std::vector<CoverPair> covers);

  int size() const { return static_cast<int>(names_.size()); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(Elem x) const { return names_[static_cast<size_t>(x)]; }
  // Index of a named element; throws BadParam if unknown.
  Elem index_of(const std::string& name) const;

  const std::vector<CoverPair>& covers() const { return covers_; }

  Elem bottom() const { return bottom_; }
  Elem top() const { return top_; }

  bool leq(Elem x, Elem y) const { return (up_[static_cast<size_t>(x)] >> y) & 1u; }
  bool lt(Elem x, Elem y) const { return x != y && leq(x, y); }
  Elem join(Elem x, Elem y) const { return join_[static_cast<size_t>(x * size() + y)]; }
  Elem meet(Elem x, Elem y) const { return meet_[static_cast<size_t>(x * size() + y)]; }

  // Up-set / down-set of an element as bitmasks over element indices.
  uint64_t up_mask(Elem x) const { return up_[static_cast<size_t>(x)]; }
  uint64_t down_mask(Elem x) const { return down_[static_cast<size_t>(x)]; }

  // Nonbottom elements covering exactly one element.
  std::vector<Elem> join_irreducibles() const;
  // Unique lower cover of a join-irreducible; throws NotJoinIrreducible.
  Elem lower_cover_of(Elem a) const;

  std::vector<Elem> atoms() const;
  std::vector<Elem> coatoms() const;

  // {z : x <= z <= y}; throws NotComparable unless x <= y.
  std::vector<Elem> interval(Elem x, Elem y) const;
  // {z : z >= a}
  std::vector<Elem> principal_filter(Elem a) const;

  // Element indices in an order compatible with <= (bottom first). Sorted by
  // height (longest chain from bottom), ties by index, so it is deterministic.
  const std::vector<Elem>& linear_extension() const { return linext_; }

  void check_element(Elem x) const {
    if (x < 0 || x >= size()) throw BadParam("element index out of range");
  }

 private:
  Lattice() = default;

  std::vector<std::string> names_;
  std::vector<CoverPair> covers_;
  std::vector<uint64_t> up_;    // up_[x] bit y set iff x <= y
  std::vector<uint64_t> down_;  // down_[x] bit y set iff y <= x
  std::vector<Elem> join_;
  std::vector<Elem> meet_;
  std::vector<Elem> linext_;
  Elem bottom_ = 0;
  Elem top_ = 0;
};

// Rejects lattices with fewer than two elements; the aggregation-side
// operations presuppose distinguishable bounds.
void require_nondegenerate(const Lattice& L);

}  // namespace latagg

#endif  // LATAGG_LATTICE_HPP
