#ifndef LATAGG_RELATION_HPP
#define LATAGG_RELATION_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "latagg/lattice.hpp"

namespace latagg {

using ElemPair = std::pair<Elem, Elem>;

// all_tolerances refuses lattices larger than this by default.
inline constexpr int kToleranceEnumMaxElements = 10;

// A binary relation on a lattice's element set, stored as one bitset row
// per element. Plain data; the defining conditions of the refinements
// below are checked by the predicates and the checked constructors.
class Relation {
 public:
  Relation() = default;
  explicit Relation(int n) : n_(n), rows_(static_cast<size_t>(n), 0) {}

  static Relation identity(int n);
  static Relation full(int n);

  int size() const { return n_; }
  bool test(Elem x, Elem y) const { return (rows_[static_cast<size_t>(x)] >> y) & 1u; }
  void set(Elem x, Elem y) { rows_[static_cast<size_t>(x)] |= 1ull << y; }
  uint64_t row(Elem x) const { return rows_[static_cast<size_t>(x)]; }

  int pair_count() const;
  bool contains(const Relation& other) const;
  // All set pairs in row-major order.
  std::vector<ElemPair> pairs() const;
  // Off-diagonal pairs (x, y) with x < y, for symmetric relations' output.
  std::vector<ElemPair> upper_pairs() const;

  Relation united(const Relation& other) const;

  bool operator==(const Relation& other) const = default;
  // Lexicographic on rows; used only to fix deterministic orderings.
  bool operator<(const Relation& other) const { return rows_ < other.rows_; }

 private:
  int n_ = 0;
  std::vector<uint64_t> rows_;
};

bool is_reflexive(const Relation& r);
bool is_symmetric(const Relation& r);
// (a,b),(c,d) in R implies (a v c, b v d) and (a ^ c, b ^ d) in R.
bool is_compatible(const Lattice& L, const Relation& r);
bool is_tolerance(const Lattice& L, const Relation& r);
bool is_congruence(const Lattice& L, const Relation& r);

// (x,y) in compose(a,b) iff (x,z) in a and (z,y) in b for some z.
Relation compose(const Relation& a, const Relation& b);
Relation relation_inverse(const Relation& r);

// A reflexive, symmetric, compatible relation. The constructor re-checks
// the defining conditions; the closure algorithms produce these by
// construction, so a failure here is a library bug.
class Tolerance : public Relation {
 public:
  Tolerance(const Lattice& L, Relation r);
};

// A transitive tolerance.
class Congruence : public Tolerance {
 public:
  Congruence(const Lattice& L, Relation r);
};

// Least tolerance containing the seed pairs: the subuniverse of L^2
// generated by seed, its inverse and the diagonal under componentwise join
// and meet, computed by a FIFO worklist in index order.
Tolerance tolerance_generated_by(const Lattice& L, std::span<const ElemPair> seed);

// Least congruence containing the seed pairs.
Congruence congruence_generated_by(const Lattice& L, std::span<const ElemPair> seed);

// Least congruence containing a tolerance. A single relational-power
// closure suffices: composition preserves compatibility.
Congruence transitive_closure(const Lattice& L, const Tolerance& t);

// Subuniverse of L^2 generated by the diagonal plus the seed pairs, without
// symmetrizing the seed.
Relation diagonal_sublattice_generated_by(const Lattice& L, std::span<const ElemPair> seed);

// True iff every congruence is trivial; decided by generating from each
// cover pair (any nontrivial congruence contains some cover pair's square).
bool is_simple(const Lattice& L);

struct ToleranceTriviality {
  bool trivial = false;
  // A nontrivial tolerance when trivial is false.
  std::optional<Tolerance> witness;
};

// True iff the only tolerances are the diagonal and the full relation,
// decided over cover-pair generators.
ToleranceTriviality has_only_trivial_tolerances(const Lattice& L);

// Every tolerance, as the join-closure of the pair-generated tolerances.
// Sorted by pair count, then by matrix rows. Throws BoundExceeded above
// max_elements.
std::vector<Tolerance> all_tolerances(const Lattice& L,
                                      int max_elements = kToleranceEnumMaxElements);

}  // namespace latagg

#endif  // LATAGG_RELATION_HPP
