#ifndef LATAGG_CATALOG_HPP
#define LATAGG_CATALOG_HPP

#include <string>
#include <vector>

#include "latagg/lattice.hpp"
#include "latagg/properties.hpp"

namespace latagg {

inline constexpr int kEnumerationMaxElements = 7;
inline constexpr int kEnumerationOverrideMax = 8;

// Named example lattices:
//   chain-<k>  k-element chain (k >= 2)
//   mn-<k>     bottom, k pairwise incomparable atoms, top (k >= 3)
//   bool-<k>   Boolean cube 2^k (1 <= k <= 4)
//   glued-m3   two M_3 copies sharing a cover pair; see below
// Throws UnknownBuiltin / BadParam.
//
// glued-m3 is checked on every construction: its two five-element blocks
// must be sublattices isomorphic to M_3, the union of their squares must be
// a tolerance distinct from the diagonal and the full relation, and the
// lattice must be simple. A failure means the reconstruction is wrong and
// raises InternalInconsistency.
Lattice builtin(const std::string& name);

// Order matrix (row-major, 0/1 bytes) minimized lexicographically over all
// element relabelings; equal exactly for isomorphic lattices.
std::vector<uint8_t> canonical_order_matrix(const Lattice& L);

// 16 lowercase hex chars: FNV-1a 64-bit over the canonical matrix bytes.
std::string canonical_hash_hex(const Lattice& L);

// One representative per isomorphism class of n-element bounded lattices,
// built from its canonical matrix and ordered by canonical matrix bytes.
// n up to 7, or 8 when allow_eight is set; throws BoundExceeded beyond.
std::vector<Lattice> enumerate_lattices(int n, bool allow_eight = false);

enum class Provenance { example, constructed, enumerated };

struct CatalogEntry {
  std::string name;
  Lattice lattice;
  Provenance provenance;
  PropertyProfile profile;
  std::string canon_hash;
};

// enumerate_lattices(n) with profiles; every entry's implication set is
// asserted. Requires n >= 2 (profiles are undefined on a point).
std::vector<CatalogEntry> census(int n, bool allow_eight = false);

// Tab-separated: index, element count, canonical hash, then Y/N for the
// eight profile fields in declaration order.
std::string census_line(int index, const CatalogEntry& entry);

}  // namespace latagg

#endif  // LATAGG_CATALOG_HPP
