#ifndef LATAGG_IO_HPP
#define LATAGG_IO_HPP

#include <string>
#include <string_view>

#include "latagg/aggregation.hpp"
#include "latagg/lattice.hpp"
#include "latagg/relation.hpp"

namespace latagg {

// .lat: `#` comments; first content line `elements <t1> ... <tk>`; then one
// `cover <x> <y>` line per cover pair (y covers x). Element order in the
// elements line fixes the indices.
Lattice parse_lat(std::string_view text);
std::string to_lat_text(const Lattice& L);

// .fun: `arity <n>` line, then `map <x1> ... <xn> -> <y>` for every tuple
// in lexicographic element-index order; `#` comments allowed. Parsing
// validates the aggregation invariants.
AggTable parse_fun(const Lattice& L, std::string_view text);
std::string to_fun_text(const Lattice& L, const AggTable& f);

// DOT digraph `hasse`, rankdir bottom-to-top, nodes in input order, one
// edge per cover pair in input order.
std::string to_dot(const Lattice& L);

// One `~ <x> <y>` line per off-diagonal unordered pair, sorted by index;
// the diagonal is implied.
std::string tolerance_pairs_text(const Lattice& L, const Relation& rel);

}  // namespace latagg

#endif  // LATAGG_IO_HPP
