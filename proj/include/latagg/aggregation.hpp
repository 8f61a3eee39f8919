#ifndef LATAGG_AGGREGATION_HPP
#define LATAGG_AGGREGATION_HPP

#include <cstdint>
#include <map>
#include <optional>

#include "latagg/polynomial.hpp"
#include "latagg/relation.hpp"

namespace latagg {

inline constexpr int kUnaryAggEnumMaxElements = 6;
inline constexpr size_t kMaxAggTuples = 4096;

// A total n-ary function on a lattice that is nondecreasing in every
// argument and maps the all-bottom tuple to bottom and the all-top tuple
// to top. Construct through make_aggregation, which checks both conditions.
struct AggTable {
  FunctionTable table;
};

AggTable make_aggregation(const Lattice& L, FunctionTable table);

// The characteristic function of the principal filter of a, except that
// bottom always maps to bottom: value is top iff x >= a and x != bottom.
AggTable chi(const Lattice& L, Elem a);

// Searches for a unary polynomial p with p(b) = bottom and p(a) = top,
// where b is the unique lower cover of the join-irreducible a, by closing
// the diagonal of L^2 together with (b, a) under componentwise join/meet
// while tracking witness terms. On success returns p(x ^ a), which equals
// chi(L, a) pointwise; otherwise nullopt (chi_a is not a polynomial).
std::optional<Term> synthesize_chi_polynomial(const Lattice& L, Elem a);

// Combines join-irreducible witnesses into a chi term for any element:
// the meet over {a in J(L) : a <= c} for c != bottom, the join over atoms
// for c = bottom. Throws MissingWitness when a needed entry is absent.
Term chi_for_any_element(const Lattice& L, Elem c, const std::map<Elem, Term>& chi_irr);

struct DecisionReport {
  bool smallest = false;
  // One witness per join-irreducible when smallest.
  std::map<Elem, Term> chi_witnesses;
  // A tolerance other than the diagonal and the full relation otherwise.
  std::optional<Tolerance> tolerance_witness;
};

// Decides whether every aggregation function on L is a 0,1-preserving
// polynomial. Runs two independent procedures (tolerance triviality over
// cover pairs, and chi synthesis for every join-irreducible) and demands
// that they agree; disagreement raises InternalInconsistency.
DecisionReport decide_smallest_agg(const Lattice& L);

// The explicit polynomial representation of an aggregation function over a
// smallest-class lattice: the join over all nonzero tuples a of
// f(a) ^ the meet of chi_{a_i}(x_i) over nonzero coordinates i.
// Requires report.smallest; the result equals f pointwise.
Term represent_aggregation(const Lattice& L, const AggTable& f, const DecisionReport& report);

// Extensional membership test against the unary/binary polynomial closure.
// Arity 1 or 2 only.
bool is_aggregation_polynomial(const Lattice& L, const AggTable& f);

// All monotone boundary-preserving unary tables, in lexicographic order of
// their value vectors. Throws BoundExceeded above max_elements.
std::vector<AggTable> enumerate_unary_aggregations(const Lattice& L,
                                                   int max_elements = kUnaryAggEnumMaxElements);

// A seed-deterministic random aggregation function: tuple values are drawn
// along a linear extension of L^n, uniformly from the filter of the join of
// the already-assigned covered tuples, with the boundary tuples forced.
AggTable random_aggregation(const Lattice& L, int arity, uint64_t seed);

}  // namespace latagg

#endif  // LATAGG_AGGREGATION_HPP
