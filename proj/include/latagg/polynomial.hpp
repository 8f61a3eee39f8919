#ifndef LATAGG_POLYNOMIAL_HPP
#define LATAGG_POLYNOMIAL_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "latagg/lattice.hpp"

namespace latagg {

inline constexpr int kUnaryCloneMaxElements = 8;
inline constexpr int kBinaryCloneMaxElements = 5;
inline constexpr size_t kMaxTableEntries = size_t{1} << 20;
// Hard ceiling on closure size. Lattices with only trivial tolerances have
// every monotone function as a polynomial, so their binary closures run to
// hundreds of millions of tables; the element bound alone cannot prevent
// that, and the closure refuses loudly instead.
inline constexpr size_t kMaxCloneTables = 100000;

// A lattice term over variables x0..x{arity-1}, element constants, join and
// meet. Nodes are immutable and shared, so terms assembled from common
// pieces stay compact in memory even when their tree size is large.
class Term {
 public:
  enum class Kind { variable, constant, join, meet };

  static Term variable(int index, int arity);
  static Term constant(Elem value, int arity);
  static Term join(const Term& a, const Term& b);
  static Term meet(const Term& a, const Term& b);

  int arity() const { return arity_; }
  Kind kind() const { return root_->kind; }

  // Structural evaluation with per-node memoization.
  // Throws ArityMismatch unless args.size() == arity().
  Elem evaluate(const Lattice& L, std::span<const Elem> args) const;

  // This term must be unary; returns the term with x0 replaced by `inner`.
  Term compose_unary(const Term& inner) const;

  // Number of nodes counting repeats, saturating at uint64 max.
  uint64_t tree_size() const;

  // Fully parenthesized infix: `v` join, `^` meet, `x<i>` variables,
  // element names for constants. The outermost operator is unparenthesized.
  std::string str(const Lattice& L) const;

  // Inverse of str; whitespace-insensitive, extra parentheses allowed.
  // Arity is inferred as 1 + the largest variable index (0 if none) unless
  // given explicitly.
  static Term parse(const Lattice& L, std::string_view text);
  static Term parse(const Lattice& L, std::string_view text, int arity);

 private:
  struct Node {
    Kind kind;
    int index = 0;  // variable index or constant element
    std::shared_ptr<const Node> lhs, rhs;
  };
  using NodePtr = std::shared_ptr<const Node>;

  Term(NodePtr root, int arity) : root_(std::move(root)), arity_(arity) {}

  NodePtr root_;
  int arity_ = 0;
};

// An extensional function |L|^arity -> L. Tuples are indexed
// lexicographically with the first coordinate most significant.
struct FunctionTable {
  int arity = 0;
  int domain = 0;
  std::vector<Elem> values;

  static size_t tuple_index(std::span<const Elem> args, int domain);
  Elem at(std::span<const Elem> args) const {
    return values[tuple_index(args, domain)];
  }
  size_t entry_count() const { return values.size(); }

  bool operator==(const FunctionTable&) const = default;
};

// Exhaustive evaluation; throws BoundExceeded when |L|^arity exceeds
// kMaxTableEntries.
FunctionTable to_table(const Lattice& L, const Term& t);

bool is_01_preserving(const Lattice& L, const Term& t);

// Function tables in deterministic discovery order, each carrying the first
// witness term that produced it.
class TableSet {
 public:
  size_t size() const { return tables_.size(); }
  const FunctionTable& table(size_t i) const { return tables_[i]; }
  const Term& witness(size_t i) const { return witnesses_[i]; }
  std::optional<size_t> find(const FunctionTable& t) const;
  bool contains(const FunctionTable& t) const { return find(t).has_value(); }
  // No-op when the table is already present.
  bool insert(FunctionTable t, Term w);

 private:
  std::vector<FunctionTable> tables_;
  std::vector<Term> witnesses_;
  std::unordered_map<std::string, size_t> index_;
};

// The finite clone fragments the decision procedures consult: all tables of
// unary (binary) polynomials, as the fixpoint of pointwise join/meet over
// projections and constants. Throws BoundExceeded above max_elements.
TableSet unary_polynomial_tables(const Lattice& L,
                                 int max_elements = kUnaryCloneMaxElements);
TableSet binary_polynomial_tables(const Lattice& L,
                                  int max_elements = kBinaryCloneMaxElements);

}  // namespace latagg

#endif  // LATAGG_POLYNOMIAL_HPP
