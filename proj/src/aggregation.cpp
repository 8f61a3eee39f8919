#include "latagg/aggregation.hpp"

#include <algorithm>
#include <bit>
#include <random>

namespace latagg {

namespace {

size_t power_or_throw(int base, int exp, size_t limit, const char* what) {
  size_t p = 1;
  for (int i = 0; i < exp; ++i) {
    if (p > limit / static_cast<size_t>(base))
      throw ArityBoundExceeded(std::string(what) + " exceeds " + std::to_string(limit) +
                               " tuples");
    p *= static_cast<size_t>(base);
  }
  return p;
}

template <typename F>
void for_each_tuple(int domain, int arity, F&& fn) {
  std::vector<Elem> tuple(static_cast<size_t>(arity), 0);
  while (true) {
    fn(tuple);
    int pos = arity - 1;
    while (pos >= 0 && tuple[static_cast<size_t>(pos)] == domain - 1) {
      tuple[static_cast<size_t>(pos)] = 0;
      --pos;
    }
    if (pos < 0) break;
    tuple[static_cast<size_t>(pos)]++;
  }
}

}  // namespace

AggTable make_aggregation(const Lattice& L, FunctionTable table) {
  require_nondegenerate(L);
  if (table.arity < 1) throw InvalidAggregation("aggregation arity must be at least 1");
  if (table.domain != L.size())
    throw InvalidAggregation("table domain does not match the lattice");
  size_t expected = power_or_throw(L.size(), table.arity, kMaxAggTuples, "aggregation table");
  if (table.values.size() != expected)
    throw InvalidAggregation("table has " + std::to_string(table.values.size()) +
                             " entries, expected " + std::to_string(expected));
  for (Elem v : table.values) L.check_element(v);

  std::vector<Elem> bottoms(static_cast<size_t>(table.arity), L.bottom());
  std::vector<Elem> tops(static_cast<size_t>(table.arity), L.top());
  if (table.at(bottoms) != L.bottom())
    throw InvalidAggregation("value at the all-bottom tuple must be bottom");
  if (table.at(tops) != L.top())
    throw InvalidAggregation("value at the all-top tuple must be top");

  // Monotonicity along single-coordinate cover steps implies monotonicity.
  for_each_tuple(L.size(), table.arity, [&](const std::vector<Elem>& tuple) {
    Elem here = table.at(tuple);
    for (size_t i = 0; i < tuple.size(); ++i) {
      for (const auto& [lo, hi] : L.covers()) {
        if (lo != tuple[i]) continue;
        std::vector<Elem> raised = tuple;
        raised[i] = hi;
        if (!L.leq(here, table.at(raised)))
          throw InvalidAggregation("table is not monotone");
      }
    }
  });
  return AggTable{std::move(table)};
}

AggTable chi(const Lattice& L, Elem a) {
  require_nondegenerate(L);
  L.check_element(a);
  FunctionTable t;
  t.arity = 1;
  t.domain = L.size();
  t.values.resize(static_cast<size_t>(L.size()), L.bottom());
  for (Elem x = 0; x < L.size(); ++x)
    if (L.leq(a, x) && x != L.bottom()) t.values[static_cast<size_t>(x)] = L.top();
  return AggTable{std::move(t)};
}

std::optional<Term> synthesize_chi_polynomial(const Lattice& L, Elem a) {
  require_nondegenerate(L);
  L.check_element(a);
  const Elem b = L.lower_cover_of(a);  // throws NotJoinIrreducible

  // Subuniverse of L^2 generated by the diagonal and (b, a), with one
  // witness term per pair: the value pairs (p(b), p(a)) of all unary
  // polynomials p.
  const int n = L.size();
  std::vector<int> index(static_cast<size_t>(n) * static_cast<size_t>(n), -1);
  auto slot = [&](Elem x, Elem y) -> int& { return index[static_cast<size_t>(x * n + y)]; };
  std::vector<ElemPair> members;
  std::vector<Term> witnesses;
  auto admit = [&](ElemPair p, Term w) {
    if (slot(p.first, p.second) >= 0) return;
    slot(p.first, p.second) = static_cast<int>(members.size());
    members.push_back(p);
    witnesses.push_back(std::move(w));
  };
  for (Elem c = 0; c < n; ++c) admit({c, c}, Term::constant(c, 1));
  admit({b, a}, Term::variable(0, 1));

  const ElemPair target{L.bottom(), L.top()};
  for (size_t i = 0; i < members.size() && slot(target.first, target.second) < 0; ++i) {
    for (size_t j = 0; j <= i; ++j) {
      const auto [x1, y1] = members[i];
      const auto [x2, y2] = members[j];
      admit({L.join(x1, x2), L.join(y1, y2)}, Term::join(witnesses[i], witnesses[j]));
      admit({L.meet(x1, x2), L.meet(y1, y2)}, Term::meet(witnesses[i], witnesses[j]));
    }
  }

  int hit = slot(target.first, target.second);
  if (hit < 0) return std::nullopt;
  Term inner = Term::meet(Term::variable(0, 1), Term::constant(a, 1));
  Term result = witnesses[static_cast<size_t>(hit)].compose_unary(inner);
  if (!(to_table(L, result) == chi(L, a).table))
    throw InternalInconsistency("synthesized term does not match the chi table");
  return result;
}

Term chi_for_any_element(const Lattice& L, Elem c, const std::map<Elem, Term>& chi_irr) {
  require_nondegenerate(L);
  L.check_element(c);
  auto witness_for = [&](Elem a) -> const Term& {
    auto it = chi_irr.find(a);
    if (it == chi_irr.end())
      throw MissingWitness("no chi witness for join-irreducible '" + L.name(a) + "'");
    return it->second;
  };
  if (chi_irr.count(c)) return witness_for(c);
  if (c == L.bottom()) {
    std::optional<Term> acc;
    for (Elem p : L.atoms())
      acc = acc ? Term::join(*acc, witness_for(p)) : witness_for(p);
    return *acc;  // at least one atom exists for |L| >= 2
  }
  std::optional<Term> acc;
  for (Elem a : L.join_irreducibles()) {
    if (!L.leq(a, c)) continue;
    acc = acc ? Term::meet(*acc, witness_for(a)) : witness_for(a);
  }
  if (!acc)
    throw InternalInconsistency("nonbottom element with no join-irreducible below it");
  return *acc;
}

DecisionReport decide_smallest_agg(const Lattice& L) {
  require_nondegenerate(L);

  ToleranceTriviality tol = has_only_trivial_tolerances(L);

  std::map<Elem, Term> found;
  bool all_representable = true;
  for (Elem a : L.join_irreducibles()) {
    auto term = synthesize_chi_polynomial(L, a);
    if (!term) {
      all_representable = false;
      break;
    }
    found.emplace(a, std::move(*term));
  }

  // The two procedures decide the same class; disagreement is a bug.
  if (tol.trivial != all_representable)
    throw InternalInconsistency("tolerance triviality and chi synthesis disagree on a " +
                                std::to_string(L.size()) + "-element lattice");

  DecisionReport report;
  report.smallest = tol.trivial;
  if (report.smallest) {
    report.chi_witnesses = std::move(found);  // tables verified by synthesis
  } else {
    report.tolerance_witness = std::move(tol.witness);
  }
  return report;
}

Term represent_aggregation(const Lattice& L, const AggTable& f, const DecisionReport& report) {
  if (!report.smallest)
    throw NotSmallest("lattice does not have a smallest aggregation class");
  const int n = f.table.arity;
  power_or_throw(L.size(), n, kMaxAggTuples, "representation");

  // chi terms for every element, shared across tuples; entry (c, i) is the
  // chi_c witness applied to variable x_i.
  std::map<Elem, Term> chi_terms;
  for (Elem c = 0; c < L.size(); ++c)
    chi_terms.emplace(c, chi_for_any_element(L, c, report.chi_witnesses));
  std::map<std::pair<Elem, int>, Term> applied;
  auto chi_at = [&](Elem c, int var) -> const Term& {
    auto key = std::make_pair(c, var);
    auto it = applied.find(key);
    if (it == applied.end())
      it = applied.emplace(key, chi_terms.at(c).compose_unary(Term::variable(var, n))).first;
    return it->second;
  };

  std::optional<Term> result;
  for_each_tuple(L.size(), n, [&](const std::vector<Elem>& tuple) {
    bool all_bottom = std::all_of(tuple.begin(), tuple.end(),
                                  [&](Elem x) { return x == L.bottom(); });
    if (all_bottom) return;
    Term conjunct = Term::constant(f.table.at(tuple), n);
    for (int i = 0; i < n; ++i) {
      if (tuple[static_cast<size_t>(i)] == L.bottom()) continue;
      conjunct = Term::meet(conjunct, chi_at(tuple[static_cast<size_t>(i)], i));
    }
    result = result ? Term::join(*result, conjunct) : conjunct;
  });
  return *result;
}

bool is_aggregation_polynomial(const Lattice& L, const AggTable& f) {
  if (f.table.arity == 1) return unary_polynomial_tables(L).contains(f.table);
  if (f.table.arity == 2) return binary_polynomial_tables(L).contains(f.table);
  throw BoundExceeded("membership test supports arity 1 and 2 only");
}

std::vector<AggTable> enumerate_unary_aggregations(const Lattice& L, int max_elements) {
  require_nondegenerate(L);
  if (L.size() > max_elements)
    throw BoundExceeded("unary aggregation enumeration is limited to " +
                        std::to_string(max_elements) + " elements");

  const auto& order = L.linear_extension();
  std::vector<Elem> value(static_cast<size_t>(L.size()), -1);
  std::vector<AggTable> out;

  // Strict lower covers of each element, for the running lower bound.
  std::vector<std::vector<Elem>> lower(static_cast<size_t>(L.size()));
  for (const auto& [lo, hi] : L.covers()) lower[static_cast<size_t>(hi)].push_back(lo);

  auto assign = [&](auto&& self, size_t depth) -> void {
    if (depth == order.size()) {
      out.push_back(make_aggregation(L, FunctionTable{1, L.size(), value}));
      return;
    }
    Elem x = order[depth];
    Elem lb = L.bottom();
    for (Elem y : lower[static_cast<size_t>(x)]) lb = L.join(lb, value[static_cast<size_t>(y)]);
    if (x == L.bottom()) {
      value[static_cast<size_t>(x)] = L.bottom();
      self(self, depth + 1);
    } else if (x == L.top()) {
      value[static_cast<size_t>(x)] = L.top();
      self(self, depth + 1);
    } else {
      for (Elem v : L.principal_filter(lb)) {
        value[static_cast<size_t>(x)] = v;
        self(self, depth + 1);
      }
    }
    value[static_cast<size_t>(x)] = -1;
  };
  assign(assign, 0);

  std::sort(out.begin(), out.end(), [](const AggTable& a, const AggTable& b) {
    return a.table.values < b.table.values;
  });
  return out;
}

AggTable random_aggregation(const Lattice& L, int arity, uint64_t seed) {
  require_nondegenerate(L);
  if (arity < 1) throw BadParam("arity must be at least 1");
  size_t total = power_or_throw(L.size(), arity, kMaxAggTuples, "random aggregation");

  const auto& order = L.linear_extension();
  std::vector<int> position(static_cast<size_t>(L.size()), 0);
  for (size_t i = 0; i < order.size(); ++i) position[static_cast<size_t>(order[i])] = static_cast<int>(i);

  std::vector<std::vector<Elem>> lower(static_cast<size_t>(L.size()));
  for (const auto& [lo, hi] : L.covers()) lower[static_cast<size_t>(hi)].push_back(lo);

  std::mt19937_64 rng(seed);
  FunctionTable t;
  t.arity = arity;
  t.domain = L.size();
  t.values.assign(total, -1);

  // Tuples visited lexicographically by linear-extension position, so every
  // tuple covered from below is already assigned.
  std::vector<int> pos_tuple(static_cast<size_t>(arity), 0);
  std::vector<Elem> tuple(static_cast<size_t>(arity), 0);
  while (true) {
    for (int i = 0; i < arity; ++i)
      tuple[static_cast<size_t>(i)] = order[static_cast<size_t>(pos_tuple[static_cast<size_t>(i)])];

    bool all_bottom = std::all_of(tuple.begin(), tuple.end(),
                                  [&](Elem x) { return x == L.bottom(); });
    bool all_top = std::all_of(tuple.begin(), tuple.end(),
                               [&](Elem x) { return x == L.top(); });
    Elem chosen;
    if (all_bottom) {
      chosen = L.bottom();
    } else if (all_top) {
      chosen = L.top();
    } else {
      Elem lb = L.bottom();
      for (int i = 0; i < arity; ++i) {
        for (Elem y : lower[static_cast<size_t>(tuple[static_cast<size_t>(i)])]) {
          std::vector<Elem> covered = tuple;
          covered[static_cast<size_t>(i)] = y;
          lb = L.join(lb, t.values[FunctionTable::tuple_index(covered, L.size())]);
        }
      }
      std::vector<Elem> candidates = L.principal_filter(lb);
      chosen = candidates[rng() % candidates.size()];
    }
    t.values[FunctionTable::tuple_index(tuple, L.size())] = chosen;

    int p = arity - 1;
    while (p >= 0 && pos_tuple[static_cast<size_t>(p)] == L.size() - 1) {
      pos_tuple[static_cast<size_t>(p)] = 0;
      --p;
    }
    if (p < 0) break;
    pos_tuple[static_cast<size_t>(p)]++;
  }
  return make_aggregation(L, std::move(t));
}

}  // namespace latagg
