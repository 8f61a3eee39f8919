// Acceptance suite: one line per criterion, `ok`/`not ok`, nonzero exit on
// any failure. Each criterion carries a wall-clock budget that is enforced.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "latagg/aggregation.hpp"
#include "latagg/catalog.hpp"
#include "latagg/io.hpp"
#include "latagg/properties.hpp"
#include "oracles.hpp"

using namespace latagg;

namespace {

struct Criterion {
  int id;
  const char* label;
  double budget_seconds;
  std::function<void()> body;
};

struct Failure {
  std::string message;
};

void require(bool cond, const std::string& msg) {
  if (!cond) throw Failure{msg};
}

// ---- 1: horizontal sums M_n, n in {3,4,5} ----
void criterion_mn_regression() {
  for (int k = 3; k <= 5; ++k) {
    Lattice L = builtin("mn-" + std::to_string(k));
    DecisionReport r = decide_smallest_agg(L);
    require(r.smallest, "mn-" + std::to_string(k) + " must be smallest-class");
    auto irr = L.join_irreducibles();
    require(r.chi_witnesses.size() == irr.size(), "one witness per join-irreducible");
    for (Elem ai : irr) {
      // two other atoms; any choice gives the same table
      std::vector<Elem> others;
      for (Elem a : irr)
        if (a != ai) others.push_back(a);
      Term inner = Term::meet(Term::variable(0, 1), Term::constant(ai, 1));
      Term closed_form = Term::meet(Term::join(inner, Term::constant(others[0], 1)),
                                    Term::join(inner, Term::constant(others[1], 1)));
      FunctionTable expected = to_table(L, closed_form);
      require(expected == chi(L, ai).table, "closed form must equal the filter table");
      require(to_table(L, r.chi_witnesses.at(ai)) == expected,
              "synthesized witness must match the closed form pointwise");
    }
  }
}

// ---- 2: glued M_3 ----
void criterion_glued_m3() {
  Lattice L = builtin("glued-m3");  // construction re-checks the validation triple
  Relation t(L.size());
  auto block = [&](std::initializer_list<const char*> names) {
    for (const char* x : names)
      for (const char* y : names) t.set(L.index_of(x), L.index_of(y));
  };
  block({"0", "a", "b", "c", "d"});
  block({"c", "d", "e", "f", "1"});
  require(is_tolerance(L, t), "block-square relation must be a tolerance");
  require(!(t == Relation::identity(L.size())), "block tolerance must exceed the diagonal");
  require(!(t == Relation::full(L.size())), "block tolerance must not be everything");
  require(is_simple(L), "glued lattice must be simple");

  DecisionReport r = decide_smallest_agg(L);
  require(!r.smallest, "glued lattice must not be smallest-class");
  require(r.tolerance_witness.has_value(), "a tolerance witness must be attached");
  require(is_tolerance(L, *r.tolerance_witness), "witness must be a tolerance");
  require(!(*r.tolerance_witness == Relation::identity(L.size())), "witness nontrivial");
  require(!(*r.tolerance_witness == Relation::full(L.size())), "witness proper");
}

// ---- 3: three deciders agree on every lattice up to six elements ----
void criterion_decider_equivalence() {
  for (int n = 2; n <= 6; ++n) {
    for (const Lattice& L : enumerate_lattices(n)) {
      bool by_tolerances = has_only_trivial_tolerances(L).trivial;

      bool by_synthesis = true;
      for (Elem a : L.join_irreducibles()) {
        if (!synthesize_chi_polynomial(L, a).has_value()) {
          by_synthesis = false;
          break;
        }
      }

      TableSet closure = unary_polynomial_tables(L);
      bool by_brute_force = true;
      for (const AggTable& f : enumerate_unary_aggregations(L)) {
        if (!closure.contains(f.table)) {
          by_brute_force = false;
          break;
        }
      }

      require(by_tolerances == by_synthesis,
              "tolerance and synthesis deciders disagree at n=" + std::to_string(n));
      require(by_tolerances == by_brute_force,
              "tolerance and brute-force deciders disagree at n=" + std::to_string(n));
    }
  }
}

// ---- 4: profile implications over every lattice up to seven elements ----
void criterion_property_census() {
  for (int n = 2; n <= 7; ++n) {
    for (const CatalogEntry& e : census(n)) {
      const PropertyProfile& p = e.profile;  // profile() already asserted
      check_profile_implications(p);
      require(p.smallest_agg == p.tolerance_trivial, "equivalence with tolerance triviality");
      require(!p.smallest_agg || p.simple, "smallest-class entries must be simple");
      require(!(p.simple && p.relatively_complemented) || p.smallest_agg,
              "simple relatively complemented entries must be smallest-class");
      require(!(p.simple && p.modular && p.complemented) || p.smallest_agg,
              "simple modular complemented entries must be smallest-class");
      require(!(p.simple && (p.atoms_join_is_top || p.coatoms_meet_is_bottom)) ||
                  p.smallest_agg,
              "simple entries with spanning atoms or coatoms must be smallest-class");
    }
  }
}

// ---- 5: representation agrees with the input on every tuple ----
void criterion_representation_soundness() {
  for (int n = 2; n <= 6; ++n) {
    for (const Lattice& L : enumerate_lattices(n)) {
      DecisionReport r = decide_smallest_agg(L);
      if (!r.smallest) continue;
      for (uint64_t seed = 0; seed < 100; ++seed) {
        AggTable f = random_aggregation(L, 2, seed);
        Term p = represent_aggregation(L, f, r);
        require(to_table(L, p) == f.table,
                "representation differs from the table at n=" + std::to_string(n) +
                    " seed=" + std::to_string(seed));
      }
    }
  }
}

// ---- 6: tolerance properties over all tolerances plus random inputs ----
void criterion_tolerance_properties() {
  std::mt19937_64 rng(2024);
  int term_checks = 0;
  int diagonal_checks = 0;
  for (int n = 2; n <= 6; ++n) {
    for (const Lattice& L : enumerate_lattices(n)) {
      auto tols = all_tolerances(L);
      for (const Tolerance& t : tols) {
        for (auto [a, b] : t.pairs()) {
          // comparable pairs fill their interval
          if (L.leq(a, b)) {
            for (Elem x = 0; x < L.size(); ++x)
              for (Elem y = 0; y < L.size(); ++y)
                if (L.leq(a, x) && L.leq(x, b) && L.leq(a, y) && L.leq(y, b))
                  require(t.test(x, y), "interval of a related pair must be collapsed");
          }
          // any pair collapses the square of its generated interval
          Elem lo = L.meet(a, b), hi = L.join(a, b);
          for (Elem x = 0; x < L.size(); ++x)
            for (Elem y = 0; y < L.size(); ++y)
              if (L.leq(lo, x) && L.leq(x, hi) && L.leq(lo, y) && L.leq(y, hi))
                require(t.test(x, y), "square of the spanned interval must be collapsed");
        }
      }
      // unary polynomials preserve tolerances
      for (int trial = 0; trial < 42; ++trial) {
        Term f = oracles::random_unary_term(L, rng);
        ++term_checks;
        for (const Tolerance& t : tols)
          for (auto [a, b] : t.pairs())
            require(t.test(f.evaluate(L, {{a}}), f.evaluate(L, {{b}})),
                    "polynomial image of a related pair must stay related");
      }
      // diagonal sublattices compose to tolerances
      for (int trial = 0; trial < 42; ++trial) {
        std::vector<ElemPair> seed;
        for (int k = 0; k < 2; ++k)
          seed.emplace_back(static_cast<Elem>(rng() % L.size()),
                            static_cast<Elem>(rng() % L.size()));
        Relation b = diagonal_sublattice_generated_by(L, seed);
        ++diagonal_checks;
        require(is_tolerance(L, compose(b, relation_inverse(b))),
                "composition with the inverse must be a tolerance");
      }
    }
  }
  require(term_checks >= 1000, "at least 1000 random terms");
  require(diagonal_checks >= 1000, "at least 1000 random diagonal sublattices");
}

// ---- 7: enumeration counts match the independent generator ----
void criterion_enumeration_counts() {
  const std::vector<size_t> expected{1, 1, 1, 2, 5, 15, 53};
  for (int n = 1; n <= 7; ++n) {
    std::set<std::string> primary;
    for (const Lattice& L : enumerate_lattices(n))
      primary.insert(oracles::canonical_as_string(canonical_order_matrix(L)));
    require(primary.size() == expected[static_cast<size_t>(n - 1)],
            "class count at n=" + std::to_string(n));
    std::set<std::string> oracle = oracles::oracle_enumerate_lattices(n);
    require(primary == oracle,
            "independent generator disagrees at n=" + std::to_string(n));
  }
}

// ---- 8: negative desk cases with verifiable witnesses ----
void criterion_negative_cases() {
  std::vector<std::pair<std::string, Lattice>> cases;
  cases.emplace_back("chain-3", builtin("chain-3"));
  cases.emplace_back("chain-4", builtin("chain-4"));
  cases.emplace_back("bool-2", builtin("bool-2"));
  cases.emplace_back("n5", oracles::make_n5());
  for (auto& [name, L] : cases) {
    DecisionReport r = decide_smallest_agg(L);
    require(!r.smallest, name + " must not be smallest-class");
    require(r.tolerance_witness.has_value(), name + " needs a witness");
    const Tolerance& w = *r.tolerance_witness;
    require(is_tolerance(L, w), name + " witness must be a tolerance");
    require(!(w == Relation::identity(L.size())), name + " witness must exceed the diagonal");
    require(!(w == Relation::full(L.size())), name + " witness must be proper");
  }
}

}  // namespace

int main() {
  std::vector<Criterion> criteria{
      {1, "horizontal sums: decision and chi tables match the closed form", 1.0,
       criterion_mn_regression},
      {2, "glued M_3: validation triple and not-smallest verdict", 1.0, criterion_glued_m3},
      {3, "three deciders agree on every lattice up to 6 elements", 30.0,
       criterion_decider_equivalence},
      {4, "profile implications hold for every lattice up to 7 elements", 300.0,
       criterion_property_census},
      {5, "random binary aggregations are reproduced exactly", 60.0,
       criterion_representation_soundness},
      {6, "tolerance properties hold for all tolerances and random inputs", 60.0,
       criterion_tolerance_properties},
      {7, "enumeration counts 1,1,1,2,5,15,53 match the second generator", 300.0,
       criterion_enumeration_counts},
      {8, "chains, diamond and pentagon decide not-smallest with witnesses", 1.0,
       criterion_negative_cases},
  };

  int failures = 0;
  for (const Criterion& c : criteria) {
    auto start = std::chrono::steady_clock::now();
    std::string error;
    try {
      c.body();
    } catch (const Failure& f) {
      error = f.message;
    } catch (const std::exception& e) {
      error = std::string("exception: ") + e.what();
    }
    double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (error.empty() && elapsed > c.budget_seconds)
      error = "exceeded budget of " + std::to_string(c.budget_seconds) + " s";
    if (error.empty()) {
      std::printf("ok %d - %s (%.2fs)\n", c.id, c.label, elapsed);
    } else {
      std::printf("not ok %d - %s (%.2fs): %s\n", c.id, c.label, elapsed, error.c_str());
      ++failures;
    }
  }
  std::printf("%zu criteria, %zu passed, %d failed\n", criteria.size(),
              criteria.size() - static_cast<size_t>(failures), failures);
  return failures == 0 ? 0 : 1;
}
