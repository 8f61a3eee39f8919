#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "latagg/catalog.hpp"
#include "latagg/relation.hpp"
#include "oracles.hpp"

using namespace latagg;

namespace {

Lattice three_chain() { return builtin("chain-3"); }

Relation rel_of(const Lattice& L, std::initializer_list<ElemPair> pairs) {
  Relation r = Relation::identity(L.size());
  for (auto [x, y] : pairs) r.set(x, y);
  return r;
}

}  // namespace

TEST_CASE("identity and full relation are tolerances and congruences") {
  for (const Lattice& L : {builtin("chain-2"), builtin("mn-3"), builtin("glued-m3")}) {
    CHECK(is_tolerance(L, Relation::identity(L.size())));
    CHECK(is_congruence(L, Relation::identity(L.size())));
    CHECK(is_tolerance(L, Relation::full(L.size())));
    CHECK(is_congruence(L, Relation::full(L.size())));
  }
}

TEST_CASE("block-square relation on glued-m3 is a tolerance but not a congruence") {
  Lattice L = builtin("glued-m3");
  Relation t(L.size());
  auto block = [&](std::initializer_list<const char*> names) {
    for (const char* x : names)
      for (const char* y : names) t.set(L.index_of(x), L.index_of(y));
  };
  block({"0", "a", "b", "c", "d"});
  block({"c", "d", "e", "f", "1"});
  CHECK(is_tolerance(L, t));
  CHECK_FALSE(is_congruence(L, t));
}

TEST_CASE("tolerance generated by the empty seed is the diagonal") {
  Lattice L = three_chain();
  CHECK(tolerance_generated_by(L, {}) == Relation::identity(L.size()));
}

TEST_CASE("tolerance generated by one cover pair of a chain collapses only it") {
  Lattice L = three_chain();
  const ElemPair seed[]{{0, 1}};
  Tolerance t = tolerance_generated_by(L, seed);
  CHECK(t == rel_of(L, {{0, 1}, {1, 0}}));
}

TEST_CASE("tolerance generated by a cover pair of M_3 is everything") {
  Lattice L = builtin("mn-3");
  const ElemPair seed[]{{0, 1}};
  CHECK(tolerance_generated_by(L, seed) == Relation::full(L.size()));
}

TEST_CASE("congruence generated by a pair") {
  Lattice n5 = oracles::make_n5();
  const ElemPair seed[]{{n5.index_of("a"), n5.index_of("b")}};
  Congruence c = congruence_generated_by(n5, seed);
  Relation expected = rel_of(n5, {{1, 2}, {2, 1}});
  CHECK(c == expected);

  CHECK(congruence_generated_by(n5, {}) == Relation::identity(n5.size()));

  Lattice c3 = three_chain();
  const ElemPair low[]{{0, 1}};
  CHECK(congruence_generated_by(c3, low) == rel_of(c3, {{0, 1}, {1, 0}}));
}

TEST_CASE("transitive closure of a tolerance is a congruence") {
  Lattice L = builtin("glued-m3");
  Relation t(L.size());
  auto block = [&](std::initializer_list<const char*> names) {
    for (const char* x : names)
      for (const char* y : names) t.set(L.index_of(x), L.index_of(y));
  };
  block({"0", "a", "b", "c", "d"});
  block({"c", "d", "e", "f", "1"});
  Congruence closed = transitive_closure(L, Tolerance(L, t));
  CHECK(closed == Relation::full(L.size()));

  Lattice c3 = three_chain();
  Tolerance id(c3, Relation::identity(c3.size()));
  CHECK(transitive_closure(c3, id) == Relation::identity(c3.size()));
  const ElemPair seed[]{{0, 1}};
  Tolerance t2 = tolerance_generated_by(c3, seed);
  CHECK(transitive_closure(c3, t2) == t2);  // already transitive
}

TEST_CASE("compose and inverse") {
  Lattice c2 = builtin("chain-2");
  Relation id = Relation::identity(2);
  CHECK(compose(id, relation_inverse(id)) == id);

  Relation b = rel_of(c2, {{0, 1}});
  CHECK(compose(b, relation_inverse(b)) == Relation::full(2));

  std::mt19937_64 rng(7);
  Lattice L = builtin("mn-3");
  for (int trial = 0; trial < 20; ++trial) {
    Relation r(L.size());
    for (int k = 0; k < 4; ++k)
      r.set(static_cast<Elem>(rng() % L.size()), static_cast<Elem>(rng() % L.size()));
    CHECK(relation_inverse(relation_inverse(r)) == r);
  }
}

TEST_CASE("simplicity") {
  CHECK(is_simple(builtin("mn-3")));
  CHECK(is_simple(builtin("chain-2")));
  CHECK_FALSE(is_simple(oracles::make_n5()));
  CHECK(is_simple(builtin("glued-m3")));
  CHECK_THROWS_AS(is_simple(Lattice::from_covers({"x"}, {})), DegenerateLattice);
}

TEST_CASE("tolerance triviality with witnesses") {
  for (int k = 3; k <= 5; ++k) CHECK(has_only_trivial_tolerances(builtin("mn-" + std::to_string(k))).trivial);

  auto c3 = has_only_trivial_tolerances(three_chain());
  CHECK_FALSE(c3.trivial);
  REQUIRE(c3.witness.has_value());
  Lattice L3 = three_chain();
  CHECK(*c3.witness == rel_of(L3, {{0, 1}, {1, 0}}));

  Lattice glued = builtin("glued-m3");
  auto g = has_only_trivial_tolerances(glued);
  CHECK_FALSE(g.trivial);
  REQUIRE(g.witness.has_value());
  CHECK_FALSE(*g.witness == Relation::identity(glued.size()));
  CHECK_FALSE(*g.witness == Relation::full(glued.size()));
  // the witness contains cross pairs of the lower block
  CHECK(g.witness->test(glued.index_of("0"), glued.index_of("d")));
}

TEST_CASE("all tolerances against the brute-force oracle") {
  // frozen oracle counts: the 3-chain carries the two cover collapses, the
  // distance-one relation, and the trivial pair
  CHECK(all_tolerances(three_chain()).size() == 5);
  CHECK(all_tolerances(builtin("chain-2")).size() == 2);
  CHECK(all_tolerances(builtin("mn-3")).size() == 2);

  // the scan is 2^(n(n-1)/2) candidates, so keep it to n <= 6
  for (const char* name : {"chain-2", "chain-3", "chain-4", "mn-3", "mn-4", "bool-2"}) {
    Lattice L = builtin(name);
    auto got = all_tolerances(L);
    auto expect = oracles::brute_force_tolerances(L);
    REQUIRE(got.size() == expect.size());
    for (size_t i = 0; i < got.size(); ++i) CHECK(got[i] == expect[i]);
  }
  Lattice n5 = oracles::make_n5();
  auto got = all_tolerances(n5);
  auto expect = oracles::brute_force_tolerances(n5);
  REQUIRE(got.size() == expect.size());
  for (size_t i = 0; i < got.size(); ++i) CHECK(got[i] == expect[i]);
}

TEST_CASE("all tolerances refuses oversized lattices") {
  CHECK_THROWS_AS(all_tolerances(builtin("chain-4"), 3), BoundExceeded);
}

TEST_CASE("generated tolerance is a closure operator") {
  std::mt19937_64 rng(11);
  for (const char* name : {"chain-4", "mn-4", "bool-3"}) {
    Lattice L = builtin(name);
    for (int trial = 0; trial < 30; ++trial) {
      std::vector<ElemPair> seed_a, seed_b;
      for (int k = 0; k < 2; ++k)
        seed_a.emplace_back(static_cast<Elem>(rng() % L.size()),
                            static_cast<Elem>(rng() % L.size()));
      for (int k = 0; k < 2; ++k)
        seed_b.emplace_back(static_cast<Elem>(rng() % L.size()),
                            static_cast<Elem>(rng() % L.size()));
      Tolerance ta = tolerance_generated_by(L, seed_a);
      // extensive
      for (auto [x, y] : seed_a) CHECK(ta.test(x, y));
      // idempotent
      CHECK(tolerance_generated_by(L, std::span<const ElemPair>(ta.pairs())) == ta);
      // monotone
      std::vector<ElemPair> both = seed_a;
      both.insert(both.end(), seed_b.begin(), seed_b.end());
      CHECK(tolerance_generated_by(L, both).contains(ta));
      // congruence closure dominates and agrees exactly when transitive
      Congruence ca = congruence_generated_by(L, seed_a);
      CHECK(ca.contains(ta));
      if (is_congruence(L, ta)) CHECK(ca == ta);
    }
  }
}

TEST_CASE("pairs inside a tolerance's collapsed intervals stay related") {
  for (const char* name : {"chain-4", "mn-3", "bool-3"}) {
    Lattice L = builtin(name);
    for (const Tolerance& t : all_tolerances(L)) {
      for (auto [a, b] : t.pairs()) {
        Elem lo = L.meet(a, b), hi = L.join(a, b);
        for (Elem x = 0; x < L.size(); ++x) {
          for (Elem y = 0; y < L.size(); ++y) {
            if (L.leq(lo, x) && L.leq(x, hi) && L.leq(lo, y) && L.leq(y, hi))
              CHECK(t.test(x, y));
          }
        }
      }
    }
  }
}

TEST_CASE("diagonal sublattices compose to tolerances") {
  std::mt19937_64 rng(23);
  for (const char* name : {"chain-3", "mn-3", "bool-3", "glued-m3"}) {
    Lattice L = builtin(name);
    for (int trial = 0; trial < 25; ++trial) {
      std::vector<ElemPair> seed;
      for (int k = 0; k < 2; ++k)
        seed.emplace_back(static_cast<Elem>(rng() % L.size()),
                          static_cast<Elem>(rng() % L.size()));
      Relation b = diagonal_sublattice_generated_by(L, seed);
      CHECK(is_tolerance(L, compose(b, relation_inverse(b))));
    }
  }
}
