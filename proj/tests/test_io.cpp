#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "latagg/catalog.hpp"
#include "latagg/io.hpp"

using namespace latagg;

TEST_CASE("lat parsing") {
  Lattice L = parse_lat(
      "# the five-element horizontal sum\n"
      "elements 0 a b c 1\n"
      "cover 0 a\n"
      "cover 0 b\n"
      "cover 0 c  # trailing comment\n"
      "cover a 1\n"
      "cover b 1\n"
      "cover c 1\n");
  CHECK(L.size() == 5);
  CHECK(L.name(L.bottom()) == "0");
  CHECK(L.join(L.index_of("a"), L.index_of("b")) == L.index_of("1"));
}

TEST_CASE("lat parse errors carry line numbers") {
  try {
    parse_lat("elements 0 1\ncover 0 oops\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
  }
  try {
    parse_lat("# only comments\ncover 0 1\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
  }
  CHECK_THROWS_AS(parse_lat(""), ParseError);
  CHECK_THROWS_AS(parse_lat("elements 0 0\n"), ParseError);
  CHECK_THROWS_AS(parse_lat("elements 0 1\ncover 0\n"), ParseError);
}

TEST_CASE("lat round-trip preserves the lattice exactly") {
  for (const char* name : {"chain-2", "chain-5", "mn-4", "bool-3", "glued-m3"}) {
    Lattice L = builtin(name);
    Lattice back = parse_lat(to_lat_text(L));
    CHECK(back.names() == L.names());
    CHECK(back.covers() == L.covers());
    CHECK(canonical_order_matrix(back) == canonical_order_matrix(L));
  }
}

TEST_CASE("fun round-trip and validation") {
  Lattice L = builtin("mn-3");
  FunctionTable t{2, L.size(), {}};
  for (Elem x = 0; x < L.size(); ++x)
    for (Elem y = 0; y < L.size(); ++y) t.values.push_back(L.join(x, y));
  AggTable f = make_aggregation(L, t);

  std::string text = to_fun_text(L, f);
  AggTable back = parse_fun(L, text);
  CHECK(back.table == f.table);

  CHECK_THROWS_AS(parse_fun(L, "arity 0\n"), ParseError);
  CHECK_THROWS_AS(parse_fun(L, "map 0 -> 0\n"), ParseError);
  CHECK_THROWS_AS(parse_fun(L, "arity 1\nmap 0 -> 0\n"), ParseError);  // missing lines
  // wrong tuple order
  CHECK_THROWS_AS(parse_fun(builtin("chain-2"),
                            "arity 1\nmap 1 -> 1\nmap 0 -> 0\n"),
                  ParseError);
}

TEST_CASE("fun text rejects non-aggregations") {
  Lattice c3 = builtin("chain-3");
  CHECK_THROWS_AS(parse_fun(c3, "arity 1\nmap 0 -> 0\nmap m1 -> 1\nmap 1 -> m1\n"),
                  InvalidAggregation);
}

TEST_CASE("dot export") {
  Lattice L = builtin("chain-2");
  std::string dot = to_dot(L);
  CHECK(dot ==
        "digraph hasse {\n"
        "  rankdir=BT;\n"
        "  n0 [label=\"0\"];\n"
        "  n1 [label=\"1\"];\n"
        "  n0 -> n1;\n"
        "}\n");
  // byte-deterministic
  CHECK(to_dot(builtin("glued-m3")) == to_dot(builtin("glued-m3")));
}

TEST_CASE("tolerance pair text") {
  Lattice L = builtin("chain-3");
  Relation r = Relation::identity(L.size());
  r.set(0, 1);
  r.set(1, 0);
  CHECK(tolerance_pairs_text(L, r) == "~ 0 m1\n");
  CHECK(tolerance_pairs_text(L, Relation::identity(L.size())) == "");
}
