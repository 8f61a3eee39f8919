"""Smoke tests for the compiled bindings. Runs with a bare interpreter:
PYTHONPATH must point at the staged package in the build tree."""

import latagg


def test_builtin_and_queries():
    m3 = latagg.builtin("mn-3")
    assert len(m3) == 5
    assert m3.bottom == "0"
    assert m3.top == "1"
    assert m3.join("a1", "a2") == "1"
    assert m3.meet("a1", "a2") == "0"
    assert m3.leq("0", "a1")
    assert m3.atoms() == ["a1", "a2", "a3"]
    assert m3.join_irreducibles() == ["a1", "a2", "a3"]


def test_parse_round_trip():
    m3 = latagg.builtin("mn-3")
    again = latagg.Lattice.parse(m3.to_lat_text())
    assert again.names == m3.names
    assert again.canonical_hash() == m3.canonical_hash()
    assert "digraph hasse" in m3.to_dot()


def test_decide_smallest():
    m3 = latagg.builtin("mn-3")
    report = latagg.decide(m3)
    assert report["smallest"] is True
    assert set(report["chi"]) == {"a1", "a2", "a3"}
    for name, term in report["chi"].items():
        values = [latagg.evaluate(m3, term, [x]) for x in m3.names]
        assert values == latagg.chi_table(m3, name)


def test_decide_not_smallest():
    glued = latagg.builtin("glued-m3")
    report = latagg.decide(glued)
    assert report["smallest"] is False
    assert report["witness"], "expected a nontrivial tolerance witness"
    assert latagg.profile(glued)["simple"] is True


def test_synthesize_chi():
    chain3 = latagg.builtin("chain-3")
    assert latagg.synthesize_chi(chain3, "m1") is None
    c2 = latagg.builtin("chain-2")
    term = latagg.synthesize_chi(c2, "1")
    assert term is not None
    assert latagg.evaluate(c2, term, ["0"]) == "0"
    assert latagg.evaluate(c2, term, ["1"]) == "1"


def test_represent():
    m3 = latagg.builtin("mn-3")
    names = m3.names
    values = [m3.join(x, y) for x in names for y in names]
    term = latagg.represent(m3, 2, values)
    for x in names:
        for y in names:
            assert latagg.evaluate(m3, term, [x, y]) == m3.join(x, y)


def test_tolerances():
    chain3 = latagg.builtin("chain-3")
    tols = latagg.tolerances(chain3)
    assert len(tols) == 5
    assert tols[0] == []  # the diagonal

    m3 = latagg.builtin("mn-3")
    assert len(latagg.tolerances(m3)) == 2


def test_enumerate_and_census():
    counts = [len(latagg.enumerate_lattices(n)) for n in range(1, 7)]
    assert counts == [1, 1, 1, 2, 5, 15]
    lines = latagg.census_lines(5)
    assert len(lines) == 5
    assert sum(line.endswith("Y") for line in lines) == 1  # only M_3 is smallest


def test_random_aggregation_is_seeded():
    m3 = latagg.builtin("mn-3")
    a = latagg.random_aggregation(m3, 2, 7)
    b = latagg.random_aggregation(m3, 2, 7)
    assert a == b


def test_errors():
    try:
        latagg.builtin("nope")
    except ValueError:
        pass
    else:
        raise AssertionError("unknown builtin must raise")
    try:
        latagg.Lattice.parse("elements 0 1\ncover 0 zz\n")
    except ValueError:
        pass
    else:
        raise AssertionError("bad cover must raise")


def main():
    tests = [v for k, v in sorted(globals().items()) if k.startswith("test_")]
    for test in tests:
        test()
        print("ok -", test.__name__)
    print(f"{len(tests)} smoke tests passed")


if __name__ == "__main__":
    main()
