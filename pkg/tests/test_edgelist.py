import io

import pytest

from bitpath import build_hierarchy
from bitpath.edgelist import (
    ParseError,
    generate_modmul,
    load_hierarchy,
    parse_edge_list,
    save_hierarchy,
    write_edge_list,
)
from bitpath.valued import build_valued_hierarchy

G0_TEXT = """# worked example
5
1 2
1 4
2 3
2 4
3 4
4 5
5 1
"""


def test_parse_example(g0):
    assert parse_edge_list(G0_TEXT, one_based=True) == g0


def test_header_only():
    g = parse_edge_list("3\n")
    assert g.order == 3 and g.edge_count == 0


@pytest.mark.parametrize("text, line", [
    ("5\n1 9\n", 2),
    ("5\n1 2\n1 2\n", 3),
    ("5\n1 2 3\n2 3\n", 3),
    ("5\n1 2 0\n", 2),
    ("5\n1 2 -1/2\n", 2),
    ("5\n1 x\n", 2),
    ("five\n", 1),
    ("5\n1 2 3 4\n", 2),
])
def test_parse_errors_carry_line(text, line):
    with pytest.raises(ParseError) as exc:
        parse_edge_list(text, one_based=True)
    assert exc.value.line == line
    assert f"line {line}" in str(exc.value)


def test_missing_header():
    with pytest.raises(ParseError):
        parse_edge_list("# nothing\n")


def test_round_trip(g0):
    text = write_edge_list(g0, one_based=True)
    assert len(text.splitlines()) == 8
    assert parse_edge_list(text, one_based=True) == g0


def test_rational_weights_round_trip():
    g = parse_edge_list("3\n0 1 1/2\n1 2 0.25\n0 2 3/2\n")
    assert g.scale == 4
    assert g.weights == {(0, 1): 2, (1, 2): 1, (0, 2): 6}
    again = parse_edge_list(write_edge_list(g))
    assert again == g and again.scale == 4
    assert "1/2" in write_edge_list(g)


def test_modmul_small():
    g = generate_modmul(7, 2)
    # independent formula: i -> (i + 1) % n and (2 i) % n, no self-loops
    for i in range(7):
        want = {(i + 1) % 7, (2 * i) % 7} - {i}
        assert set(g.successors(i).tolist()) == want
    assert set(g.successors(3).tolist()) == {4, 6}
    assert set(generate_modmul(7, 3).successors(0).tolist()) == {1}


def test_modmul_cycle_and_determinism():
    g = generate_modmul(5, 1)
    assert sorted(g.edges()) == [(i, (i + 1) % 5) for i in range(5)]
    assert generate_modmul(1000, 3) == generate_modmul(1000, 3)
    with pytest.raises(ValueError):
        generate_modmul(1, 3)


def test_hierarchy_round_trip(g0):
    h = build_hierarchy(g0)
    buf = io.StringIO()
    save_hierarchy(h, buf)
    buf.seek(0)
    back = load_hierarchy(buf)
    assert len(back) == len(h)
    for a, b in zip(back.levels, h.levels):
        assert a.graph == b.graph
        assert (a.partition is None) == (b.partition is None)
        if a.partition is not None:
            assert list(a.partition.class_of) == list(b.partition.class_of)


def test_valued_hierarchy_round_trip():
    g = parse_edge_list("4\n0 1 1/3\n1 2 2\n2 3 1\n3 0 5\n")
    h = build_valued_hierarchy(g)
    buf = io.StringIO()
    save_hierarchy(h, buf)
    buf.seek(0)
    back = load_hierarchy(buf)
    assert back.valued and back.graph(0).scale == 3
    assert [lv.graph.weights for lv in back.levels] == [lv.graph.weights for lv in h.levels]


def test_bad_hierarchy_file():
    with pytest.raises(ParseError):
        load_hierarchy(io.StringIO("{not json"))
    with pytest.raises(ParseError):
        load_hierarchy(io.StringIO('{"format": "other", "version": 1}'))
