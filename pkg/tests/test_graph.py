"""Graph model, formats, completion and random generation."""

import itertools

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from cubicbox.graph import (
    DegreeError,
    Graph,
    GraphFormatError,
    complete_to_cubic,
    parse_graph,
    random_cubic,
    random_max_degree3,
    serialize_graph,
)

from conftest import k4


def test_parse_single_edge():
    g = parse_graph("n 2\n0 1")
    assert g.n == 2 and g.m == 1
    assert list(g.iter_edges()) == [(0, 1)]


def test_parse_k4():
    g = parse_graph("n 4\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3")
    assert g == k4()


@pytest.mark.parametrize("text,msg", [
    ("0 1", "header"),
    ("n 4\n0", "expected"),
    ("n 4\n0 9", "range"),
    ("n 4\n2 2", "self-loop"),
    ("n 4\n0 1\n1 0", "duplicate"),
    ("n 4\n0 x", "non-integer"),
])
def test_parse_errors_carry_line_numbers(text, msg):
    with pytest.raises(GraphFormatError) as ei:
        parse_graph(text)
    assert "line" in str(ei.value)
    assert msg in str(ei.value)


def test_graph6_k4():
    g = parse_graph("C~", fmt="graph6")
    assert g == k4()
    assert serialize_graph(g, fmt="graph6") == "C~"


def test_graph6_roundtrip_matches_edgelist_form():
    g = random_cubic(10, seed=3)
    s6 = serialize_graph(g, fmt="graph6")
    again = parse_graph(s6, fmt="graph6")
    assert again == g
    # independent re-encoding from the edge-list form
    assert serialize_graph(parse_graph(serialize_graph(g)), fmt="graph6") == s6


def test_serialize_empty_graph_header_only():
    g = Graph(1, [])
    assert serialize_graph(g) == "n 1\n"
    assert parse_graph(serialize_graph(g)) == g


@settings(max_examples=40, deadline=None)
@given(st.integers(min_value=0, max_value=10_000))
def test_edgelist_roundtrip_fixpoint(seed):
    g = random_cubic(10, seed=seed)
    text = serialize_graph(g)
    assert parse_graph(text) == g
    assert serialize_graph(parse_graph(text)) == text


def test_complete_cubic_identity_on_k4():
    comp = complete_to_cubic(k4())
    assert comp.completed == k4()
    assert comp.original_count == 4


def test_complete_single_vertex_gives_k4():
    comp = complete_to_cubic(Graph(1, []))
    assert comp.original_count == 1
    assert comp.completed == k4()


def test_complete_single_edge():
    comp = complete_to_cubic(parse_graph("n 2\n0 1"))
    g = comp.completed
    assert g.n == 6
    assert (g.degrees() == 3).all()
    # original prefix is induced: edge 0-1 present, and it is the only
    # edge among originals
    assert g.has_edge(0, 1)
    assert sum(1 for u, v in g.iter_edges() if u < 2 and v < 2) == 1


def _prefix_equals(g: Graph, h: Graph) -> bool:
    want = set(map(tuple, h.edges().tolist()))
    got = {(u, v) for u, v in g.iter_edges() if u < h.n and v < h.n}
    return got == want


@settings(max_examples=60, deadline=None)
@given(st.integers(min_value=2, max_value=12), st.integers(min_value=0, max_value=10_000))
def test_complete_cubic_prefix_property(n, seed):
    from conftest import random_connected_maxdeg3

    h = random_connected_maxdeg3(n, seed)
    comp = complete_to_cubic(h)
    g = comp.completed
    assert comp.original_count == h.n
    assert (g.degrees() == 3).all()
    assert _prefix_equals(g, h)


def test_complete_rejects_degree4():
    G = Graph(5, [(0, 1), (0, 2), (0, 3), (0, 4)])
    with pytest.raises(DegreeError):
        complete_to_cubic(G)


def test_random_cubic_n4_is_k4():
    assert random_cubic(4, seed=0) == k4()
    assert random_cubic(4, seed=99) == k4()


def test_random_cubic_regular_and_deterministic():
    g1 = random_cubic(10, seed=1)
    g2 = random_cubic(10, seed=1)
    assert g1 == g2
    assert (g1.degrees() == 3).all()
    assert g1.m == 15
    assert random_cubic(10, seed=2) != g1


@pytest.mark.parametrize("n", [3, 5, 2, 0])
def test_random_cubic_rejects_bad_n(n):
    with pytest.raises(ValueError):
        random_cubic(n, seed=0)


def test_random_max_degree3_deletes_fraction():
    g = random_max_degree3(50, seed=7, fraction=0.2)
    assert g.max_degree() <= 3
    assert g.m == 75 - round(0.2 * 75)
    assert random_max_degree3(50, seed=7, fraction=0.2) == g


def test_graph_validate_runs():
    random_cubic(20, seed=5).validate()
