from __future__ import annotations

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from genladder.decision import is_outerplanar, is_planar
from genladder.ladder import new_ladder
from genladder.oracle import (
    BudgetExceeded,
    SimpleGraph,
    complete_graph,
    enumerate_rotation_systems,
    euler_characteristic,
    naive_is_planar,
    oracle_is_outerplanar,
    oracle_is_planar,
    path_graph,
    _components,
    planar_rotation_system,
    rotation_space_size,
    to_simple_graph,
)

from .conftest import FIX, ladders, seeded_instances


def _k33() -> SimpleGraph:
    return SimpleGraph.from_pairs(6, [(a, b) for a in range(3) for b in range(3, 6)])


def _petersen() -> SimpleGraph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return SimpleGraph.from_pairs(10, outer + spokes + inner)


# literal enumeration is only practical on small rotation spaces
ENUMERATION_CAP = 20_000


@st.composite
def simple_graphs(draw, max_v: int = 7):
    nv = draw(st.integers(1, max_v))
    pairs = [(a, b) for a in range(nv) for b in range(a + 1, nv)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return SimpleGraph.from_pairs(nv, chosen)


# ---------------------------------------------------------------------------
# Known graphs
# ---------------------------------------------------------------------------


@pytest.mark.parametrize(
    "graph, planar, outer",
    [
        (complete_graph(4), True, False),
        (complete_graph(5), False, False),
        (_k33(), False, False),
        (_petersen(), False, False),
        (path_graph(3), True, True),
        (complete_graph(3), True, True),
        (SimpleGraph.from_pairs(5, [(0, 1), (0, 2), (0, 3), (1, 4), (2, 4), (3, 4)]), True, False),  # K2,3
        (SimpleGraph.from_pairs(3, []), True, True),
    ],
)
def test_known_graphs(graph, planar, outer):
    assert oracle_is_planar(graph) is planar
    assert oracle_is_outerplanar(graph) is outer


def test_naive_on_small_known_graphs():
    assert not naive_is_planar(complete_graph(5))
    assert naive_is_planar(complete_graph(4))
    assert not naive_is_planar(_k33())


@pytest.mark.parametrize(
    "name, planar, outer",
    [("LADDER", True, True), ("FAN", True, True), ("K4", True, False), ("K33", False, False), ("SAMPLE", True, False)],
)
def test_ladder_fixtures(name, planar, outer):
    h = to_simple_graph(FIX[name])
    assert oracle_is_planar(h) is planar
    assert oracle_is_outerplanar(h) is outer


def test_conversion_counts():
    h = to_simple_graph(FIX["LADDER"])
    assert (h.vertex_count, len(h.edges)) == (6, 7)
    assert len(to_simple_graph(FIX["K33"]).edges) == 9
    h = to_simple_graph(new_ladder(2, 2, []))
    assert (h.vertex_count, len(h.edges)) == (4, 2)


def test_budget_exceeded():
    with pytest.raises(BudgetExceeded):
        naive_is_planar(complete_graph(7), budget=1000)
    with pytest.raises(BudgetExceeded):
        oracle_is_planar(complete_graph(7), budget=10)


# ---------------------------------------------------------------------------
# Internal consistency and a third route
# ---------------------------------------------------------------------------


@settings(max_examples=150, deadline=None)
@given(simple_graphs(max_v=6))
def test_incremental_agrees_with_enumeration(h):
    assume(rotation_space_size(h) <= ENUMERATION_CAP)
    assert oracle_is_planar(h) == naive_is_planar(h)


@settings(max_examples=80, deadline=None)
@given(simple_graphs(max_v=5))
def test_euler_bounded_for_every_rotation_system(h):
    assume(rotation_space_size(h) <= ENUMERATION_CAP)
    bound = 1 + len(_components(h))
    values = [euler_characteristic(h, rot) for rot in enumerate_rotation_systems(h)]
    assert max(values) <= bound
    assert (max(values) == bound) == naive_is_planar(h)


@settings(max_examples=150, deadline=None)
@given(simple_graphs(max_v=9))
def test_agrees_with_networkx(h):
    nx = pytest.importorskip("networkx")
    gx = nx.Graph()
    gx.add_nodes_from(range(h.vertex_count))
    gx.add_edges_from(tuple(e) for e in h.edges)
    assert oracle_is_planar(h) == nx.check_planarity(gx)[0]
    gx.add_edges_from((-1, x) for x in range(h.vertex_count))
    assert oracle_is_outerplanar(h) == nx.check_planarity(gx)[0]


@settings(max_examples=100, deadline=None)
@given(simple_graphs(max_v=8))
def test_apex_consistency(h):
    if oracle_is_outerplanar(h):
        assert oracle_is_planar(h)
    rot = planar_rotation_system(h)
    assert (rot is not None) == oracle_is_planar(h)


def test_characterization_on_seeded_ladders():
    for g in seeded_instances(3, 300, 5, 5, 10):
        h = to_simple_graph(g)
        assert oracle_is_planar(h) == is_planar(g).verdict
        assert oracle_is_outerplanar(h) == is_outerplanar(g).verdict


@settings(max_examples=100, deadline=None)
@given(ladders(max_m=5, max_n=5, max_k=12))
def test_characterization_property(g):
    h = to_simple_graph(g)
    assert oracle_is_planar(h) == is_planar(g).verdict
    assert oracle_is_outerplanar(h) == is_outerplanar(g).verdict
