import random
import time

import pytest

from app.exceptions import InvalidParameterError
from app.models.graph import Multigraph
from app.services.operators import line_graph
from app.utils.corpus import petersen
from app.utils.enumeration import canonical_form, generate_graphs
from app.utils.generators import complete, cycle, path
from app.utils.graph_io import to_graph6


def _shuffled(graph: Multigraph, seed: int) -> Multigraph:
    order = list(range(graph.vertex_count))
    random.Random(seed).shuffle(order)
    return Multigraph.from_edges(graph.vertex_count, [(order[u], order[v]) for u, v in graph.pairs()])


@pytest.mark.parametrize("seed", range(5))
def test_canonical_form_ignores_labels(seed):
    """Relabelled copies share one canonical form"""
    graph = petersen()
    assert canonical_form(_shuffled(graph, seed)) == canonical_form(graph)


def test_canonical_form_separates_non_isomorphic_graphs():
    """P_4 and the claw have the same size but different forms"""
    claw = Multigraph.from_edges(4, [(0, 1), (0, 2), (0, 3)])
    assert canonical_form(path(4)) != canonical_form(claw)


@pytest.mark.parametrize("seed", range(3))
@pytest.mark.parametrize(
    "name",
    ["C_8", "K_3,3", "L(K_5)", "two triangles"],
)
def test_canonical_form_of_symmetric_graphs_ignores_labels(name, seed):
    """Graphs with many automorphisms keep one form under relabelling"""
    graph = {
        "C_8": cycle(8),
        "K_3,3": Multigraph.from_edges(6, [(u, v) for u in range(3) for v in range(3, 6)]),
        "L(K_5)": line_graph(complete(5)).line_graph,
        "two triangles": Multigraph.from_edges(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)]),
    }[name]
    assert canonical_form(_shuffled(graph, seed)) == canonical_form(graph)


def test_canonical_form_separates_regular_graphs():
    """C_6 and two triangles are both 2-regular on six vertices"""
    triangles = Multigraph.from_edges(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)])
    assert canonical_form(cycle(6)) != canonical_form(triangles)


@pytest.mark.parametrize(
    "graph",
    [complete(10), Multigraph.from_edges(12, [])],
    ids=["K_10", "edgeless-12"],
)
def test_canonical_form_of_transitive_graphs_is_fast(graph):
    """Automorphisms cut the search tree down to a few leaves per level"""
    started = time.perf_counter()
    form = canonical_form(graph)
    assert time.perf_counter() - started < 2.0
    assert form == to_graph6(graph)


def test_canonical_form_of_empty_graph():
    """No vertices is still a graph"""
    assert canonical_form(Multigraph.from_edges(0, [])) == canonical_form(
        Multigraph.from_edges(0, [])
    )


@pytest.mark.parametrize(
    "connected, expected",
    [
        (True, {1: 1, 2: 1, 3: 2, 4: 6, 5: 21}),
        (False, {1: 1, 2: 2, 3: 4, 4: 11, 5: 34}),
    ],
)
def test_generated_counts_match_known_tables(connected, expected):
    """Graph counts up to isomorphism on 1..5 vertices"""
    counts: dict[int, int] = {}
    for graph in generate_graphs(5, connected=connected):
        counts[graph.vertex_count] = counts.get(graph.vertex_count, 0) + 1
    assert counts == expected


def test_generated_graphs_are_distinct_and_ordered():
    """No two outputs are isomorphic; order is by size then canonical form"""
    graphs = list(generate_graphs(5))
    forms = [(g.vertex_count, canonical_form(g)) for g in graphs]
    assert len(set(forms)) == len(forms)
    assert forms == sorted(forms)


def test_generate_rejects_negative_order():
    """max_vertices cannot be negative"""
    with pytest.raises(InvalidParameterError):
        list(generate_graphs(-1))
