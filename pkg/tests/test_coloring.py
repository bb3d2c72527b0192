import networkx as nx
import pytest

from app.exceptions import BudgetExceededError, NotClassTwoError
from app.models.graph import Multigraph
from app.services.coloring import (
    ExactColoring,
    GreedyColoring,
    chromatic_index,
    chromatic_number,
    critical_edge_ids,
    critical_subgraph,
    format_coloring,
    greedy_dsatur,
    is_edge_critical,
    vizing_adjacency_audit,
)
from app.services.operators import line_graph
from app.utils.corpus import (
    class_two_corpus,
    generated_critical_graphs,
    petersen_minus_vertex,
    subdivided_k4,
)
from app.utils.enumeration import canonical_form, generate_graphs
from app.utils.generators import complete, cycle, path, star


@pytest.mark.parametrize(
    "host, expected",
    [
        (cycle(4), 2),
        (cycle(5), 3),
        (complete(4), 3),
        (complete(5), 5),
        (star(5), 5),
        (path(4), 2),
        (subdivided_k4(), 4),
    ],
)
def test_chromatic_index_of_small_hosts(host, expected):
    """Exact χ' with a proper witness coloring"""
    value, coloring = chromatic_index(host)
    assert value == expected
    assert coloring.palette_size == expected
    assert coloring.is_proper(host)


def test_chromatic_index_of_petersen(petersen_graph):
    """The Petersen graph is class 2"""
    value, coloring = chromatic_index(petersen_graph)
    assert value == 4
    assert coloring.is_proper(petersen_graph)


def test_chromatic_index_of_multigraph(double_edge):
    """Parallel edges must take different colors"""
    value, coloring = chromatic_index(double_edge)
    assert value == 3
    assert coloring.is_proper(double_edge)


def test_shannon_triangle():
    """The doubled triangle needs 6 colors"""
    doubled = Multigraph.from_edges(3, [(0, 1), (0, 1), (1, 2), (1, 2), (0, 2), (0, 2)])
    assert chromatic_index(doubled)[0] == 6


def test_chromatic_number_of_line_graph_matches_index(petersen_graph):
    """χ(L(H)) = χ'(H)"""
    value, coloring = chromatic_number(line_graph(petersen_graph).line_graph)
    assert value == 4
    assert coloring.is_proper(line_graph(petersen_graph).line_graph)


def test_chromatic_number_of_odd_cycle_and_clique():
    """χ(C_7) = 3 and χ(K_6) = 6"""
    assert chromatic_number(cycle(7))[0] == 3
    assert chromatic_number(complete(6))[0] == 6


def test_empty_graph_colors():
    """No vertices, no colors"""
    assert chromatic_number(Multigraph.from_edges(0, []))[0] == 0
    assert chromatic_index(Multigraph.from_edges(3, []))[0] == 0


def test_budget_is_enforced(petersen_graph):
    """A one-node budget cannot finish an exact search"""
    with pytest.raises(BudgetExceededError):
        chromatic_number(line_graph(petersen_graph).line_graph, budget=1)


def test_greedy_is_an_upper_bound(petersen_graph):
    """DSATUR never beats the exact value and is always proper"""
    graph = line_graph(petersen_graph).line_graph
    coloring = greedy_dsatur(graph)
    assert coloring.is_proper(graph)
    assert coloring.palette_size >= 4


def test_coloring_strategies_report_exactness(c5_line):
    """The exact strategy is exact, the greedy one is not"""
    assert ExactColoring().exact and not GreedyColoring().exact
    assert ExactColoring().color(c5_line).palette_size == 3
    assert GreedyColoring().color(c5_line).is_proper(c5_line)


@pytest.mark.parametrize("name", sorted(class_two_corpus()))
def test_critical_subgraph_is_critical_and_keeps_degree(name):
    """The reduction keeps χ' = Δ + 1 and every remaining edge is critical"""
    host = class_two_corpus()[name]
    critical = critical_subgraph(host)
    assert critical.max_degree == host.max_degree
    assert chromatic_index(critical)[0] == host.max_degree + 1
    assert is_edge_critical(critical)


@pytest.mark.parametrize("name", sorted(class_two_corpus()))
def test_critical_subgraph_passes_adjacency_audit(name):
    """Every non-isolated vertex of a critical graph sees two vertices of degree Δ"""
    assert vizing_adjacency_audit(critical_subgraph(class_two_corpus()[name])) == []


def test_petersen_minus_vertex_is_already_critical():
    """P - v loses nothing in the reduction"""
    host = petersen_minus_vertex()
    assert critical_edge_ids(host) == tuple(range(host.edge_count))


def test_petersen_is_not_critical(petersen_graph):
    """Some edge of the Petersen graph can go without lowering χ'"""
    assert not is_edge_critical(petersen_graph)


def test_critical_reduction_rejects_class_one(k4):
    """K_4 is class 1"""
    with pytest.raises(NotClassTwoError):
        critical_edge_ids(k4)


def test_audit_flags_pendant_vertex():
    """A pendant vertex next to a degree-3 center has one Δ-neighbor"""
    violations = vizing_adjacency_audit(star(3))
    assert {v.vertex for v in violations} == {0, 1, 2, 3}


def test_format_coloring_lines():
    """One 'color <id> <color>' line per element"""
    _, coloring = chromatic_index(path(3))
    assert format_coloring(coloring).splitlines()[0].startswith("color 0 ")
    assert len(format_coloring(coloring).splitlines()) == 2


@pytest.mark.parametrize("name", sorted(class_two_corpus()))
def test_line_graph_chromatic_number_equals_chromatic_index(name):
    """χ(L(H)) = χ'(H) over the class 2 corpus"""
    host = class_two_corpus()[name]
    assert chromatic_number(line_graph(host).line_graph)[0] == chromatic_index(host)[0]


def test_chromatic_index_within_vizing_bounds():
    """Δ ≤ χ' ≤ Δ + 1 for every corpus host and every small connected graph"""
    hosts = [*class_two_corpus().values(), *generate_graphs(5)]
    for host in hosts:
        assert host.max_degree <= chromatic_index(host)[0] <= host.max_degree + 1


def test_pendant_edge_is_dropped_by_reduction():
    """A pendant edge on a degree-2 vertex of P - v is not critical"""
    host = petersen_minus_vertex()
    w = next(v for v in range(host.vertex_count) if host.degree(v) == 2)
    extended = Multigraph.from_edges(host.vertex_count + 1, [(w, host.vertex_count), *host.pairs()])
    critical = critical_subgraph(extended)
    assert critical.pairs() == host.pairs()
    assert critical.degree(host.vertex_count) == 0


def test_odd_cycle_with_pendant_edge_is_class_one():
    """C_5 plus a pendant edge has Δ = χ' = 3, so there is nothing to reduce"""
    host = Multigraph.from_edges(6, [*cycle(5).pairs(), (0, 5)])
    assert chromatic_index(host)[0] == 3
    with pytest.raises(NotClassTwoError):
        critical_subgraph(host)


def test_failed_audit_means_not_critical():
    """A graph with a vertex lacking two Δ-neighbors is never edge-critical"""
    flagged = [g for g in generate_graphs(5) if g.edge_count and vizing_adjacency_audit(g)]
    assert flagged
    assert not any(is_edge_critical(g) for g in flagged)


def test_generated_critical_graphs():
    """Reductions of small class 2 hosts are connected, critical and include K_4 with a subdivided edge"""
    generated = generated_critical_graphs()
    assert f"critical-{canonical_form(subdivided_k4())}" in generated
    for graph in generated.values():
        assert nx.is_connected(graph.to_simple_networkx())
        assert graph.max_degree in (3, 4)
        assert is_edge_critical(graph)
