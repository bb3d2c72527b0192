from functools import cache

import networkx as nx

from app.config import logger
from app.models.graph import Multigraph
from app.services.coloring import chromatic_index, critical_subgraph
from app.services.paths import PathSystem, Walk
from app.utils.enumeration import canonical_form, generate_graphs
from app.utils.generators import complete, cycle


def petersen() -> Multigraph:
    return Multigraph.from_networkx(nx.petersen_graph())


def petersen_minus_vertex() -> Multigraph:
    return petersen().without_vertex(0)


def subdivided_k4() -> Multigraph:
    """K_4 with edge (0,1) subdivided by vertex 4: Δ=3, 7 edges on 5 vertices."""
    return Multigraph.from_edges(
        5, [(0, 4), (4, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]
    )


@cache
def _generated_critical(max_vertices: int) -> tuple[tuple[str, Multigraph], ...]:
    found: dict[str, Multigraph] = {}
    for host in generate_graphs(max_vertices):
        if host.max_degree not in (3, 4) or chromatic_index(host)[0] == host.max_degree:
            continue
        critical = critical_subgraph(host)
        for v in reversed(range(critical.vertex_count)):
            if critical.degree(v) == 0:
                critical = critical.without_vertex(v)
        found.setdefault(f"critical-{canonical_form(critical)}", critical)
    return tuple(sorted(found.items()))


def generated_critical_graphs(max_vertices: int = 5) -> dict[str, Multigraph]:
    """Edge-critical graphs reduced from every generated class-2 host with Δ in {3, 4}."""
    return dict(_generated_critical(max_vertices))


def class_two_corpus() -> dict[str, Multigraph]:
    """Connected class-2 hosts with Δ in {2, 3, 4} and at most 11 vertices."""
    corpus = {
        "C3": cycle(3),
        "C5": cycle(5),
        "C7": cycle(7),
        "C9": cycle(9),
        "K4-subdivided": subdivided_k4(),
        "petersen": petersen(),
        "petersen-minus-vertex": petersen_minus_vertex(),
        "K5": complete(5),
        **generated_critical_graphs(),
    }
    logger.debug(f"🌱 Class-2 corpus: {', '.join(corpus)}")
    return corpus


def _system(host: Multigraph, *vertex_paths: list[int]) -> PathSystem:
    walks = tuple(
        Walk(tuple(p), tuple(host.edge_between(a, b) for a, b in zip(p, p[1:])))
        for p in vertex_paths
    )
    return PathSystem(vertex_paths[0][0], vertex_paths[0][-1], walks)


def case_instances() -> dict[str, tuple[Multigraph, PathSystem]]:
    """Small hosts with a hand-picked path system that lands in a given case.

    These hosts are not necessarily class 2; the systems only exercise the
    case analysis of the assembly step.
    """
    many_odd = Multigraph.from_edges(
        6, [(0, 2), (2, 1), (0, 3), (3, 1), (0, 4), (4, 1), (0, 5), (5, 1)]
    )
    long_even = Multigraph.from_edges(
        8,
        [(0, 2), (2, 1), (0, 3), (3, 1), (0, 4), (4, 1), (0, 5), (5, 6), (6, 1), (5, 7)],
    )
    direct = Multigraph.from_edges(
        6, [(0, 1), (0, 2), (1, 2), (0, 3), (1, 3), (0, 4), (1, 4), (4, 5), (2, 5)]
    )
    two_odd = Multigraph.from_edges(
        8,
        [(0, 2), (2, 1), (0, 3), (3, 1), (0, 4), (4, 5), (5, 1), (0, 6), (6, 7), (7, 1)],
    )
    two_odd_cubic = Multigraph.from_edges(5, [(0, 1), (0, 2), (1, 2), (0, 3), (1, 3), (3, 4)])
    one_odd = Multigraph.from_edges(
        7, [(0, 2), (2, 1), (0, 3), (3, 4), (4, 1), (0, 5), (5, 6), (6, 1)]
    )
    no_odd = Multigraph.from_edges(
        9,
        [(0, 2), (2, 3), (3, 1), (0, 4), (4, 5), (5, 1), (0, 6), (6, 7), (7, 1), (2, 8)],
    )
    return {
        "j>=4": (many_odd, _system(many_odd, [0, 2, 1], [0, 3, 1], [0, 4, 1], [0, 5, 1])),
        "j=3,l4>=2": (
            long_even,
            _system(long_even, [0, 2, 1], [0, 3, 1], [0, 4, 1], [0, 5, 6, 1]),
        ),
        "j=3,l4=0": (direct, _system(direct, [0, 2, 1], [0, 3, 1], [0, 4, 1], [0, 1])),
        "j=2,d>=4": (
            two_odd,
            _system(two_odd, [0, 2, 1], [0, 3, 1], [0, 4, 5, 1], [0, 6, 7, 1]),
        ),
        "j=2,d=3": (two_odd_cubic, _system(two_odd_cubic, [0, 2, 1], [0, 3, 1], [0, 1])),
        "j=1": (one_odd, _system(one_odd, [0, 2, 1], [0, 3, 4, 1], [0, 5, 6, 1])),
        "j=0": (no_odd, _system(no_odd, [0, 2, 3, 1], [0, 4, 5, 1], [0, 6, 7, 1])),
    }
