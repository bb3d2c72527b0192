from __future__ import annotations

from abc import ABC, abstractmethod
from dataclasses import dataclass

import networkx as nx

from app.config import DEFAULT_BUDGET, logger
from app.exceptions import BudgetExceededError, GraphError, NotClassTwoError
from app.models.graph import Multigraph
from app.services.operators import line_graph


@dataclass(frozen=True)
class VertexColoring:
    colors: tuple[int, ...]
    palette_size: int

    def is_proper(self, graph: Multigraph) -> bool:
        if len(self.colors) != graph.vertex_count:
            return False
        if any(not 0 <= c < self.palette_size for c in self.colors):
            return False
        return all(self.colors[e.u] != self.colors[e.v] for e in graph.edges)


@dataclass(frozen=True)
class EdgeColoring:
    colors: tuple[int, ...]
    palette_size: int

    def is_proper(self, host: Multigraph) -> bool:
        if len(self.colors) != host.edge_count:
            return False
        if any(not 0 <= c < self.palette_size for c in self.colors):
            return False
        return all(
            len({self.colors[e] for e in incident}) == len(incident)
            for incident in host.incidence
        )


@dataclass(frozen=True)
class AdjacencyViolation:
    vertex: int
    max_degree_neighbors: int


class SearchCounter:
    """Counts branch nodes and raises once the budget is spent."""

    def __init__(self, limit: int, what: str):
        self.limit = limit
        self.what = what
        self.nodes = 0

    def tick(self):
        self.nodes += 1
        if self.nodes > self.limit:
            raise BudgetExceededError(self.limit, self.what)


def greedy_dsatur(graph: Multigraph) -> VertexColoring:
    """DSATUR without backtracking: an upper bound with a witness."""
    n = graph.vertex_count
    colors = [-1] * n
    seen: list[set[int]] = [set() for _ in range(n)]
    for _ in range(n):
        v = max(
            (u for u in range(n) if colors[u] < 0),
            key=lambda u: (len(seen[u]), graph.degree(u), -u),
        )
        c = 0
        while c in seen[v]:
            c += 1
        colors[v] = c
        for u in graph.adjacency[v]:
            seen[u].add(c)
    return VertexColoring(tuple(colors), max(colors, default=-1) + 1)


def maximum_clique(graph: Multigraph) -> list[int]:
    if graph.vertex_count == 0:
        return []
    cliques = (sorted(c) for c in nx.find_cliques(graph.to_simple_networkx()))
    return max(cliques, key=lambda c: (len(c), [-v for v in c]))


def k_coloring(
    graph: Multigraph,
    k: int,
    counter: SearchCounter,
    clique: list[int] | None = None,
) -> list[int] | None:
    """Decide k-colorability by DSATUR backtracking; returns a witness or None.

    ``clique`` vertices are pre-colored 0..q-1, and a vertex may only open
    the next unused color, so color permutations are explored once.
    """
    n = graph.vertex_count
    clique = clique or []
    if len(clique) > k:
        return None
    adjacency = [sorted(graph.adjacency[v]) for v in range(n)]
    degree = [len(adjacency[v]) for v in range(n)]
    colors = [-1] * n
    blocked = [[0] * k for _ in range(n)]
    saturation = [0] * n

    def assign(v: int, c: int):
        colors[v] = c
        for u in adjacency[v]:
            if blocked[u][c] == 0:
                saturation[u] += 1
            blocked[u][c] += 1

    def unassign(v: int, c: int):
        colors[v] = -1
        for u in adjacency[v]:
            blocked[u][c] -= 1
            if blocked[u][c] == 0:
                saturation[u] -= 1

    for c, v in enumerate(clique):
        assign(v, c)

    def search(colored: int, used: int) -> bool:
        counter.tick()
        if colored == n:
            return True
        v = max(
            (u for u in range(n) if colors[u] < 0),
            key=lambda u: (saturation[u], degree[u], -u),
        )
        if saturation[v] == k:
            return False
        for c in range(min(used + 1, k)):
            if blocked[v][c]:
                continue
            assign(v, c)
            if search(colored + 1, max(used, c + 1)):
                return True
            unassign(v, c)
        return False

    return list(colors) if search(len(clique), len(clique)) else None


def _minimum_coloring(
    graph: Multigraph, counter: SearchCounter, lower: int = 0
) -> VertexColoring:
    """Search downward from the greedy bound until k-1 colors are infeasible."""
    clique = maximum_clique(graph)
    lower = max(lower, len(clique))
    best = greedy_dsatur(graph)
    while best.palette_size - 1 >= lower:
        found = k_coloring(graph, best.palette_size - 1, counter, clique)
        if found is None:
            break
        best = VertexColoring(tuple(found), max(found) + 1)
    return best


def chromatic_number(
    graph: Multigraph, budget: int = DEFAULT_BUDGET
) -> tuple[int, VertexColoring]:
    if not graph.is_simple:
        raise GraphError("Chromatic number is computed on simple graphs")
    best = _minimum_coloring(graph, SearchCounter(budget, "chromatic number"))
    logger.debug(f"χ={best.palette_size} on {graph.vertex_count} vertices")
    return best.palette_size, best


def chromatic_index(
    host: Multigraph, budget: int = DEFAULT_BUDGET
) -> tuple[int, EdgeColoring]:
    """Exact χ'(H) as the chromatic number of L(H).

    For simple H Vizing leaves Δ or Δ+1, so Δ-colorability is decided first.
    Multigraphs search downward from a greedy bound.
    """
    if host.edge_count == 0:
        return 0, EdgeColoring((), 0)
    lmap = line_graph(host)
    counter = SearchCounter(budget, "chromatic index")
    delta = host.max_degree
    if not host.is_simple:
        best = _minimum_coloring(lmap.line_graph, counter, lower=delta)
        return best.palette_size, _edge_coloring(lmap.vertex_to_edge, best.colors)

    star = list(host.incidence[_first_max_degree_vertex(host)])
    for k in (delta, delta + 1):
        found = k_coloring(lmap.line_graph, k, counter, star)
        if found is not None:
            return k, _edge_coloring(lmap.vertex_to_edge, found)
    raise GraphError(f"No ({delta + 1})-edge-coloring found; the host is not simple")


def _edge_coloring(vertex_to_edge: tuple[int, ...], vertex_colors) -> EdgeColoring:
    colors = [0] * len(vertex_to_edge)
    for vertex, color in enumerate(vertex_colors):
        colors[vertex_to_edge[vertex]] = color
    return EdgeColoring(tuple(colors), max(colors, default=-1) + 1)


def _first_max_degree_vertex(host: Multigraph) -> int:
    return next(v for v in range(host.vertex_count) if host.degree(v) == host.max_degree)


def critical_edge_ids(host: Multigraph, budget: int = DEFAULT_BUDGET) -> tuple[int, ...]:
    """Greedy edge-critical reduction; returns the host edge ids that remain.

    Edges are tried in increasing id order and dropped whenever χ' survives.
    """
    if not host.is_simple:
        raise GraphError("Critical reduction is defined for simple graphs")
    value, _ = chromatic_index(host, budget)
    if host.edge_count == 0 or value != host.max_degree + 1:
        raise NotClassTwoError(host.max_degree, value)
    kept = list(range(host.edge_count))
    for edge_id in range(host.edge_count):
        trial = [e for e in kept if e != edge_id]
        if chromatic_index(host.edge_subgraph(trial), budget)[0] == value:
            kept = trial
    logger.info(f"Critical reduction kept {len(kept)} of {host.edge_count} edges (χ'={value})")
    return tuple(kept)


def critical_subgraph(host: Multigraph, budget: int = DEFAULT_BUDGET) -> Multigraph:
    return host.edge_subgraph(critical_edge_ids(host, budget))


def is_edge_critical(host: Multigraph, budget: int = DEFAULT_BUDGET) -> bool:
    if host.edge_count == 0 or not host.is_simple:
        return False
    value, _ = chromatic_index(host, budget)
    if value != host.max_degree + 1:
        return False
    return all(
        chromatic_index(
            host.edge_subgraph(e for e in range(host.edge_count) if e != removed), budget
        )[0]
        < value
        for removed in range(host.edge_count)
    )


def vizing_adjacency_audit(host: Multigraph) -> list[AdjacencyViolation]:
    """Vertices (isolated ones excepted) with fewer than two neighbors of degree Δ."""
    delta = host.max_degree
    violations = []
    for v in range(host.vertex_count):
        if host.degree(v) == 0:
            continue
        count = sum(1 for u in host.adjacency[v] if host.degree(u) == delta)
        if count < 2:
            violations.append(AdjacencyViolation(vertex=v, max_degree_neighbors=count))
    return violations


class ColoringStrategy(ABC):
    """Abstract base class for vertex coloring strategies"""

    exact: bool

    @abstractmethod
    def color(self, graph: Multigraph) -> VertexColoring:
        pass


class ExactColoring(ColoringStrategy):
    """Branch-and-bound minimum coloring under a node budget"""

    exact = True

    def __init__(self, budget: int = DEFAULT_BUDGET):
        self.budget = budget

    def color(self, graph: Multigraph) -> VertexColoring:
        return chromatic_number(graph, self.budget)[1]


class GreedyColoring(ColoringStrategy):
    """DSATUR upper bound; weaker evidence than an exact value"""

    exact = False

    def color(self, graph: Multigraph) -> VertexColoring:
        return greedy_dsatur(graph)


def format_coloring(coloring: VertexColoring | EdgeColoring) -> str:
    return "".join(f"color {i} {c}\n" for i, c in enumerate(coloring.colors))
