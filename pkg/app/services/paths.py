from __future__ import annotations

from dataclasses import dataclass

import networkx as nx
from networkx.algorithms.flow import edmonds_karp

from app.config import DEFAULT_BUDGET, logger
from app.exceptions import (
    GraphError,
    InvalidParameterError,
    NoThomassenSystemError,
    ThomassenPreconditionError,
)
from app.models.graph import Multigraph
from app.services.coloring import chromatic_index


@dataclass(frozen=True)
class Walk:
    """Vertex sequence plus the host edge ids between consecutive vertices."""

    vertices: tuple[int, ...]
    edges: tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.edges)


@dataclass(frozen=True)
class PathSystem:
    """Two vertices x, y joined by d pairwise edge-disjoint simple paths.

    ``lengths[i]`` counts the interior vertices of path i, so path i has
    lengths[i] + 1 edges.
    """

    x: int
    y: int
    paths: tuple[Walk, ...]

    @property
    def d(self) -> int:
        return len(self.paths)

    @property
    def lengths(self) -> tuple[int, ...]:
        return tuple(len(p.vertices) - 2 for p in self.paths)

    def problems(self, host: Multigraph) -> list[str]:
        """Invariant violations; empty for a well-formed system."""
        found = []
        used: set[int] = set()
        for index, walk in enumerate(self.paths):
            if walk.vertices[0] != self.x or walk.vertices[-1] != self.y:
                found.append(f"path {index} does not join {self.x} and {self.y}")
            if len(set(walk.vertices)) != len(walk.vertices):
                found.append(f"path {index} repeats a vertex")
            for edge_id, a, b in zip(walk.edges, walk.vertices, walk.vertices[1:]):
                edge = host.edges[edge_id]
                if {edge.u, edge.v} != {a, b}:
                    found.append(f"path {index} edge {edge_id} does not join {a} and {b}")
            if used & set(walk.edges):
                found.append(f"path {index} reuses edges {sorted(used & set(walk.edges))}")
            used |= set(walk.edges)
        if sum(1 for walk in self.paths if walk.length == 1) > 1:
            found.append("more than one path of length 1")
        return found


def max_edge_disjoint_paths(host: Multigraph, x: int, y: int) -> tuple[int, list[Walk]]:
    """Maximum number of edge-disjoint x-y trails, via unit-capacity flow.

    Each undirected edge class becomes two opposite arcs; opposite flows are
    cancelled before decomposition so an edge is used in one direction only.
    """
    if x == y:
        raise InvalidParameterError("y", y, f"a vertex different from x={x}")
    network = nx.DiGraph()
    network.add_nodes_from(range(host.vertex_count))
    classes = host.parallel_classes()
    for (u, v), ids in classes:
        network.add_edge(u, v, capacity=len(ids))
        network.add_edge(v, u, capacity=len(ids))
    value, flow = nx.maximum_flow(network, x, y, flow_func=edmonds_karp)

    outgoing: dict[int, list[tuple[int, int]]] = {v: [] for v in range(host.vertex_count)}
    for (u, v), ids in classes:
        net = flow[u][v] - flow[v][u]
        if net > 0:
            outgoing[u].extend((edge_id, v) for edge_id in ids[:net])
        elif net < 0:
            outgoing[v].extend((edge_id, u) for edge_id in ids[:-net])
    for arcs in outgoing.values():
        arcs.sort(reverse=True)

    trails = []
    for _ in range(value):
        vertices, edges, current = [x], [], x
        while current != y:
            edge_id, current = outgoing[current].pop()
            vertices.append(current)
            edges.append(edge_id)
        trails.append(Walk(tuple(vertices), tuple(edges)))
    return value, trails


def shortcut_to_simple(walk: Walk) -> Walk:
    """Cut out the closed sub-walk at every repeated vertex, left to right."""
    vertices = [walk.vertices[0]]
    edges: list[int] = []
    position = {walk.vertices[0]: 0}
    for edge_id, v in zip(walk.edges, walk.vertices[1:]):
        if v in position:
            cut = position[v]
            for dropped in vertices[cut + 1 :]:
                del position[dropped]
            del vertices[cut + 1 :]
            del edges[cut:]
        else:
            position[v] = len(vertices)
            vertices.append(v)
            edges.append(edge_id)
    return Walk(tuple(vertices), tuple(edges))


def thomassen_system(
    host: Multigraph,
    d: int,
    budget: int = DEFAULT_BUDGET,
    assume_class_two: bool = False,
) -> PathSystem:
    """First pair (x, y) in lexicographic order joined by d edge-disjoint paths.

    Raises ThomassenPreconditionError unless Δ(H) = d and χ'(H) = d + 1;
    under that hypothesis a system always exists, so NoThomassenSystemError
    means the hypothesis was wrong.
    """
    if not host.is_simple:
        raise GraphError("Path systems are searched in simple graphs")
    chi = d + 1 if assume_class_two else chromatic_index(host, budget)[0]
    if host.max_degree != d or chi != d + 1:
        raise ThomassenPreconditionError(d, host.max_degree, chi)

    candidates = [v for v in range(host.vertex_count) if host.degree(v) >= d]
    for i, x in enumerate(candidates):
        for y in candidates[i + 1 :]:
            count, trails = max_edge_disjoint_paths(host, x, y)
            if count < d:
                continue
            system = PathSystem(x, y, tuple(shortcut_to_simple(t) for t in trails[:d]))
            logger.info(f"Path system found at x={x}, y={y}, lengths {system.lengths}")
            return system
    raise NoThomassenSystemError(d)


def brute_force_max_paths(host: Multigraph, x: int, y: int) -> int:
    """Largest packing of edge-disjoint simple x-y paths, by enumeration."""
    paths: list[frozenset[int]] = []

    def extend(v: int, visited: set[int], edges: list[int]):
        if v == y:
            paths.append(frozenset(edges))
            return
        for edge_id in host.incidence[v]:
            w = host.other_end(edge_id, v)
            if w in visited:
                continue
            visited.add(w)
            edges.append(edge_id)
            extend(w, visited, edges)
            edges.pop()
            visited.discard(w)

    extend(x, {x}, [])

    def pack(start: int, used: frozenset[int]) -> int:
        best = 0
        for index in range(start, len(paths)):
            if not paths[index] & used:
                best = max(best, 1 + pack(index + 1, used | paths[index]))
        return best

    return pack(0, frozenset())
