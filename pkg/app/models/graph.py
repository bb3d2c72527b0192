from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, NamedTuple

import networkx as nx

from app.exceptions import GraphError


class Edge(NamedTuple):
    u: int
    v: int
    id: int


@dataclass(frozen=True)
class Multigraph:
    """Loopless multigraph on vertices 0..vertex_count-1 with stable edge ids.

    Edge ids are the positions in ``edges``; parallel edges are separate
    entries. Instances are immutable and safe to share between workers.
    """

    vertex_count: int
    edges: tuple[Edge, ...]

    def __post_init__(self):
        if self.vertex_count < 0:
            raise GraphError(f"Negative vertex count {self.vertex_count}")
        for position, edge in enumerate(self.edges):
            if edge.id != position:
                raise GraphError(f"Edge ids must be dense: found id {edge.id} at {position}")
            if edge.u == edge.v:
                raise GraphError(f"Edge {edge.id} is a loop at vertex {edge.u}")
            if not (0 <= edge.u < self.vertex_count and 0 <= edge.v < self.vertex_count):
                raise GraphError(
                    f"Edge {edge.id}=({edge.u},{edge.v}) outside 0..{self.vertex_count - 1}"
                )

    @classmethod
    def from_edges(cls, vertex_count: int, pairs: Iterable[tuple[int, int]]) -> Multigraph:
        return cls(
            vertex_count,
            tuple(Edge(u, v, index) for index, (u, v) in enumerate(pairs)),
        )

    @classmethod
    def from_networkx(cls, graph: nx.Graph) -> Multigraph:
        """Relabel nodes to 0..n-1 in sorted order; edges keep networkx order."""
        index = {node: i for i, node in enumerate(sorted(graph.nodes()))}
        return cls.from_edges(
            len(index), ((index[u], index[v]) for u, v in graph.edges())
        )

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    @cached_property
    def incidence(self) -> tuple[tuple[int, ...], ...]:
        """Edge ids at each vertex, in increasing id order."""
        buckets: list[list[int]] = [[] for _ in range(self.vertex_count)]
        for edge in self.edges:
            buckets[edge.u].append(edge.id)
            buckets[edge.v].append(edge.id)
        return tuple(tuple(bucket) for bucket in buckets)

    @cached_property
    def _pair_index(self) -> dict[tuple[int, int], tuple[int, ...]]:
        index: dict[tuple[int, int], list[int]] = {}
        for edge in self.edges:
            index.setdefault(_pair(edge.u, edge.v), []).append(edge.id)
        return {pair: tuple(ids) for pair, ids in index.items()}

    @cached_property
    def adjacency(self) -> tuple[frozenset[int], ...]:
        neighbors: list[set[int]] = [set() for _ in range(self.vertex_count)]
        for edge in self.edges:
            neighbors[edge.u].add(edge.v)
            neighbors[edge.v].add(edge.u)
        return tuple(frozenset(n) for n in neighbors)

    @cached_property
    def max_degree(self) -> int:
        return max((len(ids) for ids in self.incidence), default=0)

    @cached_property
    def is_simple(self) -> bool:
        return all(len(ids) == 1 for ids in self._pair_index.values())

    def degree(self, v: int) -> int:
        return len(self.incidence[v])

    def neighbors(self, v: int) -> tuple[int, ...]:
        return tuple(sorted(self.adjacency[v]))

    def has_edge(self, u: int, v: int) -> bool:
        return _pair(u, v) in self._pair_index

    def multiplicity(self, u: int, v: int) -> int:
        return len(self._pair_index.get(_pair(u, v), ()))

    def edge_ids_between(self, u: int, v: int) -> tuple[int, ...]:
        return self._pair_index.get(_pair(u, v), ())

    def edge_between(self, u: int, v: int) -> int:
        """Id of the unique u-v edge; only meaningful in simple graphs."""
        ids = self._pair_index.get(_pair(u, v))
        if not ids:
            raise GraphError(f"No edge between {u} and {v}")
        return ids[0]

    def other_end(self, edge_id: int, v: int) -> int:
        edge = self.edges[edge_id]
        if edge.u == v:
            return edge.v
        if edge.v == v:
            return edge.u
        raise GraphError(f"Edge {edge_id} is not incident to {v}")

    def parallel_classes(self) -> list[tuple[tuple[int, int], tuple[int, ...]]]:
        """(normalized pair, edge ids) for every adjacent pair, sorted by pair."""
        return sorted(self._pair_index.items())

    def pairs(self) -> list[tuple[int, int]]:
        """Normalized (min, max) endpoint pairs in edge id order."""
        return [_pair(edge.u, edge.v) for edge in self.edges]

    def edge_subgraph(self, edge_ids: Iterable[int]) -> Multigraph:
        """Same vertex set; kept edges are renumbered in the order given."""
        return Multigraph.from_edges(
            self.vertex_count, ((self.edges[e].u, self.edges[e].v) for e in edge_ids)
        )

    def without_vertex(self, v: int) -> Multigraph:
        """Delete v and shift higher vertex ids down by one."""

        def shift(w: int) -> int:
            return w - 1 if w > v else w

        return Multigraph.from_edges(
            self.vertex_count - 1,
            (
                (shift(edge.u), shift(edge.v))
                for edge in self.edges
                if v not in (edge.u, edge.v)
            ),
        )

    def to_simple_networkx(self) -> nx.Graph:
        graph = nx.Graph()
        graph.add_nodes_from(range(self.vertex_count))
        graph.add_edges_from(self.pairs())
        return graph


@dataclass(frozen=True)
class LineGraphMap:
    """L(H) together with the bijection between host edges and its vertices."""

    host: Multigraph
    line_graph: Multigraph
    edge_to_vertex: tuple[int, ...]
    vertex_to_edge: tuple[int, ...]

    def vertex_of(self, edge_id: int) -> int:
        return self.edge_to_vertex[edge_id]

    def edge_of(self, vertex: int) -> Edge:
        return self.host.edges[self.vertex_to_edge[vertex]]


@dataclass(frozen=True)
class BlowupMap:
    """B_m(G); copy k of vertex x is blown vertex m*x + k."""

    base: Multigraph
    m: int
    blown_graph: Multigraph

    def copy(self, x: int, k: int) -> int:
        return self.m * x + k

    def origin(self, blown_vertex: int) -> tuple[int, int]:
        return divmod(blown_vertex, self.m)

    def copies(self, x: int) -> tuple[int, ...]:
        return tuple(self.m * x + k for k in range(self.m))


def _pair(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)
