"""Small-graph enumeration for the conjecture scanner.

Canonical labelling is individualisation-refinement with automorphism
pruning, so vertex-transitive and edgeless inputs stay cheap.
"""

from collections import Counter
from itertools import combinations
from typing import Iterator, NamedTuple

from app.config import logger
from app.exceptions import GraphError, InvalidParameterError
from app.models.graph import Multigraph
from app.utils.graph_io import to_graph6

Cells = list[tuple[int, ...]]


def _refine(adjacency: tuple[frozenset[int], ...], cells: Cells) -> Cells:
    """Split cells by neighbour counts per cell until the partition is equitable."""
    while True:
        cell_of = {v: index for index, cell in enumerate(cells) for v in cell}
        refined: Cells = []
        for cell in cells:
            if len(cell) == 1:
                refined.append(cell)
                continue
            groups: dict[tuple, list[int]] = {}
            for v in cell:
                signature = tuple(sorted(Counter(cell_of[u] for u in adjacency[v]).items()))
                groups.setdefault(signature, []).append(v)
            refined.extend(tuple(groups[key]) for key in sorted(groups))
        if len(refined) == len(cells):
            return refined
        cells = refined


class _Leaf(NamedTuple):
    order: tuple[int, ...]
    path: tuple[int, ...]
    code: tuple[tuple[int, int], ...]


def canonical_edges(graph: Multigraph) -> tuple[tuple[int, int], ...]:
    """Lexicographically least relabelled edge list over all refinement leaves.

    Leaves with equal codes give automorphisms. They prune children in one
    orbit of the pointwise stabiliser of the current path, and send the
    search back to the node where the new leaf left the first or best path.
    """
    if not graph.is_simple:
        raise GraphError("Canonical forms are computed for simple graphs")
    n = graph.vertex_count
    adjacency = graph.adjacency
    first: list[_Leaf] = []
    best: list[_Leaf] = []
    automorphisms: list[tuple[int, ...]] = []

    def code_of(order: tuple[int, ...]) -> tuple[tuple[int, int], ...]:
        position = {v: i for i, v in enumerate(order)}
        return tuple(
            sorted(
                (min(position[e.u], position[e.v]), max(position[e.u], position[e.v]))
                for e in graph.edges
            )
        )

    def leaf(order: tuple[int, ...], path: tuple[int, ...]) -> int | None:
        found = _Leaf(order, path, code_of(order))
        if not first:
            first.append(found)
            best.append(found)
            return None
        for reference in (first[0], best[0]):
            if found.code == reference.code:
                position = {v: i for i, v in enumerate(order)}
                automorphisms.append(tuple(reference.order[position[v]] for v in range(n)))
                shared = 0
                while (
                    shared < min(len(path), len(reference.path))
                    and path[shared] == reference.path[shared]
                ):
                    shared += 1
                return shared
        if found.code < best[0].code:
            best[0] = found
        return None

    def in_explored_orbit(path: tuple[int, ...], explored: list[int], v: int) -> bool:
        parent = list(range(n))

        def root(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for gamma in automorphisms:
            if all(gamma[u] == u for u in path):
                for x in range(n):
                    parent[root(x)] = root(gamma[x])
        return root(v) in {root(u) for u in explored}

    def search(cells: Cells, path: tuple[int, ...]) -> int | None:
        cells = _refine(adjacency, cells)
        target = next((i for i, cell in enumerate(cells) if len(cell) > 1), None)
        if target is None:
            return leaf(tuple(cell[0] for cell in cells), path)
        depth = len(path)
        explored: list[int] = []
        cell = cells[target]
        for v in cell:
            if explored and in_explored_orbit(path, explored, v):
                continue
            explored.append(v)
            rest = tuple(u for u in cell if u != v)
            jump = search(cells[:target] + [(v,), rest] + cells[target + 1 :], path + (v,))
            if jump is not None and jump < depth:
                return jump
        return None

    search([tuple(range(n))] if n else [], ())
    return best[0].code


def canonical_form(graph: Multigraph) -> str:
    """graph6 string of the canonical relabelling; equal exactly for isomorphic graphs."""
    return to_graph6(Multigraph.from_edges(graph.vertex_count, canonical_edges(graph)))


def _is_connected(graph: Multigraph) -> bool:
    if graph.vertex_count == 0:
        return True
    seen = {0}
    stack = [0]
    while stack:
        for u in graph.adjacency[stack.pop()]:
            if u not in seen:
                seen.add(u)
                stack.append(u)
    return len(seen) == graph.vertex_count


def generate_graphs(max_vertices: int, connected: bool = True) -> Iterator[Multigraph]:
    """Every graph on 1..max_vertices vertices up to isomorphism, by vertex augmentation.

    Connected graphs always have a non-cut vertex, so with ``connected`` the
    parents can be restricted to connected graphs and the new vertex must
    have a neighbour. Graphs are yielded by order, then by canonical form.
    """
    if max_vertices < 0:
        raise InvalidParameterError("max_vertices", max_vertices, "a non-negative integer")
    layer: dict[str, Multigraph] = {}
    for n in range(1, max_vertices + 1):
        children: dict[str, Multigraph] = {}
        parents = layer.values() if n > 1 else [Multigraph.from_edges(0, [])]
        for parent in parents:
            new = parent.vertex_count
            for size in range(1 if connected and n > 1 else 0, new + 1):
                for neighbours in combinations(range(new), size):
                    child = Multigraph.from_edges(
                        n, [*parent.pairs(), *((u, new) for u in neighbours)]
                    )
                    relabelled = Multigraph.from_edges(n, canonical_edges(child))
                    form = to_graph6(relabelled)
                    children.setdefault(form, relabelled)
        layer = children
        logger.debug(f"Generated {len(layer)} graphs on {n} vertices")
        for form in sorted(layer):
            if not connected or _is_connected(layer[form]):
                yield layer[form]
