from itertools import combinations

from app.exceptions import GraphError, InvalidParameterError
from app.models.graph import BlowupMap, LineGraphMap, Multigraph


def line_graph(host: Multigraph) -> LineGraphMap:
    """Build L(H); line-graph vertex i is host edge i.

    Two host edges are adjacent when they share at least one endpoint, so a
    pair of parallel edges yields a single line-graph edge.
    """
    adjacent: set[tuple[int, int]] = set()
    for incident in host.incidence:
        adjacent.update(combinations(incident, 2))
    identity = tuple(range(host.edge_count))
    return LineGraphMap(
        host=host,
        line_graph=Multigraph.from_edges(host.edge_count, sorted(adjacent)),
        edge_to_vertex=identity,
        vertex_to_edge=identity,
    )


def blow_up(graph: Multigraph, m: int) -> BlowupMap:
    """Replace every vertex by an independent m-set, every edge by K_{m,m}."""
    if m < 1:
        raise InvalidParameterError("m", m, "m >= 1")
    if not graph.is_simple:
        raise GraphError("Blow-up is defined for simple graphs only")
    blown = Multigraph.from_edges(
        m * graph.vertex_count,
        (
            (m * edge.u + a, m * edge.v + b)
            for edge in graph.edges
            for a in range(m)
            for b in range(m)
        ),
    )
    return BlowupMap(base=graph, m=m, blown_graph=blown)


def multiply_edges(host: Multigraph, m: int) -> Multigraph:
    """mH: copy k of edge e gets id m*e + k."""
    if m < 1:
        raise InvalidParameterError("m", m, "m >= 1")
    return Multigraph.from_edges(
        host.vertex_count,
        ((edge.u, edge.v) for edge in host.edges for _ in range(m)),
    )


def blowup_embeds(host: Multigraph, m: int) -> bool:
    """Check B_m(L(H)) ⊆ L(mH) under copy k of x -> edge m*x + k of mH.

    Also checks that the m copies of each L(H) vertex are pairwise adjacent
    in L(mH), which is what lets same-terminal copy pairs use single edges.
    """
    base = line_graph(host).line_graph
    lifted = line_graph(multiply_edges(host, m)).line_graph
    blown = blow_up(base, m)
    if blown.blown_graph.vertex_count != lifted.vertex_count:
        return False
    if not all(lifted.has_edge(edge.u, edge.v) for edge in blown.blown_graph.edges):
        return False
    return all(
        lifted.has_edge(a, b)
        for x in range(base.vertex_count)
        for a, b in combinations(blown.copies(x), 2)
    )
