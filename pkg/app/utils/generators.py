from dataclasses import dataclass
from itertools import combinations

from app.exceptions import InvalidParameterError
from app.models.certificate_schemas import (
    CertificateProperties,
    HostGraph,
    ImmersionCertificate,
    PairPath,
    Provenance,
)
from app.models.graph import Multigraph


def cycle(n: int) -> Multigraph:
    """C_n with edge i = (i, i+1 mod n)."""
    if n < 3:
        raise InvalidParameterError("n", n, "n >= 3")
    return Multigraph.from_edges(n, ((i, (i + 1) % n) for i in range(n)))


def path(n: int) -> Multigraph:
    """Path on n vertices."""
    return Multigraph.from_edges(n, ((i, i + 1) for i in range(n - 1)))


def star(leaves: int) -> Multigraph:
    """K_{1,leaves} with center 0."""
    return Multigraph.from_edges(leaves + 1, ((0, i) for i in range(1, leaves + 1)))


def complete(n: int) -> Multigraph:
    return Multigraph.from_edges(n, combinations(range(n), 2))


@dataclass(frozen=True)
class Flower:
    """Planar graph holding a totally odd strong immersion of K_t.

    ``terminals`` are the leaves. ``strands[(i, j)]`` is the vertex sequence
    from leaf i to the center reserved for the pair {i, j}.
    """

    graph: Multigraph
    t: int
    center: int
    terminals: tuple[int, ...]
    strands: dict[tuple[int, int], tuple[int, ...]]
    padding: int

    def connecting_path(self, i: int, j: int) -> tuple[int, ...]:
        """Leaf i -> center -> leaf j through the strands reserved for {i, j}."""
        return self.strands[(i, j)] + tuple(reversed(self.strands[(j, i)]))[1:]


def flower(t: int, padding: int = 0) -> Flower:
    """Star with t leaves, every edge replaced by t-1 subdivided strands.

    Every strand carries one subdivision vertex plus 2*padding more. The
    strand leaf i uses for a partner j > i carries one extra vertex, so
    each connecting path has length 5 + 4*padding.
    """
    if t < 3:
        raise InvalidParameterError("t", t, "t >= 3")
    if padding < 0:
        raise InvalidParameterError("padding", padding, "padding >= 0")
    center = 0
    leaves = tuple(range(1, t + 1))
    next_vertex = t + 1
    pairs: list[tuple[int, int]] = []
    strands: dict[tuple[int, int], tuple[int, ...]] = {}
    for i in leaves:
        for j in leaves:
            if i == j:
                continue
            inner = 1 + (1 if i < j else 0) + 2 * padding
            chain = (i, *range(next_vertex, next_vertex + inner), center)
            next_vertex += inner
            pairs.extend(zip(chain, chain[1:]))
            strands[(i, j)] = chain
    return Flower(
        graph=Multigraph.from_edges(next_vertex, pairs),
        t=t,
        center=center,
        terminals=leaves,
        strands=strands,
        padding=padding,
    )


def flower_certificate(f: Flower) -> ImmersionCertificate:
    """The immersion the flower is built around, on the flower itself."""
    pairs = list(combinations(f.terminals, 2))
    return ImmersionCertificate(
        host=HostGraph.from_graph(f.graph),
        t=f.t,
        terminals=list(f.terminals),
        paths=[PairPath(pair=(i, j), vertices=list(f.connecting_path(i, j))) for i, j in pairs],
        properties=CertificateProperties(strong=True, totally_odd=True),
        provenance=Provenance(case="flower"),
    )
