"""Totally odd strong clique immersions in line graphs.

A path system in the host H (two vertices x, y joined by d edge-disjoint
paths) lifts to d paths of L(H) whose first vertices (the edges at x) form
a clique. ``assemble`` extends each lifted path to a common hub vertex v*
near y, choosing the extension by the parity pattern of the path lengths,
so every terminal pair ends up joined by an odd path.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import cached_property
from itertools import combinations
from typing import Callable

import networkx as nx

from app.config import DEFAULT_BUDGET, logger
from app.events.publisher import event_publisher
from app.exceptions import (
    ClaimViolatedError,
    GraphError,
    InvalidParameterError,
    InvariantPanicError,
    UnreachableCaseError,
    UnrepairableError,
)
from app.models.certificate_schemas import (
    CertificateProperties,
    HostGraph,
    ImmersionCertificate,
    PairPath,
    Provenance,
)
from app.models.graph import LineGraphMap, Multigraph
from app.models.ledger_schemas import SearchOutcome
from app.models.report_schemas import VerificationReport
from app.services.coloring import chromatic_index, critical_edge_ids
from app.services.operators import line_graph
from app.services.oracle import SearchBudget, SearchFlags, find_immersion, shortest_odd_path
from app.services.paths import PathSystem, Walk, thomassen_system
from app.services.verify import full_flags, verify

STAR = "star"
ODD_CYCLE = "odd-cycle"
MANY_ODD = "j>=4"
THREE_ODD_LONG_EVEN = "j=3,l4>=2"
THREE_ODD_DIRECT = "j=3,l4=0"
THREE_ODD_CUBIC = "j=3,d=3"
NO_ODD = "j=0"
ONE_ODD = "j=1"
TWO_ODD = "j=2,d>=4"
TWO_ODD_CUBIC = "j=2,d=3"


class Attachment(str, Enum):
    AT_H1 = "at_h1"
    AT_H2 = "at_h2"


@dataclass(frozen=True)
class LiftedSystem:
    """A path system whose paths are also read as paths Q_i of L(H).

    Q_i runs through the L(H) vertices of the host edges of path i, so it
    has ``lengths[i]`` edges. The length-1 host path, if any, is last.
    """

    system: PathSystem
    lmap: LineGraphMap

    @property
    def walks(self) -> tuple[Walk, ...]:
        return self.system.paths

    @cached_property
    def q(self) -> tuple[tuple[int, ...], ...]:
        return tuple(tuple(self.lmap.vertex_of(e) for e in w.edges) for w in self.walks)

    @property
    def d(self) -> int:
        return self.system.d

    @property
    def lengths(self) -> tuple[int, ...]:
        return tuple(len(q) - 1 for q in self.q)

    @property
    def parity_count(self) -> int:
        return sum(1 for length in self.lengths if length % 2 == 1)


def lift_paths(system: PathSystem, lmap: LineGraphMap) -> LiftedSystem:
    ordered = sorted(system.paths, key=lambda walk: walk.length == 1)
    lifted = LiftedSystem(PathSystem(system.x, system.y, tuple(ordered)), lmap)
    firsts = [q[0] for q in lifted.q]
    if len(set(firsts)) != len(firsts):
        raise InvariantPanicError("lift", f"first vertices {firsts} repeat")
    for a, b in combinations(firsts, 2):
        if not lmap.line_graph.has_edge(a, b):
            raise InvariantPanicError("lift", f"first vertices {a} and {b} are not adjacent")
    return lifted


def _edge_at(
    host: Multigraph,
    lmap: LineGraphMap,
    vertex: int,
    excluded: set[int],
) -> int | None:
    candidates = [e for e in host.incidence[vertex] if e not in excluded]
    return lmap.vertex_of(min(candidates)) if candidates else None


def third_neighbor(
    host: Multigraph, lmap: LineGraphMap, walk: Walk, index: int | None = None
) -> tuple[int, Attachment]:
    """An L(H) vertex to splice into Q_i so it gains one edge.

    Takes the lowest-id host edge off the path at its second vertex h1,
    falling back to its third vertex h2. The path needs at least two
    interior vertices.
    """
    if len(walk.vertices) < 4:
        raise ClaimViolatedError(index, f"path {walk.vertices} has fewer than two interior vertices")
    on_path = set(walk.edges)
    h1, h2 = walk.vertices[1], walk.vertices[2]
    for attachment, h in ((Attachment.AT_H1, h1), (Attachment.AT_H2, h2)):
        vertex = _edge_at(host, lmap, h, on_path)
        if vertex is not None:
            return vertex, attachment
    raise ClaimViolatedError(index, f"h1={h1} and h2={h2} carry no edge outside the path")


@dataclass(frozen=True)
class CaseContext:
    """Paths arranged for one case; indices are 1-based as in the case table."""

    case: str
    host: Multigraph
    lmap: LineGraphMap
    walks: tuple[Walk, ...]
    q: tuple[tuple[int, ...], ...]

    @property
    def d(self) -> int:
        return len(self.walks)

    @property
    def parity_count(self) -> int:
        return sum(1 for q in self.q if (len(q) - 1) % 2 == 1)

    def path(self, i: int) -> list[int]:
        return list(self.q[i - 1])

    def first(self, i: int) -> int:
        return self.q[i - 1][0]

    def last(self, i: int) -> int:
        return self.q[i - 1][-1]

    def h(self, i: int, k: int) -> int:
        return self.walks[i - 1].vertices[k]

    def used_edges(self) -> set[int]:
        return {e for walk in self.walks for e in walk.edges}

    def spliced(self, i: int) -> list[int]:
        """Q_i with its third neighbor inserted next to h1 or h2."""
        vertex, attachment = third_neighbor(self.host, self.lmap, self.walks[i - 1], i)
        q = self.path(i)
        position = 1 if attachment is Attachment.AT_H1 else 2
        return q[:position] + [vertex] + q[position:]

    def detoured(self, i: int, excluded: set[int]) -> list[int]:
        """Q_i with the lowest free edge at h1 inserted after its first vertex."""
        vertex = _edge_at(self.host, self.lmap, self.h(i, 1), excluded)
        if vertex is None:
            raise ClaimViolatedError(i, f"h1={self.h(i, 1)} has no edge off the system")
        q = self.path(i)
        return [q[0], vertex] + q[1:]


Hubs = tuple[int, dict[int, list[int]]]
CASE_HANDLERS: dict[str, Callable[[CaseContext], Hubs]] = {}


def register_case(tag: str):
    def decorator(handler: Callable[[CaseContext], Hubs]):
        CASE_HANDLERS[tag] = handler
        return handler

    return decorator


def dispatch_case(context: CaseContext) -> Hubs:
    if context.case not in CASE_HANDLERS:
        raise UnreachableCaseError(context.case, "no handler registered")
    logger.info(f"Dispatching case {context.case} (d={context.d})")
    return CASE_HANDLERS[context.case](context)


@register_case(MANY_ODD)
def _many_odd(c: CaseContext) -> Hubs:
    j = c.parity_count
    hubs = {1: c.path(1)}
    for i in range(2, j):
        hubs[i] = c.path(i) + [c.last(i + 1), c.last(1)]
    hubs[j] = c.path(j) + [c.last(2), c.last(1)]
    for i in range(j + 1, c.d + 1):
        hubs[i] = c.path(i) + [c.last(1)]
    return c.last(1), hubs


@register_case(THREE_ODD_LONG_EVEN)
def _three_odd_long_even(c: CaseContext) -> Hubs:
    hub = c.last(4)
    hubs = {
        1: c.path(1) + [c.last(2), hub],
        2: c.path(2) + [c.last(3), hub],
        3: c.path(3) + [c.last(1), hub],
        4: c.spliced(4),
    }
    for i in range(5, c.d + 1):
        hubs[i] = c.path(i) + [hub]
    return hub, hubs


@register_case(THREE_ODD_DIRECT)
def _three_odd_direct(c: CaseContext) -> Hubs:
    detour = c.detoured(3, set(c.walks[2].edges))
    return c.last(1), {
        1: c.path(1),
        2: c.path(2) + [c.last(3), c.last(1)],
        3: detour + [c.last(4), c.last(2), c.last(1)],
        4: c.path(4) + [c.last(1)],
    }


@register_case(THREE_ODD_CUBIC)
def _three_odd_cubic(c: CaseContext) -> Hubs:
    used = c.used_edges()
    return c.last(1), {
        1: c.path(1),
        2: c.detoured(2, used) + [c.last(1)],
        3: c.detoured(3, used) + [c.last(1)],
    }


@register_case(NO_ODD)
def _no_odd(c: CaseContext) -> Hubs:
    hubs = {1: c.spliced(1)}
    for i in range(2, c.d + 1):
        hubs[i] = c.path(i) + [c.last(1)]
    return c.last(1), hubs


@register_case(ONE_ODD)
def _one_odd(c: CaseContext) -> Hubs:
    hubs = {1: c.path(1)}
    for i in range(2, c.d + 1):
        hubs[i] = c.path(i) + [c.last(1)]
    return c.last(1), hubs


@register_case(TWO_ODD)
def _two_odd(c: CaseContext) -> Hubs:
    hubs = {
        1: c.path(1),
        2: c.path(2) + [c.last(3), c.last(1)],
        3: c.path(3) + [c.last(4), c.last(2), c.last(1)],
    }
    for i in range(4, c.d + 1):
        hubs[i] = c.path(i) + [c.last(1)]
    return c.last(1), hubs


@register_case(TWO_ODD_CUBIC)
def _two_odd_cubic(c: CaseContext) -> Hubs:
    return c.last(1), {
        1: c.path(1),
        2: c.detoured(2, set(c.walks[1].edges)) + [c.last(1)],
        3: c.path(3) + [c.last(1)],
    }


def _classify(lifted: LiftedSystem, host: Multigraph) -> tuple[str, list[int]]:
    """Case tag plus the order (0-based indices into the lifted paths) it wants.

    Odd paths come first, then even ones, the length-1 host path last.
    Some cases additionally need an odd path whose h1 has degree at least 3
    at a fixed position.
    """
    d = lifted.d
    lengths = lifted.lengths
    odd = [i for i in range(d) if lengths[i] % 2 == 1]
    even = [i for i in range(d) if lengths[i] % 2 == 0 and lengths[i] > 0]
    degenerate = [i for i in range(d) if lengths[i] == 0]
    j = len(odd)

    def branching(i: int) -> bool:
        return host.degree(lifted.walks[i].vertices[1]) >= 3

    if j >= 4:
        return MANY_ODD, odd + even + degenerate
    if j == 3:
        if d == 3:
            qualified = [i for i in odd if branching(i)]
            if len(qualified) < 2:
                raise ClaimViolatedError(None, "fewer than two odd paths branch at h1")
            if len(qualified) == 3:
                return THREE_ODD_CUBIC, odd
            return THREE_ODD_CUBIC, [i for i in odd if i not in qualified] + qualified
        if even:
            return THREE_ODD_LONG_EVEN, odd + even + degenerate
        if d != 4 or not degenerate:
            raise UnreachableCaseError("j=3", f"d={d} with lengths {lengths}")
        order = list(odd)
        if not branching(order[2]):
            qualified = [i for i in odd if branching(i)]
            if not qualified:
                raise ClaimViolatedError(None, "no odd path branches at h1")
            swap = order.index(qualified[-1])
            order[2], order[swap] = order[swap], order[2]
        return THREE_ODD_DIRECT, order + degenerate
    if j == 0:
        return NO_ODD, even + degenerate
    if j == 1:
        return ONE_ODD, odd + even + degenerate
    if d >= 4:
        return TWO_ODD, odd + even + degenerate
    order = odd + even + degenerate
    if not branching(order[1]):
        if not branching(order[0]):
            raise ClaimViolatedError(None, "neither odd path branches at h1")
        order[0], order[1] = order[1], order[0]
    return TWO_ODD_CUBIC, order


def _check_hubs(context: CaseContext, hub: int, hubs: dict[int, list[int]]):
    firsts = [context.first(i) for i in range(1, context.d + 1)]
    if hub in firsts:
        raise InvariantPanicError(context.case, f"hub {hub} is also a first vertex")
    if sorted(hubs) != list(range(1, context.d + 1)):
        raise InvariantPanicError(context.case, f"hub paths for {sorted(hubs)}")
    graph = context.lmap.line_graph
    for i, sequence in hubs.items():
        if sequence[0] != context.first(i) or sequence[-1] != hub:
            raise InvariantPanicError(context.case, f"Q'_{i} runs {sequence[0]} -> {sequence[-1]}")
        if (len(sequence) - 1) % 2 == 0:
            raise InvariantPanicError(
                context.case,
                f"Q'_{i} has even length {len(sequence) - 1} from l_{i}={len(context.q[i - 1]) - 1}",
            )
        for a, b in zip(sequence, sequence[1:]):
            if not graph.has_edge(a, b):
                raise InvariantPanicError(context.case, f"Q'_{i} steps {a}-{b} off L(H)")


def assemble(lifted: LiftedSystem, host: Multigraph) -> ImmersionCertificate:
    """Certificate for K_{d+1} in L(H) from a lifted system.

    The result is verified here; a strongness failure is reported and
    recorded in ``properties`` instead of raised.
    """
    if lifted.d < 3:
        raise InvalidParameterError("d", lifted.d, "at least 3")
    case, order = _classify(lifted, host)
    context = CaseContext(
        case=case,
        host=host,
        lmap=lifted.lmap,
        walks=tuple(lifted.walks[i] for i in order),
        q=tuple(lifted.q[i] for i in order),
    )
    hub, hubs = dispatch_case(context)
    _check_hubs(context, hub, hubs)

    firsts = [context.first(i) for i in range(1, context.d + 1)]
    paths = [PairPath(pair=(a, b), vertices=[a, b]) for a, b in combinations(firsts, 2)]
    paths += [PairPath(pair=(firsts[i - 1], hub), vertices=hubs[i]) for i in sorted(hubs)]
    t = context.d + 1
    draft = ImmersionCertificate(
        host=HostGraph.from_graph(lifted.lmap.line_graph),
        t=t,
        terminals=[*firsts, hub],
        paths=paths,
        properties=CertificateProperties(strong=True, totally_odd=True),
        provenance=Provenance(case=case),
    )
    report = verify(lifted.lmap.line_graph, draft, full_flags(t))
    return _settle(draft, report)


def _settle(certificate: ImmersionCertificate, report: VerificationReport) -> ImmersionCertificate:
    case = certificate.provenance.case
    strong = report.check("strong")
    if not strong.passed:
        event_publisher.publish_event(
            "certificate.strongness_violated",
            {"case": case, "witnesses": [w.detail for w in strong.witnesses]},
        )
    others = [c.name for c in report.failed() if c.name != "strong"]
    if others:
        logger.warning(f"⚠️ Case {case} assembled paths fail {others}")
    return certificate.model_copy(
        update={
            "properties": CertificateProperties(
                strong=strong.passed, totally_odd=report.check("totally_odd").passed
            )
        }
    )


def _star_certificate(host: Multigraph, lmap: LineGraphMap) -> ImmersionCertificate:
    """The edges at a maximum-degree vertex are a clique of L(H) already."""
    if host.edge_count == 0:
        terminals: list[int] = []
    else:
        center = next(v for v in range(host.vertex_count) if host.degree(v) == host.max_degree)
        terminals = sorted(lmap.vertex_of(e) for e in host.incidence[center])
    return ImmersionCertificate(
        host=HostGraph.from_graph(lmap.line_graph),
        t=len(terminals),
        terminals=terminals,
        paths=[PairPath(pair=(a, b), vertices=[a, b]) for a, b in combinations(terminals, 2)],
        properties=CertificateProperties(strong=True, totally_odd=True),
        provenance=Provenance(case=STAR),
    )


def _odd_cycle_certificate(host: Multigraph, lmap: LineGraphMap) -> ImmersionCertificate:
    """K_3 on three consecutive edges of an odd cycle component."""
    for component in sorted(nx.connected_components(host.to_simple_networkx()), key=min):
        if len(component) < 3 or len(component) % 2 == 0:
            continue
        if any(host.degree(v) != 2 for v in component):
            continue
        start = min(component)
        cycle: list[int] = []
        vertex, previous = start, None
        while True:
            edge_id = min(e for e in host.incidence[vertex] if e != previous)
            cycle.append(lmap.vertex_of(edge_id))
            previous = edge_id
            vertex = host.other_end(edge_id, vertex)
            if vertex == start:
                break
        c0, c1, c2 = cycle[:3]
        return ImmersionCertificate(
            host=HostGraph.from_graph(lmap.line_graph),
            t=3,
            terminals=[c0, c1, c2],
            paths=[
                PairPath(pair=(c0, c1), vertices=[c0, c1]),
                PairPath(pair=(c1, c2), vertices=[c1, c2]),
                PairPath(pair=(c0, c2), vertices=[c0, *cycle[:1:-1]]),
            ],
            properties=CertificateProperties(strong=True, totally_odd=True),
            provenance=Provenance(case=ODD_CYCLE),
        )
    raise InvariantPanicError(ODD_CYCLE, "class 2 with Δ ≤ 2 but no odd cycle component")


def _embed(certificate: ImmersionCertificate, kept: tuple[int, ...], graph: Multigraph):
    """Move a certificate from L(H') to L(H); vertex v of L(H') is host edge kept[v]."""
    return certificate.model_copy(
        update={
            "host": HostGraph.from_graph(graph),
            "terminals": [kept[v] for v in certificate.terminals],
            "paths": [
                PairPath(
                    pair=(kept[p.pair[0]], kept[p.pair[1]]),
                    vertices=[kept[v] for v in p.vertices],
                )
                for p in certificate.paths
            ],
        }
    )


def construct_immersion(host: Multigraph, budget: int = DEFAULT_BUDGET) -> ImmersionCertificate:
    """Totally odd strong K_{χ'(H)} immersion in L(H), verified before return."""
    if not host.is_simple:
        raise GraphError("Constructions take simple host graphs")
    lmap = line_graph(host)
    graph = lmap.line_graph
    chi, _ = chromatic_index(host, budget)
    delta = host.max_degree

    if chi == delta:
        certificate = _star_certificate(host, lmap)
    elif delta <= 2:
        certificate = _odd_cycle_certificate(host, lmap)
    else:
        kept = critical_edge_ids(host, budget)
        critical = host.edge_subgraph(kept)
        system = thomassen_system(critical, delta, budget, assume_class_two=True)
        local_map = line_graph(critical)
        local = assemble(lift_paths(system, local_map), critical)
        certificate = _embed(local, kept, graph)

    report = verify(graph, certificate, full_flags(chi))
    if not report.overall:
        certificate = repair(certificate, graph, report, budget)
    event_publisher.publish_event(
        "certificate.assembled",
        {
            "t": certificate.t,
            "case": certificate.provenance.case,
            "steps": certificate.provenance.steps,
        },
    )
    return certificate


def _reroute(
    certificate: ImmersionCertificate,
    graph: Multigraph,
    report: VerificationReport,
    budget: int,
) -> tuple[ImmersionCertificate, list[int]] | None:
    """Replace every path named by a witness with a shortest admissible odd path."""
    failed = report.failed()
    local = {"paths", "edge_disjoint", "strong", "totally_odd"}
    if any(c.name not in local for c in failed):
        return None
    witnesses = [w for c in failed for w in c.witnesses]
    if any(w.path_index is None for w in witnesses):
        return None
    offending = sorted({w.path_index for w in witnesses})
    paths = list(certificate.paths)
    terminals = frozenset(certificate.terminals)
    for index in offending:
        a, b = paths[index].pair
        used = {
            (min(u, v), max(u, v))
            for k, other in enumerate(paths)
            if k != index
            for u, v in zip(other.vertices, other.vertices[1:])
        }
        found = shortest_odd_path(graph, a, b, used, terminals, budget)
        if found is None:
            logger.info(f"No admissible odd path for pair ({a}, {b}); rerouting abandoned")
            return None
        paths[index] = PairPath(pair=(a, b), vertices=found)
    candidate = certificate.model_copy(
        update={
            "paths": paths,
            "properties": CertificateProperties(strong=True, totally_odd=True),
        }
    ).with_steps("repair")
    if not verify(graph, candidate, full_flags(certificate.t)).overall:
        return None
    return candidate, offending


def repair(
    certificate: ImmersionCertificate,
    graph: Multigraph,
    report: VerificationReport | None = None,
    budget: int = DEFAULT_BUDGET,
) -> ImmersionCertificate:
    """Fix a certificate that fails verification, keeping its terminals.

    Offending paths are rerouted one by one first; if that fails the oracle
    searches the same terminal set from scratch.
    """
    report = report or verify(graph, certificate, full_flags(certificate.t))
    if report.overall:
        return certificate
    case = certificate.provenance.case
    failed = [c.name for c in report.failed()]
    logger.info(f"Repairing certificate from case {case}: {failed} failed")

    rerouted = _reroute(certificate, graph, report, budget)
    if rerouted is not None:
        repaired, offending = rerouted
        event_publisher.publish_event(
            "certificate.repaired", {"case": case, "method": "reroute", "rerouted": offending}
        )
        return repaired

    result = find_immersion(
        graph,
        certificate.t,
        SearchFlags(strong=True, totally_odd=True),
        SearchBudget(max_nodes=budget),
        terminals=certificate.terminals,
    )
    if result.outcome == SearchOutcome.FOUND:
        repaired = result.certificate.model_copy(
            update={
                "provenance": Provenance(
                    case=case, steps=[*certificate.provenance.steps, "repair", "oracle"]
                )
            }
        )
        event_publisher.publish_event(
            "certificate.repaired", {"case": case, "method": "oracle", "rerouted": None}
        )
        return repaired

    diagnostics = [f"{c.name}: {[w.detail for w in c.witnesses]}" for c in report.failed()]
    event_publisher.publish_event("certificate.repair_failed", {"case": case, "failed": failed})
    raise UnrepairableError(case, diagnostics)
