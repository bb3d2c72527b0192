"""Lifting certificates from L(H) to L(mH).

Each L(H) path for a terminal pair is copied m² times, one copy per pair
of terminal copies (i, j). Copy k of a vertex is ``m*x + k``, so a copy of
a path is fixed by the copy index it uses at every position.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb

from app.config import DEFAULT_BUDGET, logger
from app.events.publisher import event_publisher
from app.exceptions import (
    BudgetExceededError,
    InvalidParameterError,
    InvariantPanicError,
    UnverifiedCertificateError,
)
from app.models.certificate_schemas import (
    CertificateProperties,
    HostGraph,
    ImmersionCertificate,
    PairPath,
    Provenance,
)
from app.models.graph import Multigraph
from app.models.report_schemas import ChiBoundReport
from app.services.coloring import (
    ColoringStrategy,
    ExactColoring,
    GreedyColoring,
    chromatic_number,
)
from app.services.operators import blowup_embeds, line_graph, multiply_edges
from app.services.verify import VerifyFlags, full_flags, verify


@dataclass(frozen=True)
class BlowupRouting:
    """Copy indices for the m² copies of one path of length ``length``.

    ``assignment[(i, j)][t]`` is the copy used at position t by the copy of
    the path that starts in copy i and ends in copy j. Row t is a linear
    form (a·i + b·j) mod m; consecutive rows are independent, so every
    transition (k_t, k_{t+1}) is taken by exactly one (i, j).
    """

    m: int
    length: int
    assignment: dict[tuple[int, int], tuple[int, ...]]

    def transition(self, t: int) -> dict[tuple[int, int], tuple[int, int]]:
        return {pair: (ks[t], ks[t + 1]) for pair, ks in self.assignment.items()}

    def is_bijective(self) -> bool:
        return all(
            len(set(self.transition(t).values())) == self.m * self.m
            for t in range(self.length)
        )


@dataclass(frozen=True)
class CopyTerminalSet:
    """The m copies of every terminal, in terminal order."""

    m: int
    copies: dict[int, tuple[int, ...]]

    @classmethod
    def of(cls, terminals: list[int], m: int) -> CopyTerminalSet:
        return cls(m, {x: tuple(m * x + k for k in range(m)) for x in terminals})

    @property
    def vertices(self) -> list[int]:
        return [v for copies in self.copies.values() for v in copies]


def _rows(length: int) -> list[tuple[int, int]]:
    # start pinned to i, end pinned to j, interior alternating i and i+j
    interior = [(1, t % 2) for t in range(1, length)]
    return [(1, 0), *interior, (0, 1)]


def route(m: int, length: int) -> BlowupRouting:
    if m < 1:
        raise InvalidParameterError("m", m, "m >= 1")
    if length < 1:
        raise InvalidParameterError("length", length, "length >= 1")
    rows = _rows(length)
    assignment = {
        (i, j): tuple((a * i + b * j) % m for a, b in rows)
        for i in range(m)
        for j in range(m)
    }
    return BlowupRouting(m, length, assignment)


def lift_certificate(
    certificate: ImmersionCertificate, host: Multigraph, m: int
) -> ImmersionCertificate:
    """K_{mt} in L(mH) from a verified totally odd K_t immersion in L(H)."""
    if m < 1:
        raise InvalidParameterError("m", m, "m >= 1")
    graph = line_graph(host).line_graph
    report = verify(
        graph,
        certificate,
        VerifyFlags(immersion=True, totally_odd=True, clique_order=certificate.t),
    )
    if not report.overall:
        raise UnverifiedCertificateError([c.name for c in report.failed()])
    if not blowup_embeds(host, m):
        raise InvariantPanicError(f"blowup(m={m})", "B_m(L(H)) is not a subgraph of L(mH)")

    lifted_graph = line_graph(multiply_edges(host, m)).line_graph
    copies = CopyTerminalSet.of(certificate.terminals, m)
    paths = []
    for path in certificate.paths:
        routing = route(m, path.length)
        for (i, j), ks in routing.assignment.items():
            paths.append(
                PairPath(
                    pair=(m * path.pair[0] + i, m * path.pair[1] + j),
                    vertices=[m * x + k for x, k in zip(path.vertices, ks)],
                )
            )
    for x in certificate.terminals:
        paths.extend(
            PairPath(pair=(a, b), vertices=[a, b]) for a, b in combinations(copies.copies[x], 2)
        )
    t = m * certificate.t
    if len(paths) != comb(t, 2):
        raise InvariantPanicError(f"blowup(m={m})", f"{len(paths)} paths for K_{t}")

    tag = f"blowup(m={m})"
    draft = ImmersionCertificate(
        host=HostGraph.from_graph(lifted_graph),
        t=t,
        terminals=copies.vertices,
        paths=paths,
        properties=CertificateProperties(strong=True, totally_odd=True),
        provenance=Provenance(
            case=certificate.provenance.case, steps=[*certificate.provenance.steps, tag]
        ),
    )
    lifted_report = verify(lifted_graph, draft, full_flags(t))
    strong = lifted_report.check("strong").passed
    if not all(c.passed for c in lifted_report.checks if c.name != "strong"):
        raise InvariantPanicError(tag, f"lifted certificate fails {lifted_report.failed()}")
    event_publisher.publish_event(
        "certificate.lifted", {"m": m, "t": t, "source_t": certificate.t, "strong": strong}
    )
    return draft.model_copy(
        update={"properties": CertificateProperties(strong=strong, totally_odd=True)}
    )


def chi_bound_check(
    host: Multigraph, m: int, budget: int = DEFAULT_BUDGET
) -> ChiBoundReport:
    """Compare χ(L(mH)) with m·χ(L(H)); falls back to a greedy bound past the budget."""
    if m < 1:
        raise InvalidParameterError("m", m, "m >= 1")
    base_chi, _ = chromatic_number(line_graph(host).line_graph, budget)
    lifted = line_graph(multiply_edges(host, m)).line_graph
    strategy: ColoringStrategy = ExactColoring(budget)
    try:
        coloring = strategy.color(lifted)
    except BudgetExceededError:
        logger.warning(f"⚠️ χ(L({m}H)) out of budget; reporting a greedy upper bound")
        strategy = GreedyColoring()
        coloring = strategy.color(lifted)
    return ChiBoundReport(
        m=m,
        base_chi=base_chi,
        value=coloring.palette_size,
        bound=m * base_chi,
        exact=strategy.exact,
    )
