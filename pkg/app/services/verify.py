"""Independent certificate verification.

Every check replays the certificate against the host graph alone; nothing
about how the certificate was produced is consulted.
"""

from dataclasses import dataclass
from itertools import combinations
from math import comb
from typing import Optional

from app.exceptions import HostMismatchError, UnsupportedHostError
from app.models.certificate_schemas import ImmersionCertificate
from app.models.graph import Multigraph
from app.models.report_schemas import CheckResult, VerificationReport, Witness


@dataclass(frozen=True)
class VerifyFlags:
    immersion: bool = True
    strong: bool = False
    totally_odd: bool = False
    clique_order: Optional[int] = None


def full_flags(t: int) -> VerifyFlags:
    return VerifyFlags(immersion=True, strong=True, totally_odd=True, clique_order=t)


def verify(
    graph: Multigraph, certificate: ImmersionCertificate, flags: VerifyFlags
) -> VerificationReport:
    if not graph.is_simple:
        raise UnsupportedHostError("certificates are verified in simple graphs only")
    _check_host(graph, certificate)
    checks = []
    if flags.immersion:
        checks.append(_check_terminals(graph, certificate))
        checks.append(_check_paths(graph, certificate))
        checks.append(_check_edge_disjoint(certificate))
    if flags.strong:
        checks.append(_check_strong(certificate))
    if flags.totally_odd:
        checks.append(_check_totally_odd(certificate))
    if flags.clique_order is not None:
        checks.append(_check_clique_order(certificate, flags.clique_order))
    return VerificationReport(checks=checks)


def _check_host(graph: Multigraph, certificate: ImmersionCertificate):
    host = certificate.host
    if host.n != graph.vertex_count:
        raise HostMismatchError(f"{host.n} vertices declared, graph has {graph.vertex_count}")
    declared = sorted((min(u, v), max(u, v)) for u, v in host.edges)
    if declared != sorted(graph.pairs()):
        raise HostMismatchError("edge sets differ")


def _check_terminals(graph: Multigraph, certificate: ImmersionCertificate) -> CheckResult:
    witnesses = []
    seen = set()
    for terminal in certificate.terminals:
        if terminal in seen:
            witnesses.append(Witness(detail=f"terminal {terminal} repeated"))
        if not 0 <= terminal < graph.vertex_count:
            witnesses.append(Witness(detail=f"terminal {terminal} is not a host vertex"))
        seen.add(terminal)
    if len(certificate.terminals) != certificate.t:
        witnesses.append(
            Witness(detail=f"{len(certificate.terminals)} terminals declared for t={certificate.t}")
        )
    return CheckResult(name="terminals", passed=not witnesses, witnesses=witnesses)


def _check_paths(graph: Multigraph, certificate: ImmersionCertificate) -> CheckResult:
    witnesses = []
    terminals = set(certificate.terminals)
    for index, path in enumerate(certificate.paths):
        a, b = path.pair
        vertices = path.vertices

        def fail(detail: str):
            witnesses.append(Witness(path_index=index, detail=f"pair ({a}, {b}): {detail}"))

        if a == b:
            fail("pair joins a terminal to itself")
        if a not in terminals or b not in terminals:
            fail("pair member is not a terminal")
        if not vertices:
            fail("empty path")
            continue
        if vertices[0] != a or vertices[-1] != b:
            fail(f"path runs {vertices[0]} -> {vertices[-1]}")
        if len(set(vertices)) != len(vertices):
            fail("path repeats a vertex")
        for u, v in zip(vertices, vertices[1:]):
            if not (0 <= u < graph.vertex_count and 0 <= v < graph.vertex_count):
                fail(f"step {u}-{v} leaves the host")
            elif not graph.has_edge(u, v):
                fail(f"step {u}-{v} is not an edge")
    return CheckResult(name="paths", passed=not witnesses, witnesses=witnesses)


def _check_edge_disjoint(certificate: ImmersionCertificate) -> CheckResult:
    witnesses = []
    owner: dict[tuple[int, int], int] = {}
    for index, path in enumerate(certificate.paths):
        for u, v in zip(path.vertices, path.vertices[1:]):
            edge = (min(u, v), max(u, v))
            if edge in owner:
                witnesses.append(
                    Witness(
                        path_index=index,
                        detail=f"edge {edge} used by paths {owner[edge]} and {index}",
                    )
                )
            else:
                owner[edge] = index
    return CheckResult(name="edge_disjoint", passed=not witnesses, witnesses=witnesses)


def _check_strong(certificate: ImmersionCertificate) -> CheckResult:
    terminals = set(certificate.terminals)
    witnesses = [
        Witness(
            path_index=index,
            detail=f"terminal {v} is interior to the path for pair {tuple(path.pair)}",
        )
        for index, path in enumerate(certificate.paths)
        for v in path.vertices[1:-1]
        if v in terminals
    ]
    return CheckResult(name="strong", passed=not witnesses, witnesses=witnesses)


def _check_totally_odd(certificate: ImmersionCertificate) -> CheckResult:
    witnesses = [
        Witness(path_index=index, detail=f"pair {tuple(path.pair)} has length {path.length}")
        for index, path in enumerate(certificate.paths)
        if path.length % 2 == 0
    ]
    return CheckResult(name="totally_odd", passed=not witnesses, witnesses=witnesses)


def _check_clique_order(certificate: ImmersionCertificate, t: int) -> CheckResult:
    witnesses = []
    if certificate.t != t or len(certificate.terminals) != t:
        witnesses.append(
            Witness(detail=f"expected K_{t}, certificate declares t={certificate.t}")
        )
    if len(certificate.paths) != comb(t, 2):
        witnesses.append(Witness(detail=f"{len(certificate.paths)} paths, expected {comb(t, 2)}"))
    covered: dict[frozenset[int], int] = {}
    for index, path in enumerate(certificate.paths):
        key = frozenset(path.pair)
        if key in covered:
            witnesses.append(
                Witness(path_index=index, detail=f"pair {sorted(key)} also served by path {covered[key]}")
            )
        covered.setdefault(key, index)
    for a, b in combinations(certificate.terminals, 2):
        if frozenset((a, b)) not in covered:
            witnesses.append(Witness(detail=f"pair ({a}, {b}) has no path"))
    return CheckResult(name="clique_order", passed=not witnesses, witnesses=witnesses)
