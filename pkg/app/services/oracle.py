"""Exhaustive search for clique immersions, and the conjecture scanner built on it.

An ``exhausted`` answer is a proof of absence only when no pair's path
enumeration was truncated; truncated searches report ``budget_out``.
"""

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import combinations, islice
from typing import Iterable, Iterator, Optional, Sequence

from tqdm import tqdm

from app.config import (
    DEFAULT_BUDGET,
    DEFAULT_MAX_PATHS_PER_PAIR,
    DEFAULT_TIME_LIMIT,
    logger,
)
from app.events.publisher import event_publisher
from app.exceptions import (
    BudgetExceededError,
    InvalidParameterError,
    InvariantPanicError,
    UnsupportedHostError,
)
from app.models.certificate_schemas import (
    CertificateProperties,
    HostGraph,
    ImmersionCertificate,
    PairPath,
    Provenance,
)
from app.models.graph import Multigraph
from app.models.ledger_schemas import LedgerEntry, ScanLedger, SearchOutcome
from app.services.coloring import chromatic_number
from app.services.verify import full_flags, verify
from app.utils.enumeration import canonical_form

# Paths counted per pair when choosing the most constrained pair
_COUNT_CAP = 16


@dataclass(frozen=True)
class SearchBudget:
    max_nodes: int = DEFAULT_BUDGET
    max_paths_per_pair: int = DEFAULT_MAX_PATHS_PER_PAIR
    time_limit: float = DEFAULT_TIME_LIMIT

    def __post_init__(self):
        for name in ("max_nodes", "max_paths_per_pair", "time_limit"):
            value = getattr(self, name)
            if value <= 0:
                raise InvalidParameterError(name, value, "a positive number")


@dataclass(frozen=True)
class SearchFlags:
    strong: bool = True
    totally_odd: bool = True


@dataclass(frozen=True)
class SearchResult:
    outcome: SearchOutcome
    certificate: Optional[ImmersionCertificate] = None
    nodes: int = 0
    elapsed: float = 0.0


class _OutOfBudget(Exception):
    pass


class _Tracker:
    def __init__(self, budget: SearchBudget):
        self.budget = budget
        self.nodes = 0
        self.truncated = False
        self.deadline = time.monotonic() + budget.time_limit

    def tick(self):
        self.nodes += 1
        if self.nodes > self.budget.max_nodes:
            raise _OutOfBudget(f"node budget {self.budget.max_nodes}")
        if self.nodes % 1024 == 0 and time.monotonic() > self.deadline:
            raise _OutOfBudget(f"time limit {self.budget.time_limit}s")


def _edge(a: int, b: int) -> tuple[int, int]:
    return (a, b) if a < b else (b, a)


def iter_paths(
    graph: Multigraph,
    source: int,
    target: int,
    used: set[tuple[int, int]],
    forbidden_interior: frozenset[int] = frozenset(),
    odd_only: bool = False,
    tracker: Optional[_Tracker] = None,
    max_length: Optional[int] = None,
) -> Iterator[list[int]]:
    """Simple source-target paths in DFS order, neighbours ascending.

    Paths avoid the edges in ``used`` and never pass through a vertex of
    ``forbidden_interior``. ``used`` is read live, so callers may change it
    while the generator is suspended as long as they restore it.
    """
    if source == target:
        return
    path = [source]
    on_path = {source}

    def extend(v: int) -> Iterator[list[int]]:
        if tracker is not None:
            tracker.tick()
        for u in graph.neighbors(v):
            if u in on_path or _edge(v, u) in used:
                continue
            if u == target:
                if not odd_only or len(path) % 2 == 1:
                    yield path + [target]
                continue
            if u in forbidden_interior:
                continue
            if max_length is not None and len(path) >= max_length:
                continue
            path.append(u)
            on_path.add(u)
            yield from extend(u)
            path.pop()
            on_path.discard(u)

    yield from extend(source)


def shortest_odd_path(
    graph: Multigraph,
    source: int,
    target: int,
    used: set[tuple[int, int]],
    forbidden_interior: frozenset[int] = frozenset(),
    budget: int = DEFAULT_BUDGET,
) -> Optional[list[int]]:
    """Shortest odd simple path under the same restrictions, by iterative deepening."""
    tracker = _Tracker(SearchBudget(max_nodes=budget))
    try:
        for length in range(1, graph.vertex_count, 2):
            found = next(
                iter_paths(
                    graph, source, target, used, forbidden_interior, True, tracker, length
                ),
                None,
            )
            if found is not None:
                return found
    except _OutOfBudget:
        logger.warning(f"⚠️ Odd path search {source}->{target} ran out of budget")
    return None


def _route(
    graph: Multigraph,
    terminals: Sequence[int],
    flags: SearchFlags,
    tracker: _Tracker,
) -> Optional[dict[tuple[int, int], list[int]]]:
    pairs = list(combinations(terminals, 2))
    forbidden = frozenset(terminals) if flags.strong else frozenset()
    used: set[tuple[int, int]] = set()
    chosen: dict[tuple[int, int], list[int]] = {}

    def paths_for(pair: tuple[int, int]) -> Iterator[list[int]]:
        return iter_paths(graph, pair[0], pair[1], used, forbidden, flags.totally_odd, tracker)

    def solve() -> bool:
        tracker.tick()
        remaining = [pair for pair in pairs if pair not in chosen]
        if not remaining:
            return True
        counts = []
        for pair in remaining:
            available = sum(1 for _ in islice(paths_for(pair), _COUNT_CAP))
            if available == 0:
                return False
            counts.append((available, pair))
        _, pair = min(counts)
        for enumerated, candidate in enumerate(paths_for(pair), start=1):
            if enumerated > tracker.budget.max_paths_per_pair:
                tracker.truncated = True
                break
            edges = {_edge(a, b) for a, b in zip(candidate, candidate[1:])}
            used.update(edges)
            chosen[pair] = candidate
            if solve():
                return True
            used.difference_update(edges)
            del chosen[pair]
        return False

    return {pair: chosen[pair] for pair in pairs} if solve() else None


def _certificate(
    graph: Multigraph,
    terminals: Sequence[int],
    routed: dict[tuple[int, int], list[int]],
    flags: SearchFlags,
) -> ImmersionCertificate:
    t = len(terminals)
    draft = ImmersionCertificate(
        host=HostGraph.from_graph(graph),
        t=t,
        terminals=list(terminals),
        paths=[PairPath(pair=pair, vertices=path) for pair, path in routed.items()],
        properties=CertificateProperties(strong=flags.strong, totally_odd=flags.totally_odd),
        provenance=Provenance(case="oracle"),
    )
    report = verify(graph, draft, full_flags(t))
    required = ["terminals", "paths", "edge_disjoint", "clique_order"]
    required += ["strong"] if flags.strong else []
    required += ["totally_odd"] if flags.totally_odd else []
    failed = [name for name in required if not report.check(name).passed]
    if failed:
        raise InvariantPanicError("oracle", f"found certificate fails {failed}")
    return draft.model_copy(
        update={
            "properties": CertificateProperties(
                strong=report.check("strong").passed,
                totally_odd=report.check("totally_odd").passed,
            )
        }
    )


def find_immersion(
    graph: Multigraph,
    t: int,
    flags: SearchFlags = SearchFlags(),
    budget: SearchBudget = SearchBudget(),
    terminals: Optional[Sequence[int]] = None,
) -> SearchResult:
    """Branch over terminal sets, then over one path per pair, fewest options first."""
    if not graph.is_simple:
        raise UnsupportedHostError("the oracle searches simple graphs")
    if t < 0:
        raise InvalidParameterError("t", t, "a non-negative integer")
    started = time.monotonic()
    tracker = _Tracker(budget)

    if terminals is not None:
        if len(terminals) != t or len(set(terminals)) != t:
            raise InvalidParameterError("terminals", list(terminals), f"{t} distinct vertices")
        subsets: Iterable[tuple[int, ...]] = [tuple(terminals)]
    else:
        # a terminal of K_t sends t-1 edge-disjoint paths away
        eligible = [v for v in range(graph.vertex_count) if graph.degree(v) >= t - 1]
        subsets = combinations(eligible, t)

    try:
        for subset in subsets:
            routed = _route(graph, subset, flags, tracker)
            if routed is not None:
                certificate = _certificate(graph, subset, routed, flags)
                logger.debug(f"Oracle found K_{t} at terminals {list(subset)}")
                return SearchResult(
                    SearchOutcome.FOUND,
                    certificate,
                    tracker.nodes,
                    time.monotonic() - started,
                )
    except _OutOfBudget as reason:
        logger.warning(f"⚠️ Oracle stopped by {reason} after {tracker.nodes} nodes (t={t})")
        return SearchResult(
            SearchOutcome.BUDGET_OUT, None, tracker.nodes, time.monotonic() - started
        )

    outcome = SearchOutcome.BUDGET_OUT if tracker.truncated else SearchOutcome.EXHAUSTED
    return SearchResult(outcome, None, tracker.nodes, time.monotonic() - started)


def scan_graph(
    canonical: str, graph: Multigraph, flags: SearchFlags, budget: SearchBudget
) -> LedgerEntry:
    """One ledger entry: exact χ, then a search for K_χ."""
    started = time.monotonic()
    try:
        chi, _ = chromatic_number(graph, budget.max_nodes)
    except BudgetExceededError:
        return LedgerEntry(
            canonical=canonical,
            n=graph.vertex_count,
            edges=graph.edge_count,
            outcome=SearchOutcome.BUDGET_OUT,
            elapsed=time.monotonic() - started,
            note="chromatic number out of budget",
        )
    result = find_immersion(graph, chi, flags, budget)
    return LedgerEntry(
        canonical=canonical,
        n=graph.vertex_count,
        edges=graph.edge_count,
        chi=chi,
        outcome=result.outcome,
        elapsed=time.monotonic() - started,
        note=f"{result.nodes} nodes",
    )


def _record(entry: LedgerEntry):
    event_publisher.publish_event(
        "scan.entry_recorded",
        {"canonical": entry.canonical, "chi": entry.chi, "outcome": entry.outcome.value},
    )
    if entry.outcome == SearchOutcome.EXHAUSTED:
        event_publisher.publish_event(
            "scan.counterexample_candidate",
            {"canonical": entry.canonical, "chi": entry.chi, "n": entry.n},
        )


def scan_conjecture(
    graphs: Iterable[Multigraph],
    flags: SearchFlags = SearchFlags(),
    budget: SearchBudget = SearchBudget(),
    workers: int = 1,
    progress: bool = False,
) -> ScanLedger:
    """Search every graph for K_χ; halt at the first exhaustive negative.

    Graphs are deduplicated by canonical form and processed in canonical
    order, and the ledger is sorted the same way. Parallel results are
    collected in submission order, so every worker count halts at the same
    graph and produces the same ledger.
    """
    if workers < 1:
        raise InvalidParameterError("workers", workers, "a positive integer")
    queue: dict[str, Multigraph] = {}
    for graph in graphs:
        if not graph.is_simple:
            raise UnsupportedHostError("the scanner takes simple graphs")
        queue.setdefault(canonical_form(graph), graph)
    ordered = sorted(queue.items())
    logger.info(f"🌱 Scanning {len(ordered)} graphs with {workers} worker(s)")

    entries: list[LedgerEntry] = []
    halted = False
    with tqdm(total=len(ordered), desc="scan", unit="graph", disable=not progress) as bar:
        if workers == 1:
            for canonical, graph in ordered:
                entry = scan_graph(canonical, graph, flags, budget)
                bar.update()
                entries.append(entry)
                _record(entry)
                if entry.outcome == SearchOutcome.EXHAUSTED:
                    halted = True
                    break
        else:
            with ProcessPoolExecutor(max_workers=workers) as pool:
                futures = [
                    pool.submit(scan_graph, canonical, graph, flags, budget)
                    for canonical, graph in ordered
                ]
                for future in futures:
                    entry = future.result()
                    bar.update()
                    entries.append(entry)
                    _record(entry)
                    if entry.outcome == SearchOutcome.EXHAUSTED:
                        halted = True
                        for pending in futures:
                            pending.cancel()
                        break

    entries.sort(key=lambda e: e.canonical)
    ledger = ScanLedger(entries=entries, halted=halted)
    logger.info(
        f"Scan finished: {len(entries)} graphs, "
        f"{len(ledger.counterexample_candidates)} counterexample candidate(s)"
    )
    return ledger
