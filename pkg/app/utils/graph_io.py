"""Text formats for graphs.

Edge-list documents (1-based vertices)::

    c comment
    p mg <n> <edge-lines>
    e <u> <v> <mult>

Corpora hold one graph6 string per line; ``#`` starts a comment. A corpus
file whose first significant line is a ``c`` or ``p`` line is read as a
single edge-list document instead.
"""

from collections import Counter
from pathlib import Path
from typing import Iterator

import networkx as nx

from app.config import logger
from app.exceptions import (
    GraphFormatError,
    LoopEdgeError,
    MalformedHeaderError,
    MalformedLineError,
    VertexOutOfRangeError,
)
from app.models.graph import Multigraph


def parse_graph(text: str) -> Multigraph:
    header: tuple[int, int, int] | None = None  # (n, announced lines, header line)
    pairs: list[tuple[int, int]] = []
    edge_lines = 0
    for line_number, raw in enumerate(text.splitlines(), start=1):
        tokens = raw.split()
        if not tokens or tokens[0] == "c":
            continue
        tag = tokens[0]
        if tag == "p":
            if header is not None:
                raise MalformedHeaderError(line_number, "duplicate 'p' header")
            if len(tokens) != 4 or tokens[1] != "mg":
                raise MalformedHeaderError(line_number, f"expected 'p mg <n> <m>', got {raw!r}")
            n, announced = _ints(tokens[2:], line_number, MalformedHeaderError)
            if n < 0 or announced < 0:
                raise MalformedHeaderError(line_number, "negative count in header")
            header = (n, announced, line_number)
        elif tag == "e":
            if len(tokens) != 4:
                raise MalformedLineError(line_number, f"expected 'e <u> <v> <mult>', got {raw!r}")
            u, v, mult = _ints(tokens[1:], line_number, MalformedLineError)
            if u == v:
                raise LoopEdgeError(line_number, f"loop at vertex {u}")
            if header is None:
                raise MalformedHeaderError(line_number, "edge line before 'p mg' header")
            n = header[0]
            for vertex in (u, v):
                if not 1 <= vertex <= n:
                    raise VertexOutOfRangeError(line_number, f"vertex {vertex} outside 1..{n}")
            if mult < 1:
                raise MalformedLineError(line_number, f"multiplicity {mult} < 1")
            pairs.extend([(u - 1, v - 1)] * mult)
            edge_lines += 1
        else:
            raise MalformedLineError(line_number, f"unknown line type {tag!r}")
    if header is None:
        raise MalformedHeaderError(0, "missing 'p mg' header")
    n, announced, header_line = header
    if announced != edge_lines:
        raise MalformedHeaderError(
            header_line, f"header announces {announced} edge lines, found {edge_lines}"
        )
    return Multigraph.from_edges(n, pairs)


def serialize_graph(graph: Multigraph, comments: list[str] | None = None) -> str:
    counts = Counter((u + 1, v + 1) for u, v in graph.pairs())
    lines = [f"c {comment}" for comment in comments or []]
    lines.append(f"p mg {graph.vertex_count} {len(counts)}")
    lines.extend(f"e {u} {v} {mult}" for (u, v), mult in sorted(counts.items()))
    return "\n".join(lines) + "\n"


def read_graph(path: Path) -> Multigraph:
    return parse_graph(Path(path).read_text())


def write_graph(path: Path, graph: Multigraph, comments: list[str] | None = None) -> None:
    Path(path).write_text(serialize_graph(graph, comments))


def from_graph6(line: str) -> Multigraph:
    return Multigraph.from_networkx(nx.from_graph6_bytes(line.strip().encode()))


def to_graph6(graph: Multigraph) -> str:
    return nx.to_graph6_bytes(graph.to_simple_networkx(), header=False).decode().strip()


def read_corpus(path: Path) -> Iterator[Multigraph]:
    """Yield the graphs of a corpus file; unparsable lines are skipped with a log."""
    text = Path(path).read_text()
    significant = [line for line in text.splitlines() if line.strip()]
    if significant and significant[0].split()[0] in ("c", "p"):
        yield parse_graph(text)
        return
    for line_number, line in enumerate(text.splitlines(), start=1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        try:
            yield from_graph6(line)
        except (nx.NetworkXError, ValueError) as e:
            logger.warning(f"⚠️ {path}:{line_number}: skipping unparsable graph6 line: {e}")


def _ints(tokens: list[str], line_number: int, error: type[GraphFormatError]) -> list[int]:
    try:
        return [int(token) for token in tokens]
    except ValueError:
        raise error(line_number, f"non-integer field in {' '.join(tokens)!r}") from None
