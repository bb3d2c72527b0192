"""Brute-force search and conjecture scanning."""

import random
from pathlib import Path
from typing import Iterator, Optional

import click
import networkx as nx

from app.commands.common import (
    GRAPH_FILE,
    OUTPUT_FILE,
    BudgetExhausted,
    certificate_text,
    emit,
    handle_errors,
    json_text,
    validated,
)
from app.models.graph import Multigraph
from app.models.invocation_schemas import InvocationConfig, ScanSource
from app.models.ledger_schemas import SearchOutcome
from app.services.operators import line_graph
from app.services.oracle import SearchBudget, SearchFlags, find_immersion, scan_conjecture
from app.utils.enumeration import generate_graphs
from app.utils.graph_io import read_corpus, read_graph


def _budget(config: InvocationConfig) -> SearchBudget:
    return SearchBudget(
        max_nodes=config.budget,
        max_paths_per_pair=config.max_paths_per_pair,
        time_limit=config.time_limit,
    )


@click.command("search")
@click.argument("graph_file", type=GRAPH_FILE)
@click.option("-t", "order", type=click.IntRange(min=0), required=True, help="Clique order")
@click.option("--strong/--no-strong", default=True, show_default=True)
@click.option("--odd/--no-odd", "totally_odd", default=True, show_default=True)
@click.option("--line-graph", "in_line_graph", is_flag=True, help="Search the line graph of GRAPH_FILE")
@click.option("-o", "--output", type=OUTPUT_FILE, help="Write a found certificate here")
@click.pass_context
@handle_errors
def search(
    ctx: click.Context,
    graph_file: Path,
    order: int,
    strong: bool,
    totally_odd: bool,
    in_line_graph: bool,
    output: Optional[Path],
):
    """Exhaustive search for a K_t immersion; exit 1 when none exists."""
    config: InvocationConfig = ctx.obj
    graph = read_graph(graph_file)
    if in_line_graph:
        graph = _line_graph(graph)
    result = find_immersion(graph, order, SearchFlags(strong, totally_odd), _budget(config))
    if result.outcome == SearchOutcome.FOUND:
        emit(certificate_text(result.certificate), output)
        return
    summary = {"outcome": result.outcome.value, "t": order, "nodes": result.nodes}
    if config.output_format == "json":
        emit(json_text(summary))
    else:
        emit(f"outcome {result.outcome.value} t={order} nodes={result.nodes}\n")
    if result.outcome == SearchOutcome.BUDGET_OUT:
        raise BudgetExhausted(f"search for K_{order} ran out of budget after {result.nodes} nodes")
    ctx.exit(1)


def _line_graph(graph: Multigraph) -> Multigraph:
    return line_graph(graph).line_graph


def _random_graphs(source: ScanSource) -> Iterator[Multigraph]:
    rng = random.Random(source.seed)
    for _ in range(source.random):
        yield Multigraph.from_networkx(
            nx.gnp_random_graph(source.vertices, source.edge_probability, seed=rng.randrange(2**32))
        )


@click.command("scan")
@click.option("--corpus", type=GRAPH_FILE, help="graph6 corpus, one graph per line")
@click.option("--generate", type=int, help="Enumerate all connected graphs up to this order")
@click.option("--random", "random_count", type=int, help="Sample this many G(n, p) graphs")
@click.option("--vertices", type=int, default=8, show_default=True, help="n for --random")
@click.option("--edge-probability", type=float, default=0.5, show_default=True, help="p for --random")
@click.option("--seed", type=int, help="Seed for --random")
@click.option("--line-graphs", is_flag=True, help="Scan the line graphs of the stream")
@click.option("--strong/--no-strong", default=True, show_default=True)
@click.option("--odd/--no-odd", "totally_odd", default=True, show_default=True)
@click.option("--workers", type=click.IntRange(min=1), default=1, show_default=True)
@click.pass_context
@handle_errors
def scan(
    ctx: click.Context,
    corpus: Optional[Path],
    generate: Optional[int],
    random_count: Optional[int],
    vertices: int,
    edge_probability: float,
    seed: Optional[int],
    line_graphs: bool,
    strong: bool,
    totally_odd: bool,
    workers: int,
):
    """Check χ-sized immersions over a stream of graphs; halt at the first counterexample."""
    config: InvocationConfig = ctx.obj
    source = validated(
        ScanSource,
        corpus=corpus,
        generate=generate,
        random=random_count,
        vertices=vertices,
        edge_probability=edge_probability,
        seed=seed,
    )
    if source.corpus is not None:
        graphs = read_corpus(source.corpus)
    elif source.generate is not None:
        graphs = generate_graphs(source.generate)
    else:
        graphs = _random_graphs(source)
    if line_graphs:
        graphs = (_line_graph(g) for g in graphs)

    ledger = scan_conjecture(
        graphs,
        SearchFlags(strong, totally_odd),
        _budget(config),
        workers=workers,
        progress=config.progress,
    )
    if config.output_format == "json":
        emit(ledger.model_dump_json(indent=2) + "\n")
    else:
        emit(ledger.to_text())
    if ledger.counterexample_candidates:
        ctx.exit(1)
    if any(entry.outcome == SearchOutcome.BUDGET_OUT for entry in ledger.entries):
        raise BudgetExhausted("some graphs ran out of budget; see the ledger")
