"""Subcommands that take a graph and print a derived graph or invariant."""

from pathlib import Path
from typing import Optional

import click

from app.commands.common import (
    GRAPH_FILE,
    OUTPUT_FILE,
    certificate_text,
    emit,
    handle_errors,
    json_text,
)
from app.config import logger
from app.models.certificate_schemas import HostGraph
from app.models.invocation_schemas import InvocationConfig
from app.services.blowup import chi_bound_check
from app.services.coloring import (
    chromatic_index,
    chromatic_number,
    critical_edge_ids,
    format_coloring,
    vizing_adjacency_audit,
)
from app.services.operators import line_graph
from app.services.paths import thomassen_system
from app.utils.generators import flower, flower_certificate
from app.utils.graph_io import read_graph, serialize_graph


@click.command("linegraph")
@click.argument("graph_file", type=GRAPH_FILE)
@click.option("-o", "--output", type=OUTPUT_FILE, help="Write the line graph here")
@click.pass_obj
@handle_errors
def linegraph(config: InvocationConfig, graph_file: Path, output: Optional[Path]):
    """Line graph of GRAPH_FILE plus the edge-to-vertex map."""
    lmap = line_graph(read_graph(graph_file))
    if config.output_format == "json":
        text = json_text(
            {
                "line_graph": HostGraph.from_graph(lmap.line_graph).model_dump(mode="json"),
                "vertex_to_edge": [
                    [lmap.edge_of(v).u, lmap.edge_of(v).v] for v in range(lmap.line_graph.vertex_count)
                ],
            }
        )
    else:
        comments = [
            f"map {v + 1} {lmap.edge_of(v).u + 1} {lmap.edge_of(v).v + 1}"
            for v in range(lmap.line_graph.vertex_count)
        ]
        text = serialize_graph(lmap.line_graph, comments)
    emit(text, output)


@click.command("chi-index")
@click.argument("graph_file", type=GRAPH_FILE)
@click.pass_obj
@handle_errors
def chi_index(config: InvocationConfig, graph_file: Path):
    """Exact chromatic index with a witness edge coloring."""
    value, coloring = chromatic_index(read_graph(graph_file), config.budget)
    if config.output_format == "json":
        emit(json_text({"chromatic_index": value, "colors": list(coloring.colors)}))
    else:
        emit(f"chromatic_index {value}\n" + format_coloring(coloring))


@click.command("chi")
@click.argument("graph_file", type=GRAPH_FILE)
@click.pass_obj
@handle_errors
def chi(config: InvocationConfig, graph_file: Path):
    """Exact chromatic number with a witness vertex coloring."""
    value, coloring = chromatic_number(read_graph(graph_file), config.budget)
    if config.output_format == "json":
        emit(json_text({"chromatic_number": value, "colors": list(coloring.colors)}))
    else:
        emit(f"chromatic_number {value}\n" + format_coloring(coloring))


@click.command("critical")
@click.argument("graph_file", type=GRAPH_FILE)
@click.option("-o", "--output", type=OUTPUT_FILE)
@click.pass_obj
@handle_errors
def critical(config: InvocationConfig, graph_file: Path, output: Optional[Path]):
    """Edge-critical subgraph with the same chromatic index."""
    host = read_graph(graph_file)
    kept = critical_edge_ids(host, config.budget)
    subgraph = host.edge_subgraph(kept)
    violations = vizing_adjacency_audit(subgraph)
    for violation in violations:
        logger.warning(
            f"⚠️ Vertex {violation.vertex} has {violation.max_degree_neighbors} "
            f"neighbors of maximum degree"
        )
    if config.output_format == "json":
        emit(
            json_text(
                {
                    "graph": HostGraph.from_graph(subgraph).model_dump(mode="json"),
                    "kept_edges": list(kept),
                    "adjacency_violations": [v.vertex for v in violations],
                }
            ),
            output,
        )
    else:
        comments = [f"kept {' '.join(str(e) for e in kept)}"]
        emit(serialize_graph(subgraph, comments), output)


@click.command("thomassen")
@click.argument("graph_file", type=GRAPH_FILE)
@click.option("-d", "degree", type=int, help="Number of paths; defaults to the maximum degree")
@click.pass_obj
@handle_errors
def thomassen(config: InvocationConfig, graph_file: Path, degree: Optional[int]):
    """Vertices x, y joined by d edge-disjoint paths in a class 2 graph of maximum degree d."""
    host = read_graph(graph_file)
    system = thomassen_system(host, degree or host.max_degree, config.budget)
    if config.output_format == "json":
        emit(
            json_text(
                {
                    "x": system.x,
                    "y": system.y,
                    "paths": [list(walk.vertices) for walk in system.paths],
                }
            )
        )
    else:
        lines = [f"x {system.x}", f"y {system.y}"]
        lines += [
            f"path {i} " + " ".join(str(v) for v in walk.vertices)
            for i, walk in enumerate(system.paths)
        ]
        emit("\n".join(lines) + "\n")


@click.command("flower")
@click.argument("t", type=int)
@click.option("--padding", type=click.IntRange(min=0), default=0, show_default=True)
@click.option("-o", "--output", type=OUTPUT_FILE, help="Write the graph here")
@click.option("--certificate", type=OUTPUT_FILE, help="Also write its immersion certificate")
@handle_errors
def flower_command(t: int, padding: int, output: Optional[Path], certificate: Optional[Path]):
    """Planar graph with a totally odd strong K_T immersion."""
    f = flower(t, padding)
    terminals = " ".join(str(v + 1) for v in f.terminals)
    emit(serialize_graph(f.graph, [f"flower t={t} padding={padding}", f"terminals {terminals}"]), output)
    if certificate is not None:
        emit(certificate_text(flower_certificate(f)), certificate)


@click.command("chi-bound")
@click.argument("graph_file", type=GRAPH_FILE)
@click.option("-m", "multiplicity", type=int, required=True, help="Edge multiplicity m")
@click.pass_obj
@handle_errors
def chi_bound(config: InvocationConfig, graph_file: Path, multiplicity: int):
    """Compare χ(L(mH)) against m·χ(L(H))."""
    report = chi_bound_check(read_graph(graph_file), multiplicity, config.budget)
    if config.output_format == "json":
        emit(report.model_dump_json(indent=2) + "\n")
    else:
        emit(report.to_text())
    if not report.passed:
        raise click.exceptions.Exit(1)
