"""Subcommands that produce, lift and check certificates."""

from pathlib import Path
from typing import Optional

import click

from app.commands.common import (
    GRAPH_FILE,
    OUTPUT_FILE,
    certificate_text,
    emit,
    handle_errors,
    load_certificate,
    validated,
)
from app.models.invocation_schemas import InvocationConfig, VerifyTarget
from app.services.blowup import lift_certificate
from app.services.construction import construct_immersion
from app.services.operators import line_graph
from app.services.verify import VerifyFlags, verify
from app.utils.graph_io import read_graph


@click.command("construct")
@click.argument("graph_file", type=GRAPH_FILE)
@click.option("-o", "--output", type=OUTPUT_FILE, help="Write the certificate here")
@click.pass_obj
@handle_errors
def construct(config: InvocationConfig, graph_file: Path, output: Optional[Path]):
    """Totally odd strong K_χ' immersion in the line graph of GRAPH_FILE."""
    certificate = construct_immersion(read_graph(graph_file), config.budget)
    emit(certificate_text(certificate), output)


@click.command("blowup")
@click.argument("certificate_file", type=GRAPH_FILE)
@click.argument("graph_file", type=GRAPH_FILE)
@click.option("-m", "multiplicity", type=int, required=True, help="Edge multiplicity m")
@click.option("-o", "--output", type=OUTPUT_FILE)
@handle_errors
def blowup(certificate_file: Path, graph_file: Path, multiplicity: int, output: Optional[Path]):
    """Lift a certificate for L(H) to one for L(mH)."""
    certificate = load_certificate(certificate_file)
    lifted = lift_certificate(certificate, read_graph(graph_file), multiplicity)
    emit(certificate_text(lifted), output)


@click.command("verify")
@click.argument("certificate_file", type=GRAPH_FILE)
@click.option("--graph", "graph_file", type=GRAPH_FILE, help="Host graph to check against")
@click.option("--line-graph-of", type=GRAPH_FILE, help="Check against the line graph of this graph")
@click.option("--strong/--no-strong", default=True, show_default=True)
@click.option("--odd/--no-odd", "totally_odd", default=True, show_default=True)
@click.option("--clique/--no-clique", default=True, show_default=True, help="Require all C(t,2) pairs")
@click.pass_context
@handle_errors
def verify_command(
    ctx: click.Context,
    certificate_file: Path,
    graph_file: Optional[Path],
    line_graph_of: Optional[Path],
    strong: bool,
    totally_odd: bool,
    clique: bool,
):
    """Replay a certificate; exit status 0 iff every requested check passes.

    Without --graph or --line-graph-of the host stored in the certificate is used.
    """
    config: InvocationConfig = ctx.obj
    target = validated(VerifyTarget, graph=graph_file, line_graph_of=line_graph_of)
    certificate = load_certificate(certificate_file)
    if target.graph is not None:
        graph = read_graph(target.graph)
    elif target.line_graph_of is not None:
        graph = line_graph(read_graph(target.line_graph_of)).line_graph
    else:
        graph = certificate.host.to_graph()
    flags = VerifyFlags(
        immersion=True,
        strong=strong,
        totally_odd=totally_odd,
        clique_order=certificate.t if clique else None,
    )
    report = verify(graph, certificate, flags)
    if config.output_format == "json":
        emit(report.model_dump_json(indent=2) + "\n")
    else:
        emit(report.to_text())
    if not report.overall:
        ctx.exit(1)
