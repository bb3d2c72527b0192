import click

from app.commands import certificates, graphs, search
from app.commands.common import validated
from app.config import DEFAULT_BUDGET, DEFAULT_MAX_PATHS_PER_PAIR, DEFAULT_TIME_LIMIT
from app.models.invocation_schemas import InvocationConfig


@click.group()
@click.option(
    "--format",
    "output_format",
    type=click.Choice(["text", "json"]),
    default="text",
    show_default=True,
    help="Encoding of everything except certificates, which are always JSON",
)
@click.option("--budget", type=int, default=DEFAULT_BUDGET, show_default=True)
@click.option("--time-limit", type=float, default=DEFAULT_TIME_LIMIT, show_default=True)
@click.option(
    "--max-paths-per-pair", type=int, default=DEFAULT_MAX_PATHS_PER_PAIR, show_default=True
)
@click.option("--progress/--no-progress", default=False)
@click.pass_context
def cli(ctx: click.Context, **options):
    """Construct, lift and verify totally odd strong clique immersions in line graphs.

    Exit status: 0 success, 1 failed check or negative answer, 2 usage error,
    3 budget exhausted.
    """
    ctx.obj = validated(InvocationConfig, **options)


cli.add_command(graphs.linegraph)
cli.add_command(graphs.chi_index)
cli.add_command(graphs.chi)
cli.add_command(graphs.critical)
cli.add_command(graphs.thomassen)
cli.add_command(graphs.flower_command)
cli.add_command(graphs.chi_bound)
cli.add_command(certificates.construct)
cli.add_command(certificates.blowup)
cli.add_command(certificates.verify_command)
cli.add_command(search.search)
cli.add_command(search.scan)


def run(argv: list[str] | None = None) -> int:
    """Invoke the CLI and return its exit status instead of exiting."""
    try:
        result = cli.main(args=argv, prog_name="immersion", standalone_mode=False)
    except click.ClickException as e:
        e.show()
        return e.exit_code
    except click.Abort:
        return 1
    return result if isinstance(result, int) else 0


if __name__ == "__main__":
    raise SystemExit(run())
