"""Command-line interface for regmatch."""

import logging
import sys
from pathlib import Path
from typing import Dict, Optional, TextIO

import click
import yaml

from . import __version__
from .config.loader import ConfigLoader
from .constructor.engine import construct, verify
from .decomposition.gallai_edmonds import contract, decompose, good_vertices
from .errors import InputError, RegMatchError
from .generators.barrier import gen_barrier_regular
from .generators.fixtures import fixture, list_fixtures
from .generators.random_regular import gen_random_regular
from .models.graph import Multigraph, degree_profile
from .models.report import (
    CliConfig,
    Command,
    ComponentChoice,
    DecompositionReport,
    GraphFormat,
    RunConfig,
)
from .oracle.brute_force import exists_good_maximum_matching
from .oracle.scan import exhaustive_regular_scan, random_scan
from .parsers import (
    GraphLoader,
    parse_matching,
    serialize_graph6,
    serialize_matching,
    serialize_mel,
)
from .reporters import reporter_for
from .reporters.json_reporter import dumps

logger = logging.getLogger(__name__)


def configure_logging(level: str, stream: Optional[TextIO] = None) -> None:
    """Route library logs through rich on stderr."""
    from rich.console import Console
    from rich.logging import RichHandler

    handler = RichHandler(
        console=Console(file=stream or sys.stderr),
        show_time=False,
        show_path=False,
    )
    logging.basicConfig(level=level.upper(), handlers=[handler], format="%(message)s", force=True)


def _decomposition_report(graph: Multigraph) -> DecompositionReport:
    ge = decompose(graph)
    k = degree_profile(graph).regular_k
    edge_counts = dict(enumerate(ge.edge_counts))
    classes: Dict[int, str] = {}
    if k and ge.deficiency >= 2 and ge.component_count:
        host = contract(graph, ge, k)
        for index in range(ge.component_count):
            q = host.q(index)
            classes[index] = "W" if q in host.W else "U" if q in host.U else "tail"
    components = [
        ComponentChoice(
            index=index,
            vertices=component,
            edges_to_a=edge_counts[index],
            good_vertices=good_vertices(graph, component),
            degree_class=classes.get(index, "tail"),
        )
        for index, component in enumerate(ge.components)
    ]
    return DecompositionReport(decomposition=ge, k=k, components=components)


def run(config: CliConfig, stdin: TextIO, stdout: TextIO, stderr: TextIO) -> int:
    """Execute one command.

    Data goes to ``stdout``; diagnostics go to ``stderr``.

    Returns:
        0 on success with the property, 2 on a theory violation, an unsupported
        regime or a failed property, 1 on input errors.
    """
    reporter = reporter_for(config.json_output, file=stdout)
    loader = GraphLoader()
    try:
        if config.command == Command.GEN:
            if config.fixture:
                graph = fixture(config.fixture)
            elif config.hubs is not None:
                if config.k is None:
                    raise InputError("gen --hubs needs --k")
                graph = gen_barrier_regular(
                    config.k,
                    config.hubs,
                    simple=config.simple,
                    seed=config.seed,
                    retry_budget=config.run.generator_retry_budget,
                )
            else:
                if config.n is None or config.k is None:
                    raise InputError("gen needs --n and --k, or --fixture")
                graph = gen_random_regular(
                    config.n,
                    config.k,
                    simple=config.simple,
                    seed=config.seed,
                    retry_budget=config.run.generator_retry_budget,
                )
            if config.out_format == GraphFormat.GRAPH6:
                stdout.write(serialize_graph6(graph) + "\n")
            else:
                stdout.write(serialize_mel(graph))
            return 0

        if config.command == Command.SCAN:
            if config.k is None:
                raise InputError("scan needs --k")
            if config.hubs is not None and not config.random_scan:
                raise InputError("--hubs only applies to random scans")
            if config.n_max is None and config.hubs is None:
                raise InputError("scan needs --n-max unless --random --hubs is given")
            if config.random_scan:
                records, summary = random_scan(
                    config.trials or config.run.scan_trials,
                    config.n_max,
                    config.k,
                    simple=config.simple,
                    seed=config.seed,
                    config=config.run,
                    hubs=config.hubs,
                )
            else:
                records, summary = exhaustive_regular_scan(
                    config.n_max, config.k, simple=config.simple, config=config.run
                )
            reporter.generate_scan_report(records, summary)
            return 2 if summary.discrepancy_count else 0

        if config.input is None:
            raise InputError(f"{config.command.value} needs an input graph")
        graph = loader.load(config.input, config.format, stdin)

        if config.command == Command.CONSTRUCT:
            report = construct(graph, config.run)
            reporter.generate_report(report)
            if config.matching_out:
                Path(config.matching_out).write_text(serialize_matching(report.matching))
            return 0 if report.property_holds else 2

        if config.command == Command.VERIFY:
            if config.matching is None:
                raise InputError("verify needs a matching file")
            path = Path(config.matching)
            if not path.exists():
                raise InputError(f"Matching file not found: {path}")
            result = verify(graph, parse_matching(path.read_text(), graph))
            reporter.generate_report(result)
            return 0 if result.property_holds else 2

        if config.command == Command.DECOMPOSE:
            reporter.generate_report(_decomposition_report(graph))
            return 0

        verdict = exists_good_maximum_matching(
            graph, edge_budget=config.run.enumeration_edge_budget
        )
        reporter.generate_report(verdict)
        return 0 if verdict.good_exists else 2

    except RegMatchError as exc:
        logger.debug("command failed", exc_info=True)
        stderr.write(f"error: {exc.message}\n")
        if config.json_output:
            stderr.write(dumps(reporter.error_payload(exc)) + "\n")
        return exc.exit_code


@click.group()
@click.version_option(version=__version__)
@click.option(
    "--config",
    "config_path",
    type=click.Path(exists=True, path_type=Path),
    help="Path to a YAML run configuration",
)
@click.option("-v", "--verbose", is_flag=True, help="Debug logging on stderr")
@click.pass_context
def cli(ctx: click.Context, config_path: Optional[Path], verbose: bool) -> None:
    """Good maximum matchings of regular multigraphs."""
    loader = ConfigLoader()
    try:
        run_config = loader.load(config_path) if config_path else loader.load_default()
    except (FileNotFoundError, ValueError) as exc:
        click.echo(f"error: {exc}", err=True)
        ctx.exit(1)
    configure_logging("DEBUG" if verbose else run_config.log_level)
    ctx.obj = run_config


def _format(value: Optional[str]) -> Optional[GraphFormat]:
    return GraphFormat(value) if value else None


def _dispatch(ctx: click.Context, **fields) -> None:
    config = CliConfig(run=ctx.obj or RunConfig(), **fields)
    stdin = click.get_text_stream("stdin")
    stdout = click.get_text_stream("stdout")
    stderr = click.get_text_stream("stderr")
    ctx.exit(run(config, stdin, stdout, stderr))


format_option = click.option(
    "-f",
    "--format",
    "fmt",
    type=click.Choice([f.value for f in GraphFormat]),
    help="Input format (default: by extension, then by content)",
)
json_option = click.option("--json", "json_output", is_flag=True, help="Emit JSON")


@cli.command("construct")
@click.argument("input_path", metavar="INPUT")
@format_option
@json_option
@click.option("--matching-out", type=click.Path(path_type=str), help="Also write M* as text")
@click.pass_context
def construct_command(ctx, input_path, fmt, json_output, matching_out):
    """Build a good maximum matching of a regular graph."""
    _dispatch(
        ctx,
        command=Command.CONSTRUCT,
        input=input_path,
        format=_format(fmt),
        json_output=json_output,
        matching_out=matching_out,
    )


@cli.command("verify")
@click.argument("input_path", metavar="INPUT")
@click.argument("matching_path", metavar="MATCHING")
@format_option
@json_option
@click.pass_context
def verify_command(ctx, input_path, matching_path, fmt, json_output):
    """Check that MATCHING is maximum and leaves no shared neighbor."""
    _dispatch(
        ctx,
        command=Command.VERIFY,
        input=input_path,
        matching=matching_path,
        format=_format(fmt),
        json_output=json_output,
    )


@cli.command("decompose")
@click.argument("input_path", metavar="INPUT")
@format_option
@json_option
@click.pass_context
def decompose_command(ctx, input_path, fmt, json_output):
    """Print the Gallai-Edmonds partition."""
    _dispatch(
        ctx,
        command=Command.DECOMPOSE,
        input=input_path,
        format=_format(fmt),
        json_output=json_output,
    )


@cli.command("oracle")
@click.argument("input_path", metavar="INPUT")
@format_option
@json_option
@click.pass_context
def oracle_command(ctx, input_path, fmt, json_output):
    """Decide by enumeration whether a good maximum matching exists."""
    _dispatch(
        ctx,
        command=Command.ORACLE,
        input=input_path,
        format=_format(fmt),
        json_output=json_output,
    )


@cli.command("scan")
@click.option("--k", "k", type=int, required=True, help="Degree")
@click.option("--n-max", type=int, help="Largest order")
@click.option("--multi", is_flag=True, help="Allow parallel edges")
@click.option("--random", "random_mode", is_flag=True, help="Random instead of exhaustive")
@click.option("--hubs", type=int, help="Random barrier graphs with this many hubs")
@click.option("--trials", type=int, help="Random graphs to draw (default from config)")
@click.option("--seed", type=int, help="Random scan seed (default from config)")
@json_option
@click.pass_context
def scan_command(ctx, k, n_max, multi, random_mode, hubs, trials, seed, json_output):
    """Cross-check construction and oracle over a family of regular graphs."""
    run_config = ctx.obj or RunConfig()
    _dispatch(
        ctx,
        command=Command.SCAN,
        k=k,
        n_max=n_max,
        simple=not multi,
        random_scan=random_mode,
        hubs=hubs,
        trials=trials,
        seed=run_config.scan_seed if seed is None else seed,
        json_output=json_output,
    )


@cli.command("gen")
@click.option("--n", "n", type=int, help="Vertex count")
@click.option("--k", "k", type=int, help="Degree")
@click.option("--multi", is_flag=True, help="Allow parallel edges")
@click.option("--hubs", type=int, help="Barrier graph with this many hubs (ignores --n)")
@click.option("--seed", type=int, default=0, show_default=True)
@click.option("--fixture", "fixture_name", type=click.Choice(list_fixtures()), help="Named graph")
@click.option(
    "--out-format",
    type=click.Choice([f.value for f in GraphFormat]),
    default=GraphFormat.MEL.value,
    show_default=True,
)
@click.pass_context
def gen_command(ctx, n, k, multi, hubs, seed, fixture_name, out_format):
    """Write a random regular graph, a barrier graph or a named fixture."""
    _dispatch(
        ctx,
        command=Command.GEN,
        n=n,
        k=k,
        hubs=hubs,
        simple=not multi,
        seed=seed,
        fixture=fixture_name,
        out_format=GraphFormat(out_format),
    )


@cli.command("init")
@click.argument("output_path", type=click.Path(path_type=Path))
@click.option(
    "--example",
    type=click.Choice(["basic", "full"]),
    default="basic",
    show_default=True,
)
def init_command(output_path: Path, example: str) -> None:
    """Write a starter configuration file."""
    loader = ConfigLoader()
    with open(output_path, "w") as f:
        yaml.dump(loader.generate_example(example), f, default_flow_style=False, indent=2)
    click.echo(f"Wrote {example} configuration to {output_path}", err=True)


def main() -> None:
    cli()


if __name__ == "__main__":
    main()
