"""
Command Line Interface
======================
click commands over the verification pipeline.

Exit codes: 0 success, 1 verification mismatch, 2 input error.
"""

import json
from typing import Iterable, Optional

import click

from lorenz_links import __version__
from lorenz_links.cli.enumeration import enumerate_vectors
from lorenz_links.cli.parsing import parse_braid_text, parse_tlink_spec, parse_vector_spec
from lorenz_links.config import settings, validate_config
from lorenz_links.topology.errors import LinkInputError
from lorenz_links.topology.invariants import InvariantReport, full_report
from lorenz_links.topology.lorenz_core import LorenzVector, decompress, format_pairs, format_vector
from lorenz_links.topology.pipeline import (
    InstanceResult,
    build_representations,
    run_battery,
    show_document,
    verify_vector,
)
from lorenz_links.utils.logger import get_logger, setup_logging

logger = get_logger("cli")

EXIT_MISMATCH = 1

format_option = click.option(
    "--format", "output_format", type=click.Choice(["text", "json"]), default="text", show_default=True
)
cap_option = click.option(
    "--max-bracket-crossings",
    type=click.IntRange(min=0),
    default=None,
    help=f"Skip the bracket above this many crossings [default: {settings.MAX_BRACKET_CROSSINGS}]",
)
method_option = click.option(
    "--bracket-method", type=click.Choice(["frontier", "states"]), default=None, help="Bracket algorithm"
)
skip_option = click.option(
    "--skip", multiple=True, type=click.Choice(["jones", "alexander", "kauffman"]), help="Invariants to leave out"
)


def instance_options(fn):
    fn = click.option("--tlink", "tlink_text", default=None, help='T-link parameters, e.g. "(3,4),(5,3)"')(fn)
    fn = click.option("--vector", "vector_text", default=None, help='Lorenz vector, e.g. "3^4,5^3"')(fn)
    return fn


def _read_instance(vector_text: Optional[str], tlink_text: Optional[str]) -> LorenzVector:
    if (vector_text is None) == (tlink_text is None):
        raise click.UsageError("give exactly one of --vector or --tlink")
    try:
        if vector_text is not None:
            return parse_vector_spec(vector_text)
        return decompress(parse_tlink_spec(tlink_text))
    except LinkInputError as e:
        raise click.BadParameter(str(e), param_hint="--vector" if vector_text is not None else "--tlink")


def _echo_json(document) -> None:
    click.echo(json.dumps(document, ensure_ascii=False, indent=2))


def _report_lines(report: InvariantReport) -> Iterable[str]:
    yield f"[{report.source}]"
    yield f"  components: {report.components}"
    yield f"  crossings: {report.crossings} (writhe {report.writhe})"
    if report.euler_characteristic is not None:
        yield f"  euler characteristic: {report.euler_characteristic}"
        yield f"  genus: {report.genus}"
    if report.alexander is not None:
        yield f"  alexander: {report.alexander}"
    if report.f_computed:
        yield f"  kauffman f: {report.kauffman_f}"
    else:
        yield f"  kauffman f: {report.kauffman_status}"
    if report.jones is not None:
        yield f"  jones: {report.jones}"


def _instance_text(result: InstanceResult) -> str:
    lines = [
        f"Lorenz vector: {format_vector(LorenzVector(entries=tuple(result.vector)))}",
        f"T-link: {','.join(f'({p},{q})' for p, q in result.tlink)}",
        f"lorenz braid: {result.braids['lorenz'].strands} strands, {len(result.braids['lorenz'].letters)} letters",
        f"t braid: {result.braids['tlink'].strands} strands, {len(result.braids['tlink'].letters)} letters",
    ]
    for report in result.invariants.values():
        lines.extend(_report_lines(report))
    lines.append("checks:")
    for check in result.checks:
        mark = "✓" if check.passed else "✗"
        lines.append(f"  {mark} {check.name}" + (f": {check.detail}" if check.detail else ""))
    for warning in result.warnings:
        lines.append(f"warning: {warning}")
    lines.append("VERIFIED" if result.verified else f"MISMATCH: {result.mismatch_detail}")
    return "\n".join(lines)


# ============================================
# Commands
# ============================================

@click.group()
@click.version_option(__version__, prog_name="lorenz-links")
@click.option(
    "--log-level",
    type=click.Choice(["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"], case_sensitive=False),
    default=None,
    help=f"Log level for stderr [default: {settings.LOG_LEVEL}]",
)
def cli(log_level: Optional[str]) -> None:
    """Lorenz links, T-links and diagonal grid diagrams, cross-checked by link invariants."""
    try:
        validate_config()
    except ValueError as e:
        raise click.UsageError(str(e))
    setup_logging(log_level.upper() if log_level else None)


@cli.command()
@instance_options
@format_option
@click.option("--svg", "svg_path", type=click.Path(dir_okay=False, writable=True), default=None,
              help="Write the grid diagram as SVG to this file")
def show(vector_text, tlink_text, output_format, svg_path) -> None:
    """Print the vector, T-link parameters, both braid words and the grid."""
    v = _read_instance(vector_text, tlink_text)
    reps = build_representations(v)
    document = show_document(reps, include_svg=svg_path is not None)

    if svg_path:
        with open(svg_path, "w", encoding="utf-8") as handle:
            handle.write(document["svg"])
        logger.info(f"✓ SVG written to {svg_path}")

    if output_format == "json":
        _echo_json(document)
        return

    click.echo(f"Lorenz vector: {format_vector(v)} = {format_vector(v, compressed=False)}")
    click.echo(f"T-link: {format_pairs(reps.tlink)}")
    click.echo(f"shuffle: ({','.join(str(x) for x in reps.shuffle.images)})")
    click.echo(f"lorenz braid: {reps.lorenz}")
    click.echo(f"lorenz strands: {reps.lorenz.strands}")
    click.echo(f"t braid: {reps.tbraid}")
    click.echo(f"t strands: {reps.tbraid.strands}")
    click.echo("grid:")
    click.echo(document["grid"])


@cli.command()
@instance_options
@format_option
@cap_option
@method_option
@skip_option
@click.pass_context
def verify(ctx, vector_text, tlink_text, output_format, max_bracket_crossings, bracket_method, skip) -> None:
    """Verify that the three representations give the same link."""
    v = _read_instance(vector_text, tlink_text)
    result = verify_vector(v, max_crossings=max_bracket_crossings, method=bracket_method, skip=skip)
    if output_format == "json":
        click.echo(result.model_dump_json(indent=2))
    else:
        click.echo(_instance_text(result))
    if not result.verified:
        ctx.exit(EXIT_MISMATCH)


@cli.command()
@click.option("--max-sum", type=click.IntRange(min=1), default=None,
              help=f"Largest entry sum [default: {settings.BATTERY_MAX_SUM}]")
@click.option("--jobs", type=click.IntRange(min=1), default=None,
              help=f"Worker processes [default: {settings.BATTERY_JOBS}]")
@format_option
@cap_option
@method_option
@skip_option
@click.pass_context
def battery(ctx, max_sum, jobs, output_format, max_bracket_crossings, bracket_method, skip) -> None:
    """Verify every Lorenz vector up to an entry sum."""
    max_sum = max_sum or settings.BATTERY_MAX_SUM
    result = run_battery(
        enumerate_vectors(max_sum),
        max_sum,
        jobs=jobs or settings.BATTERY_JOBS,
        max_crossings=max_bracket_crossings,
        method=bracket_method,
        skip=skip,
    )
    if output_format == "json":
        _echo_json([instance.model_dump(mode="json") for instance in result.instances])
    else:
        click.echo(f"{'vector':<24} {'T-link':<24} {'comp':>4}  verdict")
        for instance in result.instances:
            vector = format_vector(LorenzVector(entries=tuple(instance.vector)))
            tlink = ",".join(f"({p},{q})" for p, q in instance.tlink)
            components = instance.invariants["lorenz-braid"].components
            verdict = "ok" if instance.verified else f"MISMATCH {instance.mismatch_detail}"
            click.echo(f"{vector:<24} {tlink:<24} {components:>4}  {verdict}")
        click.echo(f"{result.passed} passed, {result.failed} failed")
    if result.failed:
        ctx.exit(EXIT_MISMATCH)


@cli.command()
@click.option("--braid", "braid_text", required=True, help="Braid word, e.g. \"s1 s2 s1'\"")
@click.option("--strands", type=click.IntRange(min=1), default=None, help="Strand count")
@format_option
@cap_option
@method_option
@skip_option
def report(braid_text, strands, output_format, max_bracket_crossings, bracket_method, skip) -> None:
    """Report the invariants of the closure of an arbitrary braid."""
    try:
        word = parse_braid_text(braid_text, strands)
    except LinkInputError as e:
        raise click.BadParameter(str(e), param_hint="--braid")
    result = full_report("braid", word, max_crossings=max_bracket_crossings, method=bracket_method, skip=skip)
    if output_format == "json":
        click.echo(result.model_dump_json(indent=2))
        return
    click.echo(f"braid: {word} on {word.strands} strands")
    for line in _report_lines(result):
        click.echo(line)


@cli.command()
@click.option("--host", default=None, help=f"Bind address [default: {settings.API_HOST}]")
@click.option("--port", type=int, default=None, help=f"Port [default: {settings.API_PORT}]")
def serve(host: Optional[str], port: Optional[int]) -> None:
    """Run the REST API with uvicorn."""
    import uvicorn

    uvicorn.run(
        "lorenz_links.main:app",
        host=host or settings.API_HOST,
        port=port or settings.API_PORT,
        reload=settings.DEBUG,
        log_level=settings.LOG_LEVEL.lower(),
    )
