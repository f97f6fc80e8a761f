# mongeops/commands/reduce/command.py
import logging

import click

from ...dirac import AmbientLocalOperator, compare, dirac_reduce_closed, dirac_reduce_symbolic
from ...errors import DimensionMismatch, MathFailure
from ...opfile import dumps, load
from ...report import Report, render
from ..common import common_options, guarded, write_text

log = logging.getLogger(__name__)


def resolve_axis(axis: str, coordinates) -> int:
    """A coordinate name, or a 0-based position among the coordinates."""
    if axis in coordinates:
        return coordinates.index(axis)
    try:
        k = int(axis)
    except ValueError:
        raise DimensionMismatch(f"--axis {axis!r} is neither a coordinate nor an index") from None
    if not 0 <= k < len(coordinates):
        raise DimensionMismatch(f"--axis {k} is out of range 0..{len(coordinates) - 1}")
    return k


@click.command("reduce", help="Dirac-reduce a local ambient operator to the hyperplane u^axis = 0. "
                              "The reduced operator file goes to stdout (or --output), the verdict to stderr.")
@click.argument("file", type=click.Path(exists=True, dir_okay=False))
@click.option("--axis", required=True, help="Coordinate name or 0-based position.")
@click.option("--method", type=click.Choice(["closed", "symbolic", "both"]), default="closed", show_default=True)
@common_options
@guarded("reduce")
def cmd(file, axis, method, seed, fmt, output, verbose):
    if fmt == "pdf":
        raise click.UsageError("--format pdf is not available for reduce; its verdict goes to stderr")
    of = load(file)
    if any(not t.is_zero() for t in of.tails or []):
        raise DimensionMismatch("the ambient operator must be local (no tails)")
    ambient = AmbientLocalOperator(of.metric, of.connection)
    k = resolve_axis(axis, list(of.ctx.coordinates))

    report = Report(f"reduce {file} along {of.ctx.coordinates[k]}")
    if method == "symbolic":
        result = dirac_reduce_symbolic(ambient, k)
    else:
        result = dirac_reduce_closed(ambient, k)
    report.check(f"{result.provenance} reduction passes the conditions", True)
    if method == "both":
        other = dirac_reduce_symbolic(ambient, k)
        verdict = compare(result, other)
        report.check("metric paths agree", verdict.metric)
        report.check("connection paths agree", verdict.connection)
        report.check("tail paths agree up to sign", verdict.tail)

    write_text(dumps(result.operator), output)
    click.echo(render(report, "structured" if fmt == "structured" else "text"), err=True, nl=False)
    if not report.passed:
        raise MathFailure("closed-form and symbolic reductions disagree")
    return 0
