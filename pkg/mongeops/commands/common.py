# mongeops/commands/common.py
"""Options, error handling and output shared by every command."""
import functools
import logging
import random
import traceback
from typing import Callable, Optional

import click

from .. import config, setup_logging
from ..errors import MongeopsError
from ..report import FORMATS, Report, render

log = logging.getLogger(__name__)


def output_options(fn: Callable) -> Callable:
    fn = click.option("--verbose", "-v", is_flag=True, help="Debug logging on stderr.")(fn)
    fn = click.option("--output", "-o", type=click.Path(dir_okay=False, writable=True),
                      help="Write the result to this file instead of stdout (required for pdf).")(fn)
    return fn


def common_options(fn: Callable) -> Callable:
    fn = output_options(fn)
    fn = click.option("--format", "fmt", type=click.Choice(FORMATS), default="text", show_default=True,
                      help="Report format.")(fn)
    fn = click.option("--seed", type=int, default=config.DEFAULT_SEED, show_default=True,
                      help="Seed for every randomized step.")(fn)
    return fn


def guarded(name: str):
    """Map library errors to exit codes: MongeopsError to its own code, anything else to 2."""
    def wrap(fn):
        @functools.wraps(fn)
        def inner(*args, **kwargs):
            if kwargs.get("verbose"):
                setup_logging(logging.DEBUG)
            try:
                code = fn(*args, **kwargs)
            except MongeopsError as e:
                log.info(f"[/{name}] {type(e).__name__}: {e}")
                click.echo(f"Error: {e}", err=True)
                raise SystemExit(e.exit_code)
            except (click.exceptions.Exit, click.ClickException, SystemExit):
                raise
            except Exception as e:
                log.error(f"[/{name} ERROR] {e!r}")
                traceback.print_exc()
                click.echo(f"Error: {name} failed unexpectedly; rerun with --verbose for details.", err=True)
                raise SystemExit(2)
            raise SystemExit(code or 0)
        return inner
    return wrap


def make_rng(seed: Optional[int]) -> random.Random:
    return random.Random(config.DEFAULT_SEED if seed is None else seed)


def write_text(text: str, output: Optional[str]) -> None:
    if output:
        with open(output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        click.echo(text, nl=False)


def emit_report(report: Report, fmt: str, output: Optional[str]) -> int:
    """Render ``report`` and return the exit code for its verdict."""
    if fmt == "pdf" and not output:
        raise click.UsageError("--format pdf needs --output FILE")
    text = render(report, fmt, output)
    if text is not None:
        write_text(text, output)
    return 0 if report.passed else 1
