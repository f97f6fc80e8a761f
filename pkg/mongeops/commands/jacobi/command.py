# mongeops/commands/jacobi/command.py
import click

from ..check.command import run_check
from ..common import common_options, guarded


@click.command("jacobi", help="Same as check --both --pva.")
@click.argument("file", type=click.Path(exists=True, dir_okay=False))
@common_options
@guarded("jacobi")
def cmd(file, seed, fmt, output, verbose):
    return run_check(file, "both", True, None, fmt, output)
