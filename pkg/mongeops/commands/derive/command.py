# mongeops/commands/derive/command.py
import logging

import click

from ...errors import MathFailure
from ...geometry import OperatorData, derive_c, derive_w
from ...opfile import dumps, load
from ..common import guarded, output_options, write_text

log = logging.getLogger(__name__)


@click.command("derive", help="Complete an operator file with the connection and/or tail derived from g.")
@click.argument("file", type=click.Path(exists=True, dir_okay=False))
@click.option("--c", "want_c", is_flag=True, help="Derive c^{ij}_k.")
@click.option("--w", "want_w", is_flag=True, help="Derive the tail 2-form.")
@output_options
@guarded("derive")
def cmd(file, want_c, want_w, output, verbose):
    if not (want_c or want_w):
        want_c = want_w = True
    of = load(file)
    metric = of.metric

    connection = of.connection
    if want_c:
        derived = derive_c(metric)
        if connection is not None and connection != derived:
            raise MathFailure("stored c differs from the connection determined by g")
        connection = derived

    tails = of.tails
    if want_w:
        w = derive_w(metric)
        stored = [t for t in (tails or []) if not t.is_zero()]
        if tails is not None:
            if len(stored) > 1:
                raise MathFailure("file has several tails; the derived 2-form is a single tail")
            if stored and (w.is_zero() or not w.same_up_to_sign(stored[0])):
                raise MathFailure("stored tail differs from the 2-form determined by g")
            if not stored and not w.is_zero():
                raise MathFailure("file declares no tail but g needs one")
        tails = [] if w.is_zero() else [w]
        log.info(f"[DERIVE] {file}: {'local' if w.is_zero() else 'nonlocal'} operator")

    op = OperatorData(metric, connection or derive_c(metric), tails or [])
    write_text(dumps(op, of.extras, with_c=connection is not None), output)
    return 0
