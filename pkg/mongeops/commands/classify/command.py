# mongeops/commands/classify/command.py
import logging

import click

from ...errors import DimensionMismatch, SymbolNotComputable
from ...exactalg import print_ratio
from ...geometry import classify2, monge_lift
from ...opfile import load
from ...report import NOTE, PASS, Report
from ..common import common_options, emit_report, guarded, make_rng

log = logging.getLogger(__name__)


@click.command("classify", help="Normal-form class (n = 2) or Segre symbol (n = 3) of a metric.")
@click.argument("file", type=click.Path(exists=True, dir_okay=False))
@common_options
@guarded("classify")
def cmd(file, seed, fmt, output, verbose):
    of = load(file)
    report = Report(f"classify {file}")
    if of.n == 2:
        result = classify2(of.metric)
        report.add("class", PASS, result.label)
        constants = ", ".join(f"{k} = {print_ratio(v)}" for k, v in result.constants.items())
        report.add("constants", NOTE, constants)
        if result.translation is not None:
            p, q = (print_ratio(t) for t in result.translation)
            report.add("translation", NOTE, f"p -> p + ({p}), q -> q + ({q})")
    elif of.n == 3:
        try:
            data = monge_lift(of.metric, make_rng(seed))
        except SymbolNotComputable as exc:
            report.add("Segre symbol", NOTE, f"not computable; characteristic polynomial {exc.charpoly}")
        else:
            report.add("Segre symbol", PASS, data.symbol)
            report.add("characteristic polynomial", NOTE, str(data.charpoly))
    else:
        raise DimensionMismatch(f"classification covers n = 2 and n = 3, not n = {of.n}")
    return emit_report(report, fmt, output)
