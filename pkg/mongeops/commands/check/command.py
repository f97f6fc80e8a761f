# mongeops/commands/check/command.py
import logging
from typing import Optional

import click

from ...errors import first_lines
from ...geometry import ConditionReport, check_conditions_lower, check_conditions_upper, projective_transform
from ...opfile import load, load_transform
from ...report import NOTE, Report
from ..common import common_options, emit_report, guarded

log = logging.getLogger(__name__)


def add_conditions(report: Report, result: ConditionReport) -> None:
    section = report.section(f"conditions ({result.form})")
    for r in result.results:
        detail = ""
        if not r.passed:
            where = f" at {r.index}" if r.index else ""
            detail = f"{r.statement}{where}: {r.residual}"
        section.check(f"[{r.number}] {r.statement}", r.passed, detail)


def add_pva(report: Report, op) -> None:
    from ...pva import check_skew, jacobi_residuals

    section = report.section("lambda-bracket")
    skew = check_skew(op)
    section.check("skew-symmetry", skew.passed, first_lines(skew.failures()))
    if not skew.passed:
        return
    jacobi = jacobi_residuals(op)
    residuals = [f"{k}: {v}" for k, v in jacobi.residuals().items()]
    section.check("Jacobi identity", jacobi.passed, first_lines(residuals))


def run_check(file: str, mode: str, pva: bool, transform: Optional[str], fmt: str, output: Optional[str]) -> int:
    of = load(file)
    op = of.operator()
    report = Report(f"check {file}")
    if transform:
        op = projective_transform(op, load_transform(transform, of.ctx))
        report.add("projective transform", NOTE, f"applied {transform}")
    log.info(f"[CHECK] {file}: n={op.n}, tails={len(op.nonzero_tails)}, mode={mode}")

    if mode in ("lower", "both"):
        add_conditions(report, check_conditions_lower(op))
    if mode in ("upper", "both"):
        add_conditions(report, check_conditions_upper(op))
    if pva:
        add_pva(report, op)
    for section in report.sections:
        log.info(f"[CHECK] {section.title} {section.overall}")
    return emit_report(report, fmt, output)


@click.command("check", help="Check the Hamiltonian conditions for an operator file.")
@click.argument("file", type=click.Path(exists=True, dir_okay=False))
@click.option("--lower", "mode", flag_value="lower", help="Lower-index conditions only.")
@click.option("--upper", "mode", flag_value="upper", help="Upper-index conditions only.")
@click.option("--both", "mode", flag_value="both", default=True, help="Both forms (default).")
@click.option("--pva", is_flag=True, help="Also run the lambda-bracket skew-symmetry and Jacobi checks.")
@click.option("--transform", type=click.Path(exists=True, dir_okay=False),
              help="Apply a projective matrix file before checking.")
@common_options
@guarded("check")
def cmd(file, mode, pva, transform, seed, fmt, output, verbose):
    return run_check(file, mode, pva, transform, fmt, output)
