# mongeops/catalog/verify.py
"""Replay the claims attached to a catalog entry against the checkers."""
import logging
import random
import time
from typing import Iterable, Optional

from .. import config
from ..errors import InputError, MathFailure, NoOperator, SymbolNotComputable, first_lines
from ..exactalg import print_ratio
from ..geometry import (
    check_conditions_lower,
    check_conditions_upper,
    derive_w,
    is_monge,
    monge_lift,
    parse_segre,
    same_segre,
    singular_variety,
    w_constraint_system,
)
from ..report import DISCREPANCY, NOTE, PASS, Report
from .entries import CatalogEntry

log = logging.getLogger(__name__)


def _conditions(report: Report, label: str, result) -> None:
    failure = result.first_failure
    if failure is None:
        report.add(label, PASS)
    else:
        where = f" at {failure.index}" if failure.index else ""
        report.check(label, False, f"condition {failure.number} ({failure.statement}){where}: {failure.residual}")


def _determinant(report: Report, e: CatalogEntry, det) -> None:
    recomputed = print_ratio(det)
    if e.stated_det is None:
        report.add("determinant", NOTE, f"no stated determinant; det g = {recomputed}")
        return
    try:
        stated = e.opfile.parse(e.stated_det)
    except InputError as exc:
        report.add("determinant", DISCREPANCY,
                   f"stated {e.stated_det} does not parse in the entry's parameters ({exc}); det g = {recomputed}")
        return
    if not stated.is_zero():
        ratio = det / stated
        if ratio.is_constant() and not ratio.is_zero():
            report.add("determinant", PASS, f"det g = {print_ratio(ratio)} * ({e.stated_det})")
            return
    report.add("determinant", DISCREPANCY, f"stated {e.stated_det}; det g = {recomputed}")


def _segre(report: Report, e: CatalogEntry, rng: random.Random) -> None:
    try:
        data = monge_lift(e.metric, rng)
    except SymbolNotComputable as exc:
        report.add("Segre symbol", NOTE, f"not computable over the rationals ({exc})")
        return
    ok = same_segre(data.groups, parse_segre(e.segre))
    report.check("Segre symbol", ok, f"computed {data.symbol}, stated {e.segre}")


def _tail(report: Report, e: CatalogEntry):
    try:
        w = derive_w(e.metric)
    except NoOperator as exc:
        report.check("derive_w", False, str(exc))
        return None
    stored = e.tail
    if w.is_zero() or stored.is_zero():
        ok = w.is_zero() and stored.is_zero()
    else:
        ok = w.same_up_to_sign(stored)
    detail = "zero form" if w.is_zero() else f"R = {print_ratio(w.radicand)}"
    report.check("derive_w reproduces w up to sign", ok, detail)
    return w


def verify_entry(e: CatalogEntry, seed: Optional[int] = None, pva: bool = False) -> Report:
    """Every claim of ``e`` as a report item; findings never raise."""
    started = time.perf_counter()
    rng = random.Random(config.DEFAULT_SEED if seed is None else seed)
    report = Report(e.name)
    log.info(f"[CATALOG] verifying {e.name}")

    ok, violations = is_monge(e.metric)
    report.check("Monge metric", ok, "" if ok else f"cyclic condition fails at {violations[:3]}")

    op = e.operator()
    _conditions(report, "conditions (lower)", check_conditions_lower(op))
    _conditions(report, "conditions (upper)", check_conditions_upper(op))

    variety = singular_variety(e.metric)
    _determinant(report, e, variety.det)
    report.check(
        "locality",
        variety.is_double == e.local == e.tail.is_zero(),
        f"det g {'is' if variety.is_double else 'is not'} a constant times a square; "
        f"entry is {'local' if e.local else 'nonlocal'}",
    )

    if e.n == 3 and e.segre:
        _segre(report, e, rng)

    derived = _tail(report, e)

    for printed in e.printed_tails or []:
        w = e.parse_printed_tail(printed)
        if derived is not None and not derived.is_zero() and w.same_up_to_sign(derived):
            report.add("printed w", PASS)
        else:
            report.add("printed w", DISCREPANCY,
                       f"printed R = {print_ratio(w.radicand)}, recomputed R = {print_ratio(e.tail.radicand)}")

    if e.n == 3 and not e.tail.is_zero():
        try:
            system = w_constraint_system(e.metric, seed=rng.randrange(2**31))
        except MathFailure as exc:
            report.check("w linear system", False, str(exc))
        else:
            report.check(
                "w linear system",
                system.kernel_dimension == 1 and system.contains(e.tail),
                f"kernel dimension {system.kernel_dimension} at samples {system.samples}",
            )

    for d in e.degenerations:
        try:
            w = derive_w(e.substituted_metric(d.substitute))
        except MathFailure as exc:
            report.check(f"degeneration {d.label}", False, str(exc))
            continue
        report.check(f"degeneration {d.label}", w.is_zero(), "local" if w.is_zero() else "tail survives")

    if pva:
        _pva(report, op)

    report.elapsed = time.perf_counter() - started
    log.info(f"[CATALOG] {e.name}: {report.overall} in {report.elapsed:.2f}s")
    return report


def _pva(report: Report, op) -> None:
    # imported late: the symbol calculus pulls in the heavier sympy machinery
    from ..pva import check_skew, jacobi_residuals

    skew = check_skew(op)
    report.check("skew-symmetry (PVA)", skew.passed, first_lines(skew.failures()))
    if not skew.passed:
        return
    jacobi = jacobi_residuals(op)
    residuals = [f"{k}: {v}" for k, v in jacobi.residuals().items()]
    report.check("Jacobi identity (PVA)", jacobi.passed, first_lines(residuals))


def verify_all(entries: Iterable[CatalogEntry], seed: Optional[int] = None, pva: bool = False) -> Report:
    report = Report("catalog verification")
    started = time.perf_counter()
    for e in entries:
        report.sections.append(verify_entry(e, seed, pva))
    report.elapsed = time.perf_counter() - started
    return report
