# mongeops/opfile.py
"""Operator files: JSON documents with expression strings.

    {
      "n": 2,
      "coordinates": ["p", "q"],
      "parameters": [{"name": "lam", "nonzero": true}],
      "roots": [{"name": "s3", "sqrt_of": "3"}],
      "g": [["q^2+1", "-p*q"], ["-p*q", "p^2+1"]],
      "c": [[["0", ...], ...], ...],                      # optional
      "tails": [{"matrix": [["0", "1"], ["-1", "0"]],   # optional
                 "radicand": "1/det_g"}]
    }

Tail expressions may use ``det_g``, bound to det g of the file's metric.
Catalog entries add ``name``, ``segre``, ``locus``, ``stated_det``, ``local``,
``printed`` and ``degenerations``; those keys are kept in ``extras``.
"""
import json
import logging
from dataclasses import dataclass, field
from typing import Any, Dict, List, Mapping, Optional, Sequence

from .errors import DimensionMismatch, InputError, abort
from .exactalg import Context, Parameter, Ratio, Root, parse_expr, print_ratio
from .exactalg.matrix import Matrix
from .geometry import Connection, MongeMetric, OperatorData, WForm, derive_c, derive_w

log = logging.getLogger(__name__)

CORE_KEYS = ("n", "coordinates", "parameters", "roots", "g", "c", "tails")
DET_G = "det_g"


@dataclass
class OperatorFile:
    ctx: Context
    metric: MongeMetric
    connection: Optional[Connection] = None
    tails: Optional[List[WForm]] = None
    extras: Dict[str, Any] = field(default_factory=dict)
    source: str = "<input>"

    @property
    def n(self) -> int:
        return self.ctx.n

    def bindings(self) -> Dict[str, Ratio]:
        return {DET_G: self.metric.det}

    def parse(self, text: str) -> Ratio:
        return parse_expr(text, self.ctx, self.bindings())

    def operator(self) -> OperatorData:
        """Operator data with c and the tails derived where the file leaves them out."""
        connection = self.connection or derive_c(self.metric)
        tails = self.tails
        if tails is None:
            w = derive_w(self.metric)
            tails = [] if w.is_zero() else [w]
        return OperatorData(self.metric, connection, tails)


# ------------------ Reading ------------------

def _require(doc: Mapping, key: str, source: str):
    if key not in doc:
        abort(InputError, f"{source}: missing key {key!r}")
    return doc[key]


def parse_matrix(ctx: Context, rows, n: int, what: str, bindings=None) -> Matrix:
    if not isinstance(rows, list) or len(rows) != n or any(not isinstance(r, list) or len(r) != n for r in rows):
        abort(DimensionMismatch, f"{what} must be an {n}x{n} matrix")
    return tuple(tuple(parse_expr(e, ctx, bindings) for e in row) for row in rows)


def context_from(doc: Mapping, source: str = "<input>") -> Context:
    coordinates = _require(doc, "coordinates", source)
    if not isinstance(coordinates, list) or not all(isinstance(c, str) for c in coordinates):
        abort(InputError, f"{source}: coordinates must be a list of names")
    n = _require(doc, "n", source)
    if n != len(coordinates):
        abort(DimensionMismatch, f"{source}: n = {n} but {len(coordinates)} coordinates are declared")
    params = []
    for p in doc.get("parameters", []):
        if isinstance(p, str):
            params.append(Parameter(p))
        else:
            params.append(Parameter(_require(p, "name", source), bool(p.get("nonzero", False))))
    roots = [Root(_require(r, "name", source), str(_require(r, "sqrt_of", source))) for r in doc.get("roots", [])]
    return Context(coordinates, params, roots)


def from_document(doc: Mapping, source: str = "<input>") -> OperatorFile:
    if not isinstance(doc, dict):
        abort(InputError, f"{source}: an operator file is a JSON object")
    ctx = context_from(doc, source)
    n = ctx.n
    metric = MongeMetric(ctx, parse_matrix(ctx, _require(doc, "g", source), n, "g"))
    of = OperatorFile(ctx, metric, source=source)
    of.extras = {k: v for k, v in doc.items() if k not in CORE_KEYS}

    if doc.get("c") is not None:
        c = doc["c"]
        if not isinstance(c, list) or len(c) != n:
            abort(DimensionMismatch, f"c must be {n}x{n}x{n}")
        upper = [parse_matrix(ctx, block, n, f"c^{{{i + 1}j}}_k") for i, block in enumerate(c)]
        of.connection = Connection(metric, upper)

    if doc.get("tails") is not None:
        tails = []
        for k, tail in enumerate(doc["tails"]):
            rho = parse_matrix(ctx, _require(tail, "matrix", source), n, f"tail {k + 1}", of.bindings())
            radicand = of.parse(str(tail.get("radicand", "1")))
            tails.append(WForm(rho, radicand))
        of.tails = tails
    log.debug(f"[OPFILE] loaded {source}: n={n}, c={'given' if of.connection else 'derived'}, "
              f"tails={'given' if of.tails is not None else 'derived'}")
    return of


def loads(text: str, source: str = "<input>") -> OperatorFile:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"{source}: not valid JSON ({exc.msg} at line {exc.lineno} column {exc.colno})") from None
    return from_document(doc, source)


def load(path: str) -> OperatorFile:
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None
    return loads(text, path)


def load_transform(path: str, ctx: Context) -> Matrix:
    """A projective matrix file: either a bare (n+1)x(n+1) list or {"matrix": [...]}."""
    try:
        with open(path, encoding="utf-8") as fh:
            doc = json.load(fh)
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: not valid JSON ({exc.msg})") from None
    rows = doc.get("matrix") if isinstance(doc, dict) else doc
    return parse_matrix(ctx, rows, ctx.n + 1, "transform")


# ------------------ Writing ------------------

def _rows(matrix: Sequence[Sequence[Ratio]]) -> List[List[str]]:
    return [[print_ratio(e) for e in row] for row in matrix]


def to_document(op: OperatorData, extras: Optional[Mapping[str, Any]] = None, with_c: bool = True) -> Dict[str, Any]:
    ctx = op.ctx
    doc: Dict[str, Any] = {"n": op.n}
    doc.update(ctx.describe())
    if not doc["roots"]:
        del doc["roots"]
    doc["g"] = _rows(op.metric.g)
    if with_c:
        doc["c"] = [_rows(block) for block in op.connection.upper]
    tails = op.nonzero_tails
    if tails:
        doc["tails"] = [{"matrix": _rows(w.rho), "radicand": print_ratio(w.radicand)} for w in tails]
    for key, value in (extras or {}).items():
        doc.setdefault(key, value)
    return doc


def dumps(op: OperatorData, extras: Optional[Mapping[str, Any]] = None, with_c: bool = True) -> str:
    return json.dumps(to_document(op, extras, with_c), indent=2, ensure_ascii=False) + "\n"
