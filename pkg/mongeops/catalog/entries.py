# mongeops/catalog/entries.py
import json
import logging
import os
from dataclasses import dataclass, field
from typing import Any, Dict, List, Mapping, Optional

from .. import config, registry
from ..errors import InputError, UnknownEntry
from ..exactalg import Parameter, parse_expr
from ..geometry import MongeMetric, OperatorData, WForm, derive_c
from ..opfile import OperatorFile, from_document, parse_matrix

log = logging.getLogger(__name__)


@dataclass
class Degeneration:
    label: str
    substitute: Dict[str, str]


@dataclass
class CatalogEntry:
    """A normal form with the invariants stated for it, read from its operator file."""
    name: str
    file: str
    description: str
    document: Dict[str, Any]
    opfile: OperatorFile
    degenerations: List[Degeneration] = field(default_factory=list)

    @property
    def n(self) -> int:
        return self.opfile.n

    @property
    def ctx(self):
        return self.opfile.ctx

    @property
    def parameters(self) -> List[Parameter]:
        return list(self.ctx.parameters)

    @property
    def segre(self) -> Optional[str]:
        return self.document.get("segre")

    @property
    def metric(self) -> MongeMetric:
        return self.opfile.metric

    @property
    def tail(self) -> WForm:
        tails = [w for w in (self.opfile.tails or []) if not w.is_zero()]
        return tails[0] if tails else WForm.zero(self.ctx, self.n)

    @property
    def stated_det(self) -> Optional[str]:
        return self.document.get("stated_det")

    @property
    def local(self) -> bool:
        return bool(self.document.get("local", False))

    @property
    def locus(self) -> str:
        return self.document.get("locus", "")

    @property
    def printed_tails(self) -> Optional[List[Mapping[str, Any]]]:
        printed = self.document.get("printed") or {}
        return printed.get("tails")

    def operator(self) -> OperatorData:
        tails = [] if self.tail.is_zero() else [self.tail]
        return OperatorData(self.metric, derive_c(self.metric), tails)

    def substituted_metric(self, substitute: Mapping[str, str]) -> MongeMetric:
        """The metric with parameters replaced by expressions in the same context."""
        ctx = self.ctx
        values = {name: parse_expr(expr, ctx) for name, expr in substitute.items()}
        for name in values:
            if not any(p.name == name for p in ctx.parameters):
                raise InputError(f"{self.name}: degeneration substitutes undeclared parameter {name!r}")
        return MongeMetric(ctx, parse_matrix(ctx, self.document["g"], self.n, "g", values))

    def parse_printed_tail(self, tail: Mapping[str, Any]) -> WForm:
        of = self.opfile
        rho = parse_matrix(of.ctx, tail["matrix"], self.n, "printed tail", of.bindings())
        return WForm(rho, of.parse(str(tail.get("radicand", "1"))))

    def emit(self) -> str:
        return json.dumps(self.document, indent=2, ensure_ascii=False) + "\n"


def _load(meta: Mapping[str, Any], root: str) -> CatalogEntry:
    path = os.path.join(root, meta["file"])
    with open(path, encoding="utf-8") as fh:
        document = json.load(fh)
    if document.get("name") != meta["name"]:
        raise InputError(f"{path}: entry name {document.get('name')!r} does not match the registry")
    of = from_document(document, path)
    degenerations = [Degeneration(d["label"], dict(d["substitute"])) for d in document.get("degenerations", [])]
    return CatalogEntry(meta["name"], meta["file"], meta.get("description", ""), document, of, degenerations)


def entries(root: Optional[str] = None) -> List[CatalogEntry]:
    root = root or config.catalog_path()
    out = [_load(meta, root) for meta in registry.ENTRIES]
    log.info(f"[CATALOG] loaded {len(out)} entries from {root}")
    return out


def entry(name: str, root: Optional[str] = None) -> CatalogEntry:
    meta = registry.find(name)
    if meta is None:
        raise UnknownEntry(name)
    return _load(meta, root or config.catalog_path())
