# mongeops/report.py
"""Verdict reports and their renderers (text, structured JSON, PDF)."""
import json
import logging
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional

log = logging.getLogger(__name__)

PASS = "PASS"
FAIL = "FAIL"
DISCREPANCY = "DISCREPANCY"
NOTE = "NOTE"

STATUSES = (PASS, FAIL, DISCREPANCY, NOTE)
FORMATS = ("text", "structured", "pdf")


@dataclass
class ReportItem:
    label: str
    status: str
    detail: str = ""

    def __post_init__(self):
        if self.status not in STATUSES:
            raise ValueError(f"unknown status {self.status!r}")

    def as_dict(self) -> Dict[str, Any]:
        out = {"label": self.label, "status": self.status}
        if self.detail:
            out["detail"] = self.detail
        return out


@dataclass
class Report:
    """Ordered verdict items, optionally grouped into sections.

    DISCREPANCY and NOTE items are informational: the overall status is FAIL
    as soon as one item (in any section) fails, and PASS otherwise.
    """
    title: str
    items: List[ReportItem] = field(default_factory=list)
    sections: List["Report"] = field(default_factory=list)
    elapsed: Optional[float] = None

    def add(self, label: str, status: str, detail: str = "") -> ReportItem:
        item = ReportItem(label, status, detail)
        self.items.append(item)
        log.debug(f"[REPORT] {self.title}: {label} {status}")
        return item

    def check(self, label: str, ok: bool, detail: str = "") -> ReportItem:
        return self.add(label, PASS if ok else FAIL, detail)

    def section(self, title: str) -> "Report":
        child = Report(title)
        self.sections.append(child)
        return child

    def walk(self):
        yield self
        for s in self.sections:
            yield from s.walk()

    def count(self, status: str) -> int:
        return sum(1 for r in self.walk() for item in r.items if item.status == status)

    @property
    def overall(self) -> str:
        return FAIL if self.count(FAIL) else PASS

    @property
    def passed(self) -> bool:
        return self.overall == PASS

    @property
    def headline(self) -> str:
        """Overall status, with the number of recorded discrepancies when there are any."""
        k = self.count(DISCREPANCY)
        return f"{self.overall} ({k} {DISCREPANCY})" if k else self.overall

    def as_dict(self) -> Dict[str, Any]:
        out: Dict[str, Any] = {
            "title": self.title,
            "overall": self.overall,
            "items": [item.as_dict() for item in self.items],
        }
        if self.sections:
            out["sections"] = [s.as_dict() for s in self.sections]
        return out


# ------------------ Renderers ------------------

def render_text(report: Report, timing: bool = True) -> str:
    lines: List[str] = []

    def emit(r: Report, depth: int):
        pad = "  " * depth
        lines.append(f"{pad}== {r.title} ==  {r.headline}")
        for item in r.items:
            text = f"{pad}  {item.status:<11} {item.label}"
            if item.detail:
                text += f": {item.detail}"
            lines.append(text)
        for s in r.sections:
            emit(s, depth + 1)

    emit(report, 0)
    totals = ", ".join(f"{report.count(s)} {s}" for s in STATUSES if report.count(s))
    if totals:
        lines.append(f"-- {totals}")
    if timing and report.elapsed is not None:
        lines.append(f"-- {report.elapsed * 1000:.0f} ms")
    return "\n".join(lines) + "\n"


def render_structured(report: Report) -> str:
    return json.dumps(report.as_dict(), indent=2, sort_keys=True, ensure_ascii=False) + "\n"


def render_pdf(report: Report, path: str) -> None:
    # Lazy-import so text and structured output work without reportlab
    from xml.sax.saxutils import escape as xml_escape

    from reportlab.lib.colors import black, darkgreen, darkorange, red
    from reportlab.lib.pagesizes import A4
    from reportlab.lib.styles import ParagraphStyle, getSampleStyleSheet
    from reportlab.lib.units import mm
    from reportlab.platypus import Paragraph, SimpleDocTemplate, Spacer

    doc = SimpleDocTemplate(
        path, pagesize=A4,
        leftMargin=20*mm, rightMargin=20*mm, topMargin=20*mm, bottomMargin=20*mm,
        title=report.title,
    )
    styles = getSampleStyleSheet()
    h1, h2, body = styles["Heading1"], styles["Heading2"], styles["BodyText"]
    colours = {PASS: darkgreen, FAIL: red, DISCREPANCY: darkorange, NOTE: black}
    item_styles = {s: ParagraphStyle(f"Item{s}", parent=body, textColor=c) for s, c in colours.items()}

    story = []

    def emit(r: Report, heading):
        story.append(Paragraph(f"{xml_escape(r.title)}: {r.headline}", heading))
        for item in r.items:
            text = f"<b>{item.status}</b> {xml_escape(item.label)}"
            if item.detail:
                text += f": {xml_escape(item.detail)}"
            story.append(Paragraph(text, item_styles[item.status]))
            story.append(Spacer(1, 2))
        for s in r.sections:
            story.append(Spacer(1, 6))
            emit(s, h2)

    emit(report, h1)
    totals = ", ".join(f"{report.count(s)} {s}" for s in STATUSES if report.count(s))
    if totals:
        story.append(Spacer(1, 8))
        story.append(Paragraph(totals, body))
    doc.build(story)
    log.info(f"[REPORT] wrote {path}")


def render(report: Report, fmt: str, output: Optional[str] = None) -> Optional[str]:
    """Rendered text for text/structured output; pdf is written to ``output`` and returns None."""
    if fmt == "text":
        return render_text(report)
    if fmt == "structured":
        return render_structured(report)
    if fmt == "pdf":
        if not output:
            raise ValueError("pdf output needs an output path")
        render_pdf(report, output)
        return None
    raise ValueError(f"unknown format {fmt!r}")
