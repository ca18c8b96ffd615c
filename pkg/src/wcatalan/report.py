"""Verification reports and their text/JSON/CSV renderings."""
from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Any, Iterable, Mapping, Optional, Sequence

from .exact_arith import format_rational
from .polynomial import Poly, first_difference, format_poly
from .series import Series, first_series_difference, format_series


class IdentityId(str, Enum):
    THM1 = "thm1"
    THM2 = "thm2"
    COR3 = "cor3"
    COR4 = "cor4"
    THM5 = "thm5"
    MULT_FORMULA = "mult"
    EQ6 = "eq6"
    EQ14 = "eq14"
    EQ18 = "eq18"
    EQ17_RATIO = "eq17"
    EQ11 = "eq11"
    EQ2_EQ3 = "eq2-eq3"

    @classmethod
    def parse(cls, tag: str) -> "IdentityId":
        key = tag.strip().lower()
        aliases = {"multformula": "mult", "eq17ratio": "eq17", "eq2eq3": "eq2-eq3", "eq3": "eq2-eq3"}
        key = aliases.get(key.replace("_", ""), key)
        for member in cls:
            if member.value == key:
                return member
        raise ValueError(f"unknown identity tag: {tag!r}")


@dataclass(frozen=True)
class Witness:
    side_a: str
    side_b: str
    index: int


@dataclass(frozen=True)
class Cell:
    """One grid point. ``passed`` is ``None`` for a skipped cell."""

    params: tuple[tuple[str, Any], ...]
    passed: Optional[bool]
    witness: Optional[Witness] = None
    note: Optional[str] = None
    info: Optional[tuple[tuple[str, Any], ...]] = None

    @property
    def skipped(self) -> bool:
        return self.passed is None

    def params_dict(self) -> dict[str, Any]:
        return dict(self.params)


def _render_value(v: Poly | Fraction | int | Series | Sequence) -> str:
    if isinstance(v, Poly):
        return format_poly(v)
    if isinstance(v, Series):
        return format_series(v)
    if isinstance(v, (int, Fraction)):
        return format_rational(v)
    return format_series(v)


def compare_cell(
    params: Mapping[str, Any], side_a: Poly | Fraction | int | Series, side_b: Poly | Fraction | int | Series
) -> Cell:
    """Exact comparison of two sides; on mismatch the witness records the
    lowest differing coefficient (x-power for polynomials, t-power for
    series, 0 for scalars)."""
    if isinstance(side_a, Series):
        idx = first_series_difference(side_a, side_b)
    else:
        pa = side_a if isinstance(side_a, Poly) else Poly.constant(side_a)
        pb = side_b if isinstance(side_b, Poly) else Poly.constant(side_b)
        idx = first_difference(pa, pb)
    if idx is None:
        return Cell(tuple(params.items()), True)
    return Cell(tuple(params.items()), False, Witness(_render_value(side_a), _render_value(side_b), idx))


@dataclass
class VerificationReport:
    identity: IdentityId
    cells: list[Cell] = field(default_factory=list)

    @property
    def grid(self) -> list[dict[str, Any]]:
        return [c.params_dict() for c in self.cells]

    @property
    def results(self) -> list[Optional[bool]]:
        return [c.passed for c in self.cells]

    @property
    def failures(self) -> list[Cell]:
        return [c for c in self.cells if c.passed is False]

    @property
    def summary(self) -> dict[str, int]:
        passed = sum(1 for c in self.cells if c.passed is True)
        failed = sum(1 for c in self.cells if c.passed is False)
        skipped = sum(1 for c in self.cells if c.passed is None)
        return {"total": len(self.cells), "passed": passed, "failed": failed, "skipped": skipped}

    @property
    def ok(self) -> bool:
        return not self.failures


def summarize(reports: Iterable[VerificationReport]) -> dict[str, int]:
    total = {"total": 0, "passed": 0, "failed": 0, "skipped": 0}
    for r in reports:
        for k, v in r.summary.items():
            total[k] += v
    return total


# -- rendering ---------------------------------------------------------------

def _jsonable(v: Any) -> Any:
    if isinstance(v, Fraction):
        return format_rational(v)
    if isinstance(v, (list, tuple)):
        return [_jsonable(a) for a in v]
    return v


def cell_to_dict(cell: Cell) -> dict[str, Any]:
    d: dict[str, Any] = {"params": {k: _jsonable(v) for k, v in cell.params}, "pass": cell.passed}
    if cell.skipped:
        d["skipped"] = True
    if cell.note is not None:
        d["note"] = cell.note
    if cell.info is not None:
        d["info"] = {k: _jsonable(v) for k, v in cell.info}
    if cell.witness is not None:
        d["witness"] = {
            "side_a": cell.witness.side_a,
            "side_b": cell.witness.side_b,
            "first_difference": cell.witness.index,
        }
    return d


def report_to_dict(report: VerificationReport) -> dict[str, Any]:
    return {
        "identity": report.identity.value,
        "grid": [cell_to_dict(c) for c in report.cells],
        "summary": report.summary,
    }


def render_json(reports: Sequence[VerificationReport]) -> str:
    """One report renders as its own object; several are wrapped with an
    overall summary."""
    if len(reports) == 1:
        payload: Any = report_to_dict(reports[0])
    else:
        payload = {"reports": [report_to_dict(r) for r in reports], "summary": summarize(reports)}
    return json.dumps(payload, indent=2, ensure_ascii=False) + "\n"


CSV_COLUMNS = ("identity", "params", "pass", "first_difference", "side_a", "side_b", "note")


def _params_str(params: Iterable[tuple[str, Any]]) -> str:
    return ";".join(f"{k}={_jsonable(v)}" for k, v in params)


def render_csv(reports: Sequence[VerificationReport]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_COLUMNS)
    for r in reports:
        for c in r.cells:
            status = "skip" if c.skipped else ("true" if c.passed else "false")
            wit = c.witness
            w.writerow([
                r.identity.value,
                _params_str(c.params),
                status,
                "" if wit is None else wit.index,
                "" if wit is None else wit.side_a,
                "" if wit is None else wit.side_b,
                c.note or "",
            ])
    return buf.getvalue()


def render_text(reports: Sequence[VerificationReport]) -> str:
    lines: list[str] = []
    for r in reports:
        lines.append(f"== {r.identity.value} ==")
        labels = [_params_str(c.params).replace(";", " ") for c in r.cells]
        width = max((len(s) for s in labels), default=0)
        for label, c in zip(labels, r.cells):
            status = "SKIP" if c.skipped else ("PASS" if c.passed else "FAIL")
            line = f"  {label.ljust(width)}  {status}"
            if c.note:
                line += f"  ({c.note})"
            lines.append(line)
            if c.witness is not None:
                lines.append(f"      first difference at index {c.witness.index}")
                lines.append(f"      side A: {c.witness.side_a}")
                lines.append(f"      side B: {c.witness.side_b}")
        s = r.summary
        lines.append(f"  total={s['total']} passed={s['passed']} failed={s['failed']} skipped={s['skipped']}")
    if len(reports) > 1:
        s = summarize(reports)
        lines.append(f"ALL: total={s['total']} passed={s['passed']} failed={s['failed']} skipped={s['skipped']}")
    return "\n".join(lines) + "\n"


def render_report(report: VerificationReport | Sequence[VerificationReport], fmt: str = "text") -> bytes:
    reports = [report] if isinstance(report, VerificationReport) else list(report)
    if fmt == "json":
        out = render_json(reports)
    elif fmt == "csv":
        out = render_csv(reports)
    elif fmt == "text":
        out = render_text(reports)
    else:
        raise ValueError(f"unknown format {fmt!r}")
    return out.encode("utf-8")
