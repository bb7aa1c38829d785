"""Result records and their table/JSON/CSV renderings."""

from __future__ import annotations

import csv
import io
import json
from dataclasses import asdict, dataclass, field
from typing import Any, Optional, Sequence

SCHEMA = 1
KINDS = ("count2d", "enum2d", "counthd", "enumhd", "verify")


@dataclass
class ClassReport:
    kind: str
    q: int
    count: int
    n: Optional[int] = None
    index: Optional[int] = None
    group_order: Optional[int] = None
    total_orbits: Optional[int] = None
    representatives: Optional[list] = None
    elapsed_ms: float = 0.0
    schema: int = field(default=SCHEMA)

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown report kind {self.kind!r}")
        if self.representatives is not None and len(self.representatives) != self.count:
            raise ValueError(
                f"count {self.count} disagrees with {len(self.representatives)} representatives")

    def to_dict(self) -> dict[str, Any]:
        return asdict(self)

    @classmethod
    def from_dict(cls, d: dict[str, Any]) -> ClassReport:
        d = dict(d)
        if d.get("schema", SCHEMA) != SCHEMA:
            raise ValueError(f"unsupported schema {d.get('schema')}")
        reps = d.get("representatives")
        if reps is not None and d["kind"] == "enumhd":
            d["representatives"] = [[list(pair) for pair in rep] for rep in reps]
        return cls(**d)


def to_json(reports: Sequence[ClassReport]) -> str:
    return json.dumps({"schema": SCHEMA, "reports": [r.to_dict() for r in reports]}, indent=2)


def from_json(text: str) -> list[ClassReport]:
    data = json.loads(text)
    if data.get("schema") != SCHEMA:
        raise ValueError(f"unsupported schema {data.get('schema')}")
    return [ClassReport.from_dict(d) for d in data["reports"]]


COLUMNS = {
    "count2d": ("q", "index", "count"),
    "enum2d": ("q", "index", "count", "representatives"),
    "counthd": ("n", "q", "count"),
    "enumhd": ("n", "q", "order", "total_orbits", "count", "representatives"),
}


def _fmt_rep(kind: str, rep) -> str:
    if kind == "enumhd":
        return "{" + ",".join(f"({f},{a})" for f, a in rep) + "}"
    return "{" + ",".join(str(x) for x in rep) + "}"


def _cell(r: ClassReport, col: str) -> str:
    if col == "order":
        return str(r.q ** (r.n + 1))
    if col == "representatives":
        return " ".join(_fmt_rep(r.kind, rep) for rep in r.representatives or [])
    value = getattr(r, col)
    return "" if value is None else str(value)


def _rows(reports: Sequence[ClassReport]) -> tuple[tuple[str, ...], list[list[str]]]:
    kinds = {r.kind for r in reports}
    if len(kinds) != 1:
        raise ValueError(f"cannot tabulate mixed report kinds {sorted(kinds)}")
    cols = COLUMNS[kinds.pop()]
    return cols, [[_cell(r, c) for c in cols] for r in reports]


def render_table(reports: Sequence[ClassReport]) -> str:
    """Plain text table, numeric columns right-aligned, two spaces between columns."""
    if not reports:
        return ""
    cols, rows = _rows(reports)
    widths = [max(len(c), *(len(row[i]) for row in rows)) for i, c in enumerate(cols)]

    def line(cells):
        parts = [cell.ljust(w) if c == "representatives" else cell.rjust(w)
                 for c, cell, w in zip(cols, cells, widths)]
        return "  ".join(parts).rstrip()

    return "\n".join([line(cols)] + [line(row) for row in rows]) + "\n"


def render_csv(reports: Sequence[ClassReport]) -> str:
    if not reports:
        return ""
    cols, _ = _rows(reports)
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(cols)
    for r in reports:
        writer.writerow([json.dumps(r.representatives) if c == "representatives" else _cell(r, c)
                         for c in cols])
    return buf.getvalue()
