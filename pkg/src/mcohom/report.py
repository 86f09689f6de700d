"""Rendering of command results as text, markdown, CSV or JSON."""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from typing import Any

from . import __version__
from .exterior import Form, form_to_json, render

FORMATS = ("text", "markdown", "csv", "json")


@dataclass
class Report:
    """Payload is a pure function of the inputs; timing lives outside it."""

    algebra: dict[str, Any]
    computation: dict[str, Any]
    columns: list[str]
    rows: list[dict[str, Any]] = field(default_factory=list)
    elapsed: float | None = None

    def payload(self) -> dict[str, Any]:
        return {
            "tool": "mcohom",
            "version": __version__,
            "algebra": self.algebra,
            "computation": self.computation,
            "results": [{c: _jsonable(row.get(c)) for c in self.columns} for row in self.rows],
        }

    def render(self, fmt: str) -> str:
        if fmt == "json":
            return json.dumps(self.payload(), indent=2) + "\n"
        if fmt == "csv":
            buf = io.StringIO()
            w = csv.writer(buf, lineterminator="\n")
            w.writerow(self.columns)
            for row in self.rows:
                w.writerow([_text(row.get(c)) for c in self.columns])
            return buf.getvalue()
        if fmt == "markdown":
            lines = ["| " + " | ".join(self.columns) + " |",
                     "|" + "|".join("---" for _ in self.columns) + "|"]
            for row in self.rows:
                lines.append("| " + " | ".join(_text(row.get(c)) for c in self.columns) + " |")
            return "\n".join(lines) + "\n"
        if fmt == "text":
            return "\n".join(" ".join(_text(row.get(c)) for c in self.columns) for row in self.rows) + "\n"
        raise ValueError(f"unknown format {fmt!r}")


def _jsonable(v):
    if isinstance(v, Form):
        return form_to_json(v)
    if isinstance(v, list):
        return [_jsonable(x) for x in v]
    return v


def _text(v) -> str:
    if v is None:
        return ""
    if isinstance(v, Form):
        return render(v)
    if isinstance(v, list):
        return "; ".join(_text(x) for x in v)
    return str(v)
