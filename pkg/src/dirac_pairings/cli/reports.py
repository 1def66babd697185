"""Report objects and their json / csv / pretty renderings."""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any

from sympy import Rational

from dirac_pairings import __version__
from dirac_pairings.errors import UsageError

FORMATS = ("json", "csv", "pretty")

Table = list[list[Any]]


def _plain(value: Any) -> Any:
    """Exact numbers as ints or "p/q" strings, containers recursively."""
    if isinstance(value, bool) or value is None or isinstance(value, str | int):
        return value
    if isinstance(value, Rational):
        value = Fraction(int(value.p), int(value.q))
    if isinstance(value, Fraction):
        return int(value) if value.denominator == 1 else str(value)
    if isinstance(value, dict):
        return {str(k): _plain(v) for k, v in value.items()}
    if isinstance(value, list | tuple):
        return [_plain(v) for v in value]
    return str(value)


@dataclass
class Report:
    """One CLI run: inputs, the result, the identities checked and the primary table.

    ``table`` has its header as the first row. ``timing`` is only set on request.
    """

    command: str
    inputs: dict[str, Any]
    result: Any
    identities: list[tuple[str, bool]] = field(default_factory=list)
    table: Table | None = None
    timing: float | None = None

    @property
    def ok(self) -> bool:
        return all(passed for _, passed in self.identities)

    @property
    def exit_code(self) -> int:
        return 0 if self.ok else 1

    def to_json(self) -> dict[str, Any]:
        data = {
            "command": self.command,
            "inputs": _plain(self.inputs),
            "result": _plain(self.result),
            "identities": [{"name": name, "ok": passed} for name, passed in self.identities],
            "ok": self.ok,
            "version": __version__,
        }
        if self.timing is not None:
            data["timing"] = round(self.timing, 6)
        return data

    def render(self, fmt: str) -> str:
        if fmt == "json":
            return json.dumps(self.to_json(), indent=2, sort_keys=True, ensure_ascii=False) + "\n"
        if fmt == "csv":
            return _render_csv(self)
        if fmt == "pretty":
            return _render_pretty(self)
        raise UsageError(f"Unknown format {fmt!r}; choose from {', '.join(FORMATS)}")


def _rows(report: Report) -> Table:
    if report.table is not None:
        return [[_cell(c) for c in row] for row in report.table]
    return [["identity", "ok"], *([name, passed] for name, passed in report.identities)]


def _cell(value: Any) -> Any:
    value = _plain(value)
    if isinstance(value, list | dict):
        return json.dumps(value, sort_keys=True, ensure_ascii=False)
    return value


def _render_csv(report: Report) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerows(_rows(report))
    return buffer.getvalue()


def _render_pretty(report: Report) -> str:
    lines = [f"{report.command}  (dirac-pairings {__version__})"]
    for key in sorted(report.inputs):
        lines.append(f"  {key}: {_cell(report.inputs[key])}")
    rows = [[str(c) for c in row] for row in _rows(report)]
    if rows:
        widths = [max(len(row[i]) for row in rows if i < len(row)) for i in range(len(rows[0]))]
        lines.append("")
        for k, row in enumerate(rows):
            lines.append("  ".join(c.rjust(w) for c, w in zip(row, widths, strict=False)).rstrip())
            if k == 0:
                lines.append("  ".join("-" * w for w in widths))
    if report.identities:
        lines.append("")
        for name, passed in report.identities:
            lines.append(f"  [{'PASS' if passed else 'FAIL'}] {name}")
    if report.timing is not None:
        lines.append(f"\n  time: {report.timing:.3f}s")
    return "\n".join(lines) + "\n"
