"""Flat check/instance/pass rows with JSON and CSV renderers."""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass

__all__ = ["CheckRow", "rows_to_json", "rows_to_csv"]


@dataclass(frozen=True)
class CheckRow:
    check: str
    instance: str
    passed: bool
    detail: str = ""

    def to_dict(self) -> dict:
        return {"check": self.check, "instance": self.instance, "pass": self.passed}


def rows_to_json(rows) -> str:
    return json.dumps([r.to_dict() for r in rows], indent=2) + "\n"


def rows_to_csv(rows) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["check", "instance", "pass"])
    for r in rows:
        writer.writerow([r.check, r.instance, "true" if r.passed else "false"])
    return buf.getvalue()
