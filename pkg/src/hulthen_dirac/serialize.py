"""Flat-file output: CSV and JSON with fixed float formatting."""

from __future__ import annotations

import csv
import io
import json
import math

SIG_DIGITS = 9


def format_value(value) -> str:
    """Cell text for CSV; missing and non-finite values are empty."""
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, int):
        return str(value)
    if isinstance(value, float):
        if not math.isfinite(value):
            return ""
        return f"{value:.{SIG_DIGITS}g}"
    return str(value)


def parse_value(text: str):
    if text == "":
        return None
    if text in ("true", "false"):
        return text == "true"
    try:
        return int(text)
    except ValueError:
        pass
    try:
        return float(text)
    except ValueError:
        return text


def json_value(value):
    if isinstance(value, float):
        return float(f"{value:.{SIG_DIGITS}g}") if math.isfinite(value) else None
    return value


def to_csv(rows: list[dict], columns: list[str], meta: dict | None = None) -> str:
    """CSV text; ``meta`` goes into leading ``# key=value`` lines."""
    buf = io.StringIO()
    for key, value in (meta or {}).items():
        buf.write(f"# {key}={format_value(value)}\n")
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(columns)
    for row in rows:
        w.writerow([format_value(row.get(c)) for c in columns])
    return buf.getvalue()


def from_csv(text: str) -> tuple[dict, list[dict]]:
    """Inverse of ``to_csv``: (meta, rows) with typed cells."""
    lines = text.splitlines()
    meta = {}
    while lines and lines[0].startswith("# "):
        key, _, value = lines.pop(0)[2:].partition("=")
        meta[key] = parse_value(value)
    reader = csv.reader(lines)
    header = next(reader, None)
    if header is None:
        return meta, []
    return meta, [dict(zip(header, map(parse_value, rec))) for rec in reader]


def to_json(rows: list[dict], columns: list[str], meta: dict | None = None) -> str:
    doc = {
        "meta": {k: json_value(v) for k, v in (meta or {}).items()},
        "rows": [{c: json_value(row.get(c)) for c in columns} for row in rows],
    }
    return json.dumps(doc, indent=2, allow_nan=False) + "\n"


def render(rows: list[dict], columns: list[str], fmt: str, meta: dict | None = None) -> str:
    if fmt == "csv":
        return to_csv(rows, columns, meta)
    if fmt == "json":
        return to_json(rows, columns, meta)
    raise ValueError(f"unknown format {fmt!r}")
