"""Deterministic CSV and JSON report rendering.

Both formats carry the same columns row for row.  Every report opens
with the tool version and the run's fully resolved configuration, except
execution knobs (thread count, output paths) that cannot influence the
computed values: reports must be byte-identical across those knobs.

CSV dialect: comma separator, '.' decimal point, one header row, LF line
endings, '#'-prefixed metadata lines above the header.  Floats render
with repr (shortest round-trip form).
"""

from __future__ import annotations

import csv
import io
import json
import sys
from fractions import Fraction
from pathlib import Path

from . import __version__

FORMAT_CSV = "csv"
FORMAT_JSON = "json"


def _cell(value: object) -> object:
    if value is None:
        return ""
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, float):
        return repr(value)
    return value


def render_csv(columns: list[str], rows: list[dict[str, object]], meta: dict[str, object]) -> str:
    buf = io.StringIO()
    buf.write(f"# tool=zetaforge version={__version__}\n")
    for key in sorted(meta):
        buf.write(f"# {key}={meta[key]}\n")
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(columns)
    for row in rows:
        writer.writerow([_cell(row.get(col)) for col in columns])
    return buf.getvalue()


def render_json(columns: list[str], rows: list[dict[str, object]], meta: dict[str, object]) -> str:
    def jsonable(value: object) -> object:
        if isinstance(value, Fraction):
            return str(value)
        return value

    payload = {
        "tool": "zetaforge",
        "version": __version__,
        "config": {key: jsonable(meta[key]) for key in sorted(meta)},
        "columns": columns,
        "rows": [{col: jsonable(row.get(col)) for col in columns} for row in rows],
    }
    return json.dumps(payload, indent=2) + "\n"


def render_jsonl(records: list[dict[str, object]], meta: dict[str, object]) -> str:
    header = {"tool": "zetaforge", "version": __version__, "config": {k: meta[k] for k in sorted(meta)}}
    lines = [json.dumps(header, separators=(",", ":"))]
    lines += [json.dumps(record, separators=(",", ":")) for record in records]
    return "\n".join(lines) + "\n"


def render(fmt: str, columns: list[str], rows: list[dict[str, object]], meta: dict[str, object]) -> str:
    if fmt == FORMAT_CSV:
        return render_csv(columns, rows, meta)
    if fmt == FORMAT_JSON:
        return render_json(columns, rows, meta)
    raise ValueError(f"unknown format {fmt!r}")


def emit(text: str, out_path: str | None) -> None:
    if out_path:
        Path(out_path).parent.mkdir(parents=True, exist_ok=True)
        with open(out_path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
