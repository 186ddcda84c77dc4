"""Canonical JSON/CSV encodings shared by the CLI and the library.

Key order is insertion order, floats are rounded to 12 significant digits,
and big integers are written as decimal strings, so equal inputs always give
byte-identical output.
"""
from __future__ import annotations

import csv
import io
import json
from typing import Any, Iterable, Sequence

from .families import Family
from .permutations import parse_cycles

FLOAT_DIGITS = 12


def normalize(obj: Any) -> Any:
    if isinstance(obj, bool) or obj is None or isinstance(obj, (int, str)):
        return obj
    if isinstance(obj, float):
        if obj != obj or obj in (float("inf"), float("-inf")):
            return str(obj)
        return float(format(obj, f".{FLOAT_DIGITS}g"))
    if isinstance(obj, dict):
        return {str(k): normalize(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [normalize(v) for v in obj]
    if hasattr(obj, "as_dict"):
        return normalize(obj.as_dict())
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def dumps(obj: Any) -> str:
    return json.dumps(normalize(obj), separators=(",", ":"), ensure_ascii=False)


def family_to_json(fam: Family) -> str:
    return dumps(fam.to_strings())


def family_from_json(text: str, n: int | None = None) -> Family:
    items = json.loads(text)
    if not isinstance(items, list) or not items:
        raise ValueError("a family is a nonempty JSON array of cycle-notation strings")
    return Family(parse_cycles(s, n) for s in items)


def _cell(value: Any) -> str:
    value = normalize(value)
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, list):
        return " ".join(str(v) for v in value)
    return str(value)


def csv_rows(records: Iterable[dict], columns: Sequence[str] | None = None, header: bool = True) -> Iterable[str]:
    """Yield CSV lines one record at a time (so long sweeps can stream)."""
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    for record in records:
        if columns is None:
            columns = list(record)
        if header:
            writer.writerow(columns)
            header = False
        writer.writerow([_cell(record.get(c)) for c in columns])
        yield buf.getvalue()
        buf.seek(0)
        buf.truncate()
