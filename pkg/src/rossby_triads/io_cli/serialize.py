"""Flat-file formats for result sets.

Exact rationals are written as "p/q" strings and never as floats, so every
writer here has a reader that gives back equal objects.
"""
from __future__ import annotations

import csv
import json
from fractions import Fraction
from typing import IO, Iterable, NamedTuple

from ..core import Quad, TriadClass, WaveVec, classify_triad, symmetry_orbit
from ..fiber import CurvePoint, TableRow

__all__ = [
    "TRIAD_COLUMNS", "TriadRow", "orbit_id", "parse_orbit_id", "triad_rows",
    "format_rational", "parse_rational",
    "write_triads_csv", "read_triads_csv", "write_triads_jsonl", "read_triads_jsonl",
    "write_vectors_csv", "read_vectors_csv", "write_table_csv", "read_table_csv",
]

TRIAD_COLUMNS = ("a", "b", "x", "y", "s", "t", "w", "class", "orbit_id")


class TriadRow(NamedTuple):
    a: int
    b: int
    x: int
    y: int
    s: int
    t: int
    w: int
    cls: TriadClass
    orbit: Quad


def orbit_id(rep) -> str:
    return ":".join(str(v) for v in rep)


def parse_orbit_id(text: str) -> Quad:
    parts = text.split(":")
    if len(parts) != 4:
        raise ValueError(f"bad orbit id {text!r}")
    return Quad(*map(int, parts))


def triad_rows(hits: dict, expanded: bool = True) -> list[TriadRow]:
    """Rows for a mapping rep -> (s, t, w); orbits are expanded when asked.

    Expanded members carry the parameters of their representative.
    """
    rows = []
    for rep, (s, t, w) in hits.items():
        members = sorted(symmetry_orbit(rep)) if expanded else [Quad(*rep)]
        for q in members:
            rows.append(TriadRow(*q, s, t, w, classify_triad(q), Quad(*rep)))
    rows.sort(key=lambda r: (r.orbit, r[:4]))
    return rows


def format_rational(v) -> str:
    if v is None:
        return "inf"
    v = Fraction(v)
    return f"{v.numerator}/{v.denominator}"


def parse_rational(text: str) -> Fraction | None:
    if text == "inf":
        return None
    num, _, den = text.partition("/")
    return Fraction(int(num), int(den or 1))


def _row_out(r: TriadRow) -> list:
    return [*r[:7], r.cls.value, orbit_id(r.orbit)]


def _row_in(rec: dict) -> TriadRow:
    ints = [int(rec[k]) for k in TRIAD_COLUMNS[:7]]
    return TriadRow(*ints, TriadClass(rec["class"]), parse_orbit_id(str(rec["orbit_id"])))


def write_triads_csv(rows: Iterable[TriadRow], fh: IO[str]) -> None:
    w = csv.writer(fh, lineterminator="\n")
    w.writerow(TRIAD_COLUMNS)
    for r in rows:
        w.writerow(_row_out(r))


def read_triads_csv(fh: IO[str]) -> list[TriadRow]:
    return [_row_in(rec) for rec in csv.DictReader(fh)]


def write_triads_jsonl(rows: Iterable[TriadRow], fh: IO[str]) -> None:
    for r in rows:
        fh.write(json.dumps(dict(zip(TRIAD_COLUMNS, _row_out(r)))) + "\n")


def read_triads_jsonl(fh: IO[str]) -> list[TriadRow]:
    return [_row_in(json.loads(line)) for line in fh if line.strip()]


def write_vectors_csv(vecs: Iterable, fh: IO[str]) -> None:
    w = csv.writer(fh, lineterminator="\n")
    w.writerow(("a", "b"))
    for v in sorted(vecs):
        w.writerow(tuple(v))


def read_vectors_csv(fh: IO[str]) -> list[WaveVec]:
    return [WaveVec(int(r["a"]), int(r["b"])) for r in csv.DictReader(fh)]


def write_table_csv(rows: Iterable[TableRow], fh: IO[str]) -> None:
    w = csv.writer(fh, lineterminator="\n")
    w.writerow(("label", "Z", "W", "x", "y"))
    for r in rows:
        w.writerow((r.label, format_rational(r.point.Z), format_rational(r.point.W),
                    format_rational(r.xy[0]), format_rational(r.xy[1])))


def read_table_csv(fh: IO[str]) -> list[TableRow]:
    out = []
    for r in csv.DictReader(fh):
        pt = CurvePoint(parse_rational(r["Z"]), parse_rational(r["W"]))
        out.append(TableRow(r["label"], pt, (parse_rational(r["x"]), parse_rational(r["y"]))))
    return out
