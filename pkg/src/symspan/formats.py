"""Text formats: bounds CSV/JSON, dimension tables, certificate JSON."""

from __future__ import annotations

import csv
import io
import json
from typing import Sequence

from .bounds import BoundsRecord
from .rank import RelationCertificate

BOUNDS_COLUMNS = ("n", "D", "U", "E", "G", "H", "P", "eq2")


def _csv_text(header: Sequence[str], rows: Sequence[Sequence[object]]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow(["" if v is None else v for v in row])
    return buf.getvalue()


def _bounds_row(rec: BoundsRecord) -> list:
    return [getattr(rec, c) for c in BOUNDS_COLUMNS]


def bounds_to_csv(records: Sequence[BoundsRecord]) -> str:
    return _csv_text(BOUNDS_COLUMNS, [_bounds_row(r) for r in records])


def bounds_from_csv(text: str) -> list[BoundsRecord]:
    reader = csv.DictReader(io.StringIO(text))
    if tuple(reader.fieldnames or ()) != BOUNDS_COLUMNS:
        raise ValueError(f"unexpected header {reader.fieldnames}")
    out = []
    for row in reader:
        vals = {k: (int(v) if v != "" else None) for k, v in row.items()}
        out.append(BoundsRecord(**vals))
    return out


def bounds_to_json(records: Sequence[BoundsRecord], violations: Sequence[str] = ()) -> str:
    doc = {
        "rows": [dict(zip(BOUNDS_COLUMNS, _bounds_row(r))) for r in records],
        "chain_violations": list(violations),
    }
    return json.dumps(doc, indent=2) + "\n"


def bounds_from_json(text: str) -> tuple[list[BoundsRecord], list[str]]:
    doc = json.loads(text)
    records = [BoundsRecord(**{k: row[k] for k in BOUNDS_COLUMNS}) for row in doc["rows"]]
    return records, list(doc.get("chain_violations", []))


def bounds_to_table(records: Sequence[BoundsRecord]) -> str:
    rows = [["—" if v is None else str(v) for v in _bounds_row(r)] for r in records]
    widths = [max(len(h), *(len(r[i]) for r in rows)) for i, h in enumerate(BOUNDS_COLUMNS)]
    lines = ["  ".join(h.rjust(w) for h, w in zip(BOUNDS_COLUMNS, widths))]
    lines += ["  ".join(v.rjust(w) for v, w in zip(r, widths)) for r in rows]
    return "\n".join(lines) + "\n"


DIMS_COLUMNS = ("n", "D", "method", "primes")


def dims_to_csv(rows: Sequence[tuple[int, int, str, Sequence[int]]]) -> str:
    return _csv_text(DIMS_COLUMNS, [(n, D, m, ";".join(map(str, ps))) for n, D, m, ps in rows])


def dims_from_csv(text: str) -> list[tuple[int, int, str, tuple[int, ...]]]:
    reader = csv.DictReader(io.StringIO(text))
    return [
        (int(r["n"]), int(r["D"]), r["method"],
         tuple(int(p) for p in r["primes"].split(";") if p))
        for r in reader
    ]


def dims_to_json(rows: Sequence[tuple[int, int, str, Sequence[int]]]) -> str:
    doc = {"rows": [{"n": n, "D": D, "method": m, "primes": list(ps)} for n, D, m, ps in rows]}
    return json.dumps(doc, indent=2) + "\n"


def dims_to_table(rows: Sequence[tuple[int, int, str, Sequence[int]]]) -> str:
    lines = []
    primes = sorted({p for *_, ps in rows for p in ps})
    if primes:
        lines.append("# primes: " + ",".join(map(str, primes)))
    lines.append(f"{'n':>3}  {'D':>6}  method")
    lines += [f"{n:>3}  {D:>6}  {m}" for n, D, m, _ in rows]
    return "\n".join(lines) + "\n"


def certificates_to_json(n: int, certs: Sequence[RelationCertificate]) -> str:
    doc = {"n": n, "relations": [c.to_json_obj() for c in certs]}
    return json.dumps(doc, indent=2) + "\n"


def certificates_from_json(text: str) -> tuple[int, list[RelationCertificate]]:
    doc = json.loads(text)
    n = int(doc["n"])
    return n, [RelationCertificate.from_json_obj(n, r) for r in doc["relations"]]


def certificates_to_table(certs: Sequence[RelationCertificate]) -> str:
    lines = []
    for i, c in enumerate(certs, 1):
        body = " ".join(f"{a:+d}*f{lam}" for lam, a in c.terms)
        lines.append(f"[{i}] {body} = 0   verified={c.verified}")
    return "\n".join(lines) + ("\n" if lines else "")
