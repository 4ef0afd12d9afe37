"""Byte-stable JSON records of triple systems.

Rationals are written as "p/q" strings (integers without a denominator),
indices are 0-based, only nonzero entries appear, and every list is sorted.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .linalg import ALTERNATING, BilinearForm, Matrix
from .scalar import Q, format_rational
from .sts import ModelLabel, TripleSystem, Z4Grading

SCHEMA_KEYS = ("label", "params", "dim", "omega", "trip", "grading", "seed")


@dataclass
class ExportRecord:
    label: ModelLabel
    system: TripleSystem
    grading: Z4Grading | None = None
    seed: int = 1
    invariants: dict = field(default_factory=dict)


def to_dict(rec: ExportRecord) -> dict:
    T = rec.system
    omega = sorted((i, j, v) for (i, j), v in T.omega.gram.to_dict().items() if v)
    trip = sorted((i, j, k, l, v) for (i, j, k), vec in T.trip.items() for l, v in vec.items() if v)
    out = {
        "label": rec.label.family,
        "params": dict(rec.label.params),
        "dim": T.n,
        "omega": [[i, j, format_rational(v)] for i, j, v in omega],
        "trip": [[i, j, k, l, format_rational(v)] for i, j, k, l, v in trip],
        "grading": {"deg1": list(rec.grading.deg1), "deg3": list(rec.grading.deg3)} if rec.grading else None,
        "seed": rec.seed,
    }
    if rec.invariants:
        out["invariants"] = rec.invariants
    return out


def dumps(rec: ExportRecord) -> str:
    return json.dumps(to_dict(rec), sort_keys=True, separators=(",", ":")) + "\n"


def from_dict(data: dict) -> ExportRecord:
    missing = [k for k in SCHEMA_KEYS if k not in data]
    if missing:
        raise ValueError(f"record is missing {missing}")
    label = ModelLabel.of(data["label"], **data["params"])
    n = int(data["dim"])
    gram = {}
    for i, j, v in data["omega"]:
        gram[(i, j)] = Q(v)
    trip: dict = {}
    for i, j, k, l, v in data["trip"]:
        trip.setdefault((i, j, k), {})[l] = Q(v)
    T = TripleSystem(n, BilinearForm(n, Matrix(n, n, gram), ALTERNATING), trip, label)
    g = data["grading"]
    grading = Z4Grading(tuple(g["deg1"]), tuple(g["deg3"])) if g else None
    return ExportRecord(label, T, grading, int(data["seed"]), data.get("invariants", {}))


def loads(text: str) -> ExportRecord:
    return from_dict(json.loads(text))


def write(rec: ExportRecord, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dumps(rec))


def read(path) -> ExportRecord:
    with open(path, encoding="utf-8") as fh:
        return loads(fh.read())
