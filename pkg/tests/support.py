"""Shared datums, arc samples and small helpers for the test suite."""

from __future__ import annotations

import json
from pathlib import Path

from strandkit.algebra import Algebra
from strandkit.catalog import RUNNING_DATUM, d4_datum, running_arcs
from strandkit.datum import validate_datum
from strandkit.words import build_bush

# A pure gentle datum (no fixed edges) and a datum with two fixed edges.
GENTLE_DATUM = {"polygons": [3, 2, 1], "pairs": [[[1, 1], [2, 1]], [[1, 2], [3, 1]], [[1, 3], [2, 2]]],
                "fixed": [], "gradings": [[1, -1], [0], []]}
TWOFIXED_DATUM = {"polygons": [4, 2], "pairs": [[[1, 2], [2, 1]], [[1, 4], [2, 2]]],
                  "fixed": [[1, 1], [1, 3]], "gradings": [[0, 1, -1], [1]]}

RAW_DATUMS = {"running": RUNNING_DATUM, "gentle": GENTLE_DATUM, "twofixed": TWOFIXED_DATUM}


class Setup:
    """Datum, bush and algebra built once per datum."""

    def __init__(self, datum):
        self.datum = datum
        self.bush = build_bush(datum)
        self.alg = Algebra(datum)


_CACHE = {}


def setup(name) -> Setup:
    if name not in _CACHE:
        d = d4_datum() if name == 'd4' else validate_datum(RAW_DATUMS[name])
        _CACHE[name] = Setup(d)
    return _CACHE[name]


def running_pair():
    s = setup('running')
    return running_arcs(s.bush)


def labelled(alg: Algebra, diff):
    """Differential with basis ids replaced by labels, zero entries dropped."""
    out = {}
    for key, vec in diff.items():
        v = {alg.label(b): c for b, c in vec.items() if c}
        if v:
            out[key] = v
    return out


def pl(a, b):
    """Label of the radical element between two signed edges of polygon 1."""
    return f"p(1,{a};{b})"


GOLDEN_DIR = Path(__file__).parent / "golden"


def load_golden(name):
    return json.loads((GOLDEN_DIR / name).read_text())


def golden_diff(entries):
    """``[[row, col, label, coeff], ...]`` as ``{(row, col): {label: coeff}}``."""
    out = {}
    for a, b, label, c in entries:
        out.setdefault((a, b), {})[label] = c
    return out
