"""Graded skew-gentle datums and their index sets.

A datum consists of polygon sizes ``m_1..m_t``, a pairing of the edges
``(i, j)`` (``1 <= j <= m_i``) in which every edge has exactly one partner
(possibly itself), and integer gradings ``chi_{j,j+1}`` per polygon.

Elements of the signed index set are triples ``(i, j, kappa)`` with
``kappa`` equal to ``''`` for an edge paired with another edge and ``'+'`` or
``'-'`` for a self-paired (fixed) edge.  Indices are 1-based.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .errors import (DuplicatePartner, GradingLengthMismatch, IndexOutOfPolygon, InputError,
                     MissingPartner, NonPositiveSize)

SIGNS = ('+', '-')


class SkewGentleDatum:
    """Validated datum with derived index sets.

    Classes of signed indices (merged partner pairs, split fixed signs) are
    numbered in ``(i, j, kappa)`` lexicographic order of their smallest member.
    """

    def __init__(self, polygon_sizes, pairs, fixed, gradings):
        self.polygon_sizes = tuple(int(m) for m in polygon_sizes)
        self.pairs = tuple(tuple(sorted((tuple(a), tuple(b)))) for a, b in pairs)
        self.fixed = frozenset(tuple(x) for x in fixed)
        self.gradings = tuple(tuple(int(c) for c in g) for g in gradings)
        self.partner = {}
        for a, b in self.pairs:
            self.partner[a] = b
            self.partner[b] = a
        for x in self.fixed:
            self.partner[x] = x
        self.omega = [(i, j) for i in range(1, self.t + 1) for j in range(1, self.m(i) + 1)]
        self.omega_pm = []
        for (i, j) in self.omega:
            self.omega_pm.extend(self.pm_of(i, j))
        reps = []
        for x in self.omega_pm:
            i, j, k = x
            if k:
                reps.append((x, (x,)))
            elif (i, j) < self.partner[(i, j)]:
                i2, j2 = self.partner[(i, j)]
                reps.append((x, (x, (i2, j2, ''))))
        reps.sort()
        self.classes = [members for _, members in reps]
        self.class_of = {x: z for z, members in enumerate(self.classes) for x in members}
        self.omega_bar = sorted({min((i, j), self.partner[(i, j)]) for (i, j) in self.omega})

    @property
    def t(self):
        return len(self.polygon_sizes)

    def m(self, i):
        if not 1 <= i <= self.t:
            raise IndexOutOfPolygon(f"no polygon {i}")
        return self.polygon_sizes[i - 1]

    def check_edge(self, i, j, allow_boundary=True):
        lo = 0 if allow_boundary else 1
        if not lo <= j <= self.m(i):
            raise IndexOutOfPolygon(f"edge ({i},{j}) outside polygon {i}")

    def is_fixed(self, i, j):
        return (i, j) in self.fixed

    def pm_of(self, i, j):
        """Signed indices over the edge ``(i, j)``, ``+`` before ``-``."""
        if self.is_fixed(i, j):
            return [(i, j, '+'), (i, j, '-')]
        return [(i, j, '')]

    def khat(self, i, j):
        """Key of the arc class of edge ``(i, j)`` (ignores signs)."""
        return min((i, j), self.partner[(i, j)])

    def chi(self, i, j1, j2):
        """Grading sum ``chi_{j1,j2}`` of polygon ``i``, antisymmetric in ``j1, j2``."""
        if j1 > j2:
            return -self.chi(i, j2, j1)
        g = self.gradings[i - 1]
        return sum(g[k - 1] for k in range(j1, j2))

    def class_label(self, z):
        i, j, k = self.classes[z][0]
        return f"({i},{j}{k})"

    def to_raw(self):
        return {
            "polygons": list(self.polygon_sizes),
            "pairs": [[list(a), list(b)] for a, b in self.pairs],
            "fixed": [list(x) for x in sorted(self.fixed)],
            "gradings": [list(g) for g in self.gradings],
        }

    def __eq__(self, other):
        return isinstance(other, SkewGentleDatum) and self.to_raw() == other.to_raw()

    def __hash__(self):
        return hash(json.dumps(self.to_raw(), sort_keys=True))

    def __repr__(self):
        return f"SkewGentleDatum({json.dumps(self.to_raw())})"


def validate_datum(raw) -> SkewGentleDatum:
    """Check a raw datum (mapping or JSON string) and build the datum."""
    if isinstance(raw, str):
        try:
            raw = json.loads(raw)
        except json.JSONDecodeError as exc:
            raise InputError(f"datum is not valid JSON: {exc}") from None
    try:
        sizes = [int(m) for m in raw["polygons"]]
        pairs = [(tuple(map(int, a)), tuple(map(int, b))) for a, b in raw.get("pairs", [])]
        fixed = [tuple(map(int, x)) for x in raw.get("fixed", [])]
        gradings = raw.get("gradings")
        if gradings is None:
            gradings = [[0] * (m - 1) for m in sizes]
        gradings = [[int(c) for c in g] for g in gradings]
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError(f"malformed datum: {exc!r}") from None
    for i, m in enumerate(sizes, 1):
        if m < 1:
            raise NonPositiveSize(f"polygon {i} has size {m}")
    if len(gradings) != len(sizes):
        raise GradingLengthMismatch(f"{len(gradings)} grading lists for {len(sizes)} polygons")
    for i, (m, g) in enumerate(zip(sizes, gradings), 1):
        if len(g) != m - 1:
            raise GradingLengthMismatch(f"polygon {i}: expected {m - 1} gradings, got {len(g)}")
    valid = {(i, j) for i, m in enumerate(sizes, 1) for j in range(1, m + 1)}
    seen = {}
    for a, b in pairs + [(x, x) for x in fixed]:
        for x, y in {(a, b), (b, a)}:
            if x not in valid:
                raise IndexOutOfPolygon(f"edge {x} is not an edge of the datum")
            if x in seen:
                raise DuplicatePartner(f"edge {x} paired with both {seen[x]} and {y}")
            seen[x] = y
    missing = sorted(valid - set(seen))
    if missing:
        raise MissingPartner(f"edges without partner: {missing}")
    return SkewGentleDatum(sizes, [p for p in pairs if p[0] != p[1]],
                           fixed + [p[0] for p in pairs if p[0] == p[1]], gradings)


def load_datum(path) -> SkewGentleDatum:
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from None
    return validate_datum(text)


@dataclass
class QuiverTriple:
    """Graded quiver with special vertices and quadratic zero relations."""

    vertices: list
    arrows: list = field(default_factory=list)      # (name, source, target, degree)
    special: list = field(default_factory=list)
    relations: list = field(default_factory=list)   # (first arrow, second arrow)

    def degree_multiset(self):
        return sorted(a[3] for a in self.arrows)


def to_quiver_triple(d: SkewGentleDatum) -> QuiverTriple:
    """Quiver, special vertices and relations of the skew-gentle algebra.

    Vertices are arc classes of edges; the arrow ``a(i,j)`` runs from the
    class of ``(i, j-1)`` to the class of ``(i, j)`` for ``j >= 2``.  The
    composite ``a(i1,j1) a(i2,j2+1)`` is a relation whenever
    ``(i1,j1)`` is paired with ``(i2,j2)``.
    """
    vertices = list(d.omega_bar)
    arrows = []
    names = {}
    for (i, j) in d.omega:
        if j >= 2:
            name = f"a({i},{j})"
            names[(i, j)] = name
            arrows.append((name, d.khat(i, j - 1), d.khat(i, j), d.chi(i, j - 1, j)))
    relations = []
    for (i1, j1) in d.omega:
        i2, j2 = d.partner[(i1, j1)]
        first, second = (i1, j1), (i2, j2 + 1)
        if first in names and second in names:
            relations.append((names[first], names[second]))
    special = sorted(d.fixed)
    return QuiverTriple(vertices, arrows, special, relations)
