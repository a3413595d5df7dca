"""The graded skew-gentle algebra as a matrix algebra.

Basis elements are interned per datum: an idempotent ``e_z`` for every class
``z`` of signed indices, and a radical element ``p(x1, x2)`` for signed indices
``x1 = (i, j1, k1)``, ``x2 = (i, j2, k2)`` of one polygon with ``j1 < j2``.
Products follow ``p(x1,x2) p(x2',x3) = p(x1,x3)`` if ``x2 == x2'`` and vanish
otherwise.  ``p(x1, x2)`` lies in ``e_{[x1]} A e_{[x2]}``, so it is a map from
the projective of ``[x2]`` to the projective of ``[x1]``.

Matrices over the algebra are sparse dicts ``{(row, col): {basis_id: coeff}}``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .datum import SkewGentleDatum
from .errors import InvalidMarker, TypeMismatch


@dataclass(frozen=True)
class BasisElement:
    kind: str            # 'e' or 'p'
    z: int | None        # class index for idempotents
    x1: tuple | None
    x2: tuple | None
    degree: int

    def label(self, d: SkewGentleDatum):
        if self.kind == 'e':
            return f"e{d.class_label(self.z)}"
        (i, a, ka), (_, b, kb) = self.x1, self.x2
        return f"p({i},{a}{ka};{b}{kb})"


class Algebra:
    """Basis, grading and multiplication of the algebra of a datum."""

    def __init__(self, datum: SkewGentleDatum):
        self.datum = datum
        d = datum
        self.basis = [BasisElement('e', z, None, None, 0) for z in range(len(d.classes))]
        for i in range(1, d.t + 1):
            pms = [x for x in d.omega_pm if x[0] == i]
            for x1 in pms:
                for x2 in pms:
                    if x1[1] < x2[1]:
                        self.basis.append(BasisElement('p', None, x1, x2, d.chi(i, x1[1], x2[1])))
        self.index = {}
        for b, el in enumerate(self.basis):
            self.index[('e', el.z) if el.kind == 'e' else ('p', el.x1, el.x2)] = b
        self.left_class = []
        self.right_class = []
        for el in self.basis:
            if el.kind == 'e':
                self.left_class.append(el.z)
                self.right_class.append(el.z)
            else:
                self.left_class.append(d.class_of[el.x1])
                self.right_class.append(d.class_of[el.x2])
        by_start = {}
        for b, el in enumerate(self.basis):
            if el.kind == 'p':
                by_start.setdefault(el.x1, []).append(b)
        self._products = {}
        for b, el in enumerate(self.basis):
            if el.kind != 'p':
                continue
            for c in by_start.get(el.x2, ()):
                self._products[(b, c)] = self.index[('p', el.x1, self.basis[c].x2)]
        self._between = {}
        for b in range(len(self.basis)):
            self._between.setdefault((self.left_class[b], self.right_class[b]), []).append(b)

    def __len__(self):
        return len(self.basis)

    @cached_property
    def num_idempotents(self):
        return len(self.datum.classes)

    def degree(self, b):
        return self.basis[b].degree

    def e(self, z):
        return z

    def p(self, x1, x2):
        return self.index[('p', tuple(x1), tuple(x2))]

    def between(self, zt, zs):
        """Basis of ``e_zt A e_zs``: maps from the projective ``zs`` to ``zt``."""
        return self._between.get((zt, zs), [])

    def multiply(self, a, b):
        """Product of basis ids, or ``None`` for zero."""
        ea, eb = self.basis[a], self.basis[b]
        if ea.kind == 'e':
            return b if self.left_class[b] == ea.z else None
        if eb.kind == 'e':
            return a if self.right_class[a] == eb.z else None
        return self._products.get((a, b))

    def label(self, b):
        return self.basis[b].label(self.datum)


def lambda_basis(d: SkewGentleDatum):
    """Idempotents followed by the radical basis elements."""
    return list(Algebra(d).basis)


def multiply_basis(alg: Algebra, a: BasisElement, b: BasisElement):
    """Product of two basis elements, ``None`` meaning zero."""
    key = lambda el: ('e', el.z) if el.kind == 'e' else ('p', el.x1, el.x2)
    res = alg.multiply(alg.index[key(a)], alg.index[key(b)])
    return None if res is None else alg.basis[res]


def cover_basis(d: SkewGentleDatum):
    """Basis of the cover algebra: pairs ``(x1, x2)`` in one polygon with ``j1 <= j2``."""
    out = []
    for i in range(1, d.t + 1):
        pms = [x for x in d.omega_pm if x[0] == i]
        out.extend((x1, x2) for x1 in pms for x2 in pms if x1[1] <= x2[1])
    return out


def cover_multiply(a, b):
    """Product of matrix units of the cover algebra, ``None`` meaning zero."""
    return (a[0], b[1]) if a[1] == b[0] else None


# -- matrices over the algebra ------------------------------------------------

def mat_add_into(target, key, vec, scale=1):
    entry = target.setdefault(key, {})
    for b, c in vec.items():
        v = entry.get(b, 0) + scale * c
        if v:
            entry[b] = v
        else:
            entry.pop(b, None)
    if not entry:
        del target[key]


def vec_mul(alg: Algebra, u, v):
    out = {}
    for a, ca in u.items():
        for b, cb in v.items():
            c = alg.multiply(a, b)
            if c is not None:
                out[c] = out.get(c, 0) + ca * cb
    return {k: x for k, x in out.items() if x}


def mat_mul(alg: Algebra, A, B):
    """Product of sparse algebra matrices (algebra product in natural order)."""
    rows_b = {}
    for (k, j), v in B.items():
        rows_b.setdefault(k, []).append((j, v))
    out = {}
    for (i, k), u in A.items():
        for j, v in rows_b.get(k, ()):
            w = vec_mul(alg, u, v)
            if w:
                mat_add_into(out, (i, j), w)
    return out


def mat_scale(A, s):
    return {k: {b: s * c for b, c in v.items()} for k, v in A.items()} if s else {}


def mat_sub(A, B):
    out = {k: dict(v) for k, v in A.items()}
    for k, v in B.items():
        mat_add_into(out, k, v, -1)
    return out


# -- block morphisms ----------------------------------------------------------

MARKER_OUT = {'+': ((1, 0), (0, -1)), '-': ((0, 0), (0, 1))}
MARKER_IN = {'+': ((1, 0), (0, 0)), '-': ((1, 0), (0, 1))}


def block_indices(d: SkewGentleDatum, y):
    """Signed indices of a block label: ``(i, j)`` (all signs) or ``(i, j, kappa)``."""
    if len(y) == 3:
        return [tuple(y)]
    return d.pm_of(*y)


def _marker(table, xi, size):
    if size == 1:
        if xi not in (None, ''):
            raise InvalidMarker(f"marker {xi!r} given for a one-dimensional block")
        return ((1,),)
    if xi not in table:
        raise InvalidMarker(f"marker {xi!r} is not '+' or '-'")
    return table[xi]


def block_morphism(alg: Algebra, y1, y2, xi1=None, xi2=None):
    """Dense matrix ``f_in(xi1) . f_{y1,y2} . f_out(xi2)`` of algebra vectors.

    Rows follow the signed indices of ``y1`` and columns those of ``y2``,
    ``+`` before ``-``.
    """
    d = alg.datum
    rows, cols = block_indices(d, y1), block_indices(d, y2)
    if rows[0][0] != cols[0][0] or rows[0][1] >= cols[0][1]:
        raise TypeMismatch(f"no radical morphism from {y2} to {y1}")
    fin = _marker(MARKER_IN, xi1, len(rows))
    fout = _marker(MARKER_OUT, xi2, len(cols))
    out = [[{} for _ in cols] for _ in rows]
    for a in range(len(rows)):
        for a2 in range(len(rows)):
            if not fin[a][a2]:
                continue
            for b2 in range(len(cols)):
                pid = alg.p(rows[a2], cols[b2])
                for b in range(len(cols)):
                    c = fin[a][a2] * fout[b2][b]
                    if c:
                        out[a][b][pid] = out[a][b].get(pid, 0) + c
    return [[{k: v for k, v in e.items() if v} for e in row] for row in out]


def marker_matrix(kind, xi, size):
    """Scalar matrix of ``f_out`` (``kind='out'``) or ``f_in`` (``kind='in'``)."""
    return _marker(MARKER_OUT if kind == 'out' else MARKER_IN, xi, size)


def dense_to_sparse(M, row_offsets, col_offsets):
    out = {}
    for a, row in enumerate(M):
        for b, v in enumerate(row):
            if v:
                out[(row_offsets[a], col_offsets[b])] = dict(v)
    return out
