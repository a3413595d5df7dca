"""Minimal strictly perfect dg modules, Hom complexes and mapping cones.

A module is a list of summands ``(z, n)`` standing for the shifted projective
``e_z A [n]`` together with a differential: a sparse matrix whose entry
``(a, b)`` is an algebra vector in ``e_{z_a} A e_{z_b}`` mapping summand ``b``
to summand ``a``.  A component ``(t, s, b)`` of a morphism ``M -> N`` has
degree ``deg b + n_s - n_t``; differentials are homogeneous of degree 1.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .algebra import Algebra, block_morphism, mat_add_into, mat_mul, mat_sub
from .arcs import TaggedArc, build_model
from .errors import NotACocycle, NotArcObject, TypeMismatch
from .linalg import QQ_FIELD, Field, rank
from .words import Bush


@dataclass
class DgModule:
    algebra: Algebra
    summands: list                      # (class index, shift)
    diff: dict = field(default_factory=dict)
    labels: list | None = None

    def __len__(self):
        return len(self.summands)

    def summand_labels(self):
        if self.labels is not None:
            return list(self.labels)
        d = self.algebra.datum
        return [f"{d.class_label(z)}[{n}]" for z, n in self.summands]


def hom_component_degree(alg: Algebra, src, tgt, b):
    """Degree of the component ``b`` mapping summand ``src = (z, n)`` to ``tgt = (z', n')``."""
    zs, ns = src
    zt, nt = tgt
    if alg.left_class[b] != zt or alg.right_class[b] != zs:
        raise TypeMismatch(f"{alg.label(b)} does not map {alg.datum.class_label(zs)} "
                           f"to {alg.datum.class_label(zt)}")
    return alg.degree(b) + ns - nt


def build_arc_module(bush: Bush, alg: Algebra, arc: TaggedArc, model=None) -> DgModule:
    """The dg module of a tagged arc: one summand per crossing, one component per interior segment."""
    if not isinstance(arc, TaggedArc):
        raise NotArcObject("expected a tagged arc")
    model = model or build_model(bush, arc)
    diff = {}
    for seg in model.segments:
        if seg.kind != 'U' or seg.ends[0][1] == 0 or seg.ends[1][1] == 0:
            continue
        lo, hi = sorted((0, 1), key=lambda p: seg.ends[p][1])
        c_lo = model.crossings[seg.ends[lo][0]]
        c_hi = model.crossings[seg.ends[hi][0]]
        y_lo = model.block_label(bush.datum, c_lo, seg, lo)
        y_hi = model.block_label(bush.datum, c_hi, seg, hi)
        xi_lo = c_lo.sign if c_lo.kind == 'int' else None
        xi_hi = c_hi.sign if c_hi.kind == 'int' else None
        M = block_morphism(alg, y_lo, y_hi, xi_lo, xi_hi)
        rows = [model.crossings[k].summand for k in model.blocks[c_lo.block]]
        cols = [model.crossings[k].summand for k in model.blocks[c_hi.block]]
        for a, row in enumerate(M):
            for b, v in enumerate(row):
                if v:
                    mat_add_into(diff, (rows[a], cols[b]), v)
    labels = []
    for s, ci in enumerate(model.summand_crossing):
        c = model.crossings[ci]
        i, j, k = c.label
        name = f"({i},{j}{k})" if c.kind != 'plain' else alg.datum.class_label(alg.datum.class_of[c.label])
        labels.append(f"{name}[{c.n}]")
    return DgModule(alg, list(model.summands), diff, labels)


def shift_dg(m: DgModule, rho: int) -> DgModule:
    labels = None
    if m.labels is not None:
        labels = [lab[:lab.rindex('[')] + f"[{n + rho}]" for lab, (_, n) in zip(m.labels, m.summands)]
    return DgModule(m.algebra, [(z, n + rho) for z, n in m.summands], dict(m.diff), labels)


def direct_sum(*mods: DgModule) -> DgModule:
    alg = mods[0].algebra
    summands, diff, labels, off = [], {}, [], 0
    for m in mods:
        summands.extend(m.summands)
        labels.extend(m.summand_labels())
        for (a, b), v in m.diff.items():
            diff[(a + off, b + off)] = dict(v)
        off += len(m)
    return DgModule(alg, summands, diff, labels)


def zero_module(alg: Algebra) -> DgModule:
    return DgModule(alg, [], {}, [])


def validate_dg(m: DgModule, minimal=True):
    """List of violations: degree, radical entries, square zero, triangularity.

    With ``minimal=False`` identity components are allowed (as in cones).
    """
    alg = m.algebra
    problems = []
    for (a, b), v in m.diff.items():
        for e, c in v.items():
            if not c:
                continue
            if minimal and alg.basis[e].kind != 'p':
                problems.append(f"entry ({a},{b}) has a non-radical component {alg.label(e)}")
            try:
                deg = hom_component_degree(alg, m.summands[b], m.summands[a], e)
            except TypeMismatch as exc:
                problems.append(f"entry ({a},{b}): {exc}")
                continue
            if deg != 1:
                problems.append(f"entry ({a},{b}) component {alg.label(e)} has degree {deg}")
    sq = mat_mul(alg, m.diff, m.diff)
    if sq:
        problems.append(f"d^2 has {len(sq)} nonzero entries")
    # upper triangularizable iff the support graph b -> a is acyclic
    succ = {}
    for (a, b) in m.diff:
        succ.setdefault(b, set()).add(a)
    state = {}

    def cyclic(v):
        state[v] = 1
        for w in succ.get(v, ()):
            if state.get(w) == 1 or (state.get(w) is None and cyclic(w)):
                return True
        state[v] = 2
        return False

    if any(state.get(v) is None and cyclic(v) for v in range(len(m))):
        problems.append("differential is not triangularizable")
    return problems


class HomComplex:
    """The graded Hom complex between two dg modules over one algebra."""

    def __init__(self, M: DgModule, N: DgModule, field: Field = QQ_FIELD):
        self.M, self.N, self.field = M, N, field
        alg = self.alg = M.algebra
        self.basis = {}
        for t, (zt, nt) in enumerate(N.summands):
            for s, (zs, ns) in enumerate(M.summands):
                for b in alg.between(zt, zs):
                    k = alg.degree(b) + ns - nt
                    self.basis.setdefault(k, []).append((t, s, b))
        self.position = {k: {x: p for p, x in enumerate(v)} for k, v in self.basis.items()}
        self._dM = {}
        for (a, b), v in M.diff.items():
            self._dM.setdefault(a, []).append((b, v))
        self._dN = {}
        for (a, b), v in N.diff.items():
            self._dN.setdefault(b, []).append((a, v))
        self._ranks = {}

    def dim(self, k):
        return len(self.basis.get(k, ()))

    def degrees(self):
        return sorted(self.basis)

    def apply_basis(self, k, t, s, b):
        """Image of the basis element ``(t, s, b)`` of degree ``k``: a sparse vector in degree k+1."""
        alg = self.alg
        out = {}
        for s2, v in self._dM.get(s, ()):
            for e, c in v.items():
                r = alg.multiply(b, e)
                if r is not None:
                    key = (t, s2, r)
                    out[key] = out.get(key, 0) + c
        sign = -1 if k % 2 == 0 else 1
        for t2, v in self._dN.get(t, ()):
            for e, c in v.items():
                r = alg.multiply(e, b)
                if r is not None:
                    key = (t2, s, r)
                    out[key] = out.get(key, 0) + sign * c
        return {key: c for key, c in out.items() if c}

    def matrix(self, k):
        """Differential from degree ``k`` to ``k+1`` as ``{row: {col: coeff}}``."""
        rows = {}
        pos = self.position.get(k + 1, {})
        for col, (t, s, b) in enumerate(self.basis.get(k, ())):
            for key, c in self.apply_basis(k, t, s, b).items():
                rows.setdefault(pos[key], {})[col] = c
        return rows

    def rank(self, k):
        if k not in self._ranks:
            shape = (self.dim(k + 1), self.dim(k))
            self._ranks[k] = rank(self.matrix(k), shape, self.field) if shape[0] and shape[1] else 0
        return self._ranks[k]

    def cohomology_dim(self, k):
        return self.dim(k) - self.rank(k) - self.rank(k - 1)

    def differential_of(self, f: dict, k: int):
        """``d(f) = f d_M - (-1)^k d_N f`` for a morphism ``f`` given as an algebra matrix."""
        alg = self.alg
        left = mat_mul(alg, f, self.M.diff)
        right = mat_mul(alg, self.N.diff, f)
        if k % 2:
            out = {key: dict(v) for key, v in left.items()}
            for key, v in right.items():
                mat_add_into(out, key, v)
            return out
        return mat_sub(left, right)

    def is_cocycle(self, f: dict, k: int = 0):
        d = self.differential_of(f, k)
        return all(self.field.is_zero(c) for v in d.values() for c in v.values())

    def degree_of(self, f: dict):
        """Common degree of the nonzero components of ``f`` (``None`` if zero)."""
        degs = set()
        for (t, s), v in f.items():
            for b, c in v.items():
                if c:
                    degs.add(hom_component_degree(self.alg, self.M.summands[s], self.N.summands[t], b))
        if len(degs) > 1:
            raise TypeMismatch(f"morphism is not homogeneous: degrees {sorted(degs)}")
        return degs.pop() if degs else None

    def vector(self, f: dict, k: int = 0):
        """Coordinates of a degree-``k`` morphism in the basis of degree ``k``."""
        pos = self.position.get(k, {})
        out = {}
        for (t, s), v in f.items():
            for b, c in v.items():
                if c:
                    out[pos[(t, s, b)]] = c
        return out

    def class_rank(self, fs, k: int = 0):
        """Dimension of the span of the classes of the cocycles ``fs`` in ``H^k``."""
        rows = {}
        for row, entries in self.matrix(k - 1).items():
            rows[row] = dict(entries)
        cols = self.dim(k - 1)
        for f in fs:
            for row, c in self.vector(f, k).items():
                rows.setdefault(row, {})[cols] = c
            cols += 1
        shape = (self.dim(k), cols)
        total = rank(rows, shape, self.field) if shape[0] and shape[1] else 0
        return total - self.rank(k - 1)


def hom_dim(M: DgModule, N: DgModule, rho: int, field: Field = QQ_FIELD) -> int:
    return HomComplex(M, N, field).cohomology_dim(rho)


def hom_profile(M: DgModule, N: DgModule, window, field: Field = QQ_FIELD):
    hc = HomComplex(M, N, field)
    return [hc.cohomology_dim(k) for k in window]


def cone(f: dict, M: DgModule, N: DgModule, field: Field = QQ_FIELD) -> DgModule:
    """Mapping cone ``N + M[1]`` of a degree-0 cocycle ``f: M -> N``.

    The differential is ``[[d_N, f], [0, -d_M]]``.
    """
    hc = HomComplex(M, N, field)
    deg = hc.degree_of(f)
    if deg not in (None, 0) or not hc.is_cocycle(f, 0):
        raise NotACocycle("cone needs a degree-0 cocycle")
    off = len(N)
    summands = list(N.summands) + [(z, n + 1) for z, n in M.summands]
    diff = {key: dict(v) for key, v in N.diff.items()}
    for (t, s), v in f.items():
        entry = {b: c for b, c in v.items() if c}
        if entry:
            diff[(t, s + off)] = entry
    for (a, b), v in M.diff.items():
        diff[(a + off, b + off)] = {e: -c for e, c in v.items()}
    labels = N.summand_labels() + [lab[:lab.rindex('[')] + f"[{n + 1}]"
                                   for lab, (_, n) in zip(M.summand_labels(), M.summands)]
    out = DgModule(M.algebra, summands, diff, labels)
    problems = validate_dg(out, minimal=False)
    if problems:
        raise NotACocycle("; ".join(problems))
    return out


def identity_morphism(M: DgModule) -> dict:
    return {(a, a): {z: 1} for a, (z, _) in enumerate(M.summands)}


def scale_morphism(f: dict, s) -> dict:
    s = Fraction(s) if not isinstance(s, int) else s
    return {k: {b: c * s for b, c in v.items()} for k, v in f.items()}


def add_morphisms(*fs) -> dict:
    out = {}
    for f in fs:
        for key, v in f.items():
            mat_add_into(out, key, v)
    return out


def module_to_json(m: DgModule):
    alg = m.algebra
    entries = []
    for (a, b) in sorted(m.diff):
        for e in sorted(m.diff[(a, b)]):
            c = m.diff[(a, b)][e]
            entries.append([a, b, c if isinstance(c, int) else str(c), e])
    return {
        "summands": [{"class": alg.datum.class_label(z), "shift": n, "label": lab}
                     for (z, n), lab in zip(m.summands, m.summand_labels())],
        "entries": entries,
        "basis": {str(e): alg.label(e) for e in sorted({x[3] for x in entries})},
        "block_order": "signed indices (i, j, kappa) lexicographic, '+' before '-'",
    }
