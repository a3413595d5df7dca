"""Bi-quivers of arc pairs, lines, extensions and intersection numbers.

Vertices of the bi-quiver of ``(sigma, tau)`` are pairs ``(u, v)`` of
crossings of the two arcs with the same arc of the dissection and the same
grading.  Each vertex has two *sides*, one on either side of that arc.  On a
side the two arcs either continue together (a solid arrow to the next common
crossing, or a loop when both end at the same puncture), end together at the
marked point of the polygon, or split.

Dashed arrows describe how the two arcs interact inside a punctured monogon:
``twin+``/``twin-`` when both loop around the puncture, ``ominus`` when only
``tau`` loops around it while ``sigma`` ends there, ``oplus`` for the converse.

Lines are the connected components of the solid arrows.  The number of
oriented intersections of index ``rho`` is computed as

    #tagged real h-lines of (sigma, tau[rho])
    + #interior crossings and marked-point contacts of index 0
    + #components of the bi-quiver of (sigma, tau[rho-1]) holding a tagged r-line.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .algebra import Algebra, block_morphism, mat_add_into, marker_matrix
from .arcs import ArcModel, TaggedArc, arc_from_path, arc_path, build_model, shift_arc
from .dg import HomComplex, build_arc_module
from .errors import CaseMismatch, InputError
from .linalg import QQ_FIELD, Field
from .words import Bush, Seg

RANK = {'int+': 2, 'PN': 1, 'int-': 0}


@dataclass
class Side:
    key: tuple                 # ('U', i, j) or ('P', i, j)
    mu: tuple                  # (segment index, end position) in sigma
    nu: tuple                  # (segment index, end position) in tau
    kind: str                  # 'split', 'q1', 'M' or 'loop'
    right: bool = False        # sigma's segment lies to the right of tau's
    far: tuple | None = None   # vertex reached along a solid arrow
    far_key: tuple | None = None
    zero_side: bool = False


@dataclass(frozen=True)
class DashedArrow:
    start: tuple
    end: tuple
    kind: str                  # 'twin+', 'twin-', 'ominus', 'oplus'
    monogon: tuple
    twin_end: tuple | None = None


@dataclass
class Line:
    vertices: list
    loops: list
    type: str
    real_h: bool = False
    tagged_h: bool = False
    r_line: bool = False
    tagged_r: bool = False
    zero_points: list = field(default_factory=list)
    outlets: list = field(default_factory=list)


@dataclass
class Extension:
    outlet: tuple
    side_key: tuple
    vertices: list             # (u_1, v_1) .. (u_s, v_s)
    arrows: list               # kinds of alpha_1 .. alpha_s ('q1' or dashed kind)
    coeffs: list               # c_0 .. c_{s+1}
    terminal: tuple            # (vertex, side key) of the terminal unpunctured side


class BiQuiver:
    def __init__(self, bush: Bush, sigma: TaggedArc, tau: TaggedArc,
                 ms: ArcModel | None = None, mt: ArcModel | None = None):
        self.bush = bush
        self.datum = d = bush.datum
        self.sigma, self.tau = sigma, tau
        self.ms = ms or build_model(bush, sigma)
        self.mt = mt or build_model(bush, tau)
        cs, ct = self.ms.crossings, self.mt.crossings
        by_key = {}
        for v in ct:
            by_key.setdefault((v.khat, v.n), []).append(v.index)
        self.vertices = []
        for u in cs:
            for v in by_key.get((u.khat, u.n), ()):
                self.vertices.append((u.index, v))
        self.vertex_set = set(self.vertices)
        self.sides = {x: self._sides(x) for x in self.vertices}
        self.arrows = self._dashed()
        self.arrows_from = {}
        self.arrows_to = {}
        for a in self.arrows:
            self.arrows_from.setdefault(a.start, []).append(a)
            self.arrows_to.setdefault(a.end, []).append(a)
        del d

    # -- construction --------------------------------------------------------
    def _punct_kind(self, c):
        if c.kind == 'end':
            return 'PN'
        return 'int+' if c.sign == '+' else 'int-'

    def _sides(self, x):
        u, v = x
        cu, cv = self.ms.crossings[u], self.mt.crossings[v]
        out = []
        for key in sorted(cu.sides):
            mu, nu = cu.sides[key], cv.sides[key]
            if key[0] == 'U':
                _, i, j = key
                smu, snu = self.ms.segments[mu[0]], self.mt.segments[nu[0]]
                fu, ju = smu.ends[1 - mu[1]]
                fv, jv = snu.ends[1 - nu[1]]
                if ju == jv:
                    if ju == 0:
                        out.append(Side(key, mu, nu, 'M'))
                    else:
                        far = (fu, fv)
                        assert far in self.vertex_set, (x, key, far)
                        out.append(Side(key, mu, nu, 'q1', far=far, far_key=('U', i, ju)))
                else:
                    size = self.datum.m(i) + 1
                    right = (ju - j) % size < (jv - j) % size
                    out.append(Side(key, mu, nu, 'split', right=right, zero_side=right))
            else:
                ku, kv = self._punct_kind(cu), self._punct_kind(cv)
                if ku == kv == 'PN':
                    out.append(Side(key, mu, nu, 'loop'))
                elif ku == kv:
                    far = (cu.partner, cv.partner)
                    assert far in self.vertex_set
                    out.append(Side(key, mu, nu, 'q1', far=far, far_key=key))
                else:
                    right = RANK[ku] > RANK[kv]
                    zero = right and 'PN' not in (ku, kv)
                    out.append(Side(key, mu, nu, 'split', right=right, zero_side=zero))
        return out

    def _punctured(self, model):
        """Per monogon: list of ('PI', plus crossing, minus crossing) or ('PN', end crossing)."""
        out = {}
        for s in model.segments:
            if s.kind == 'PI':
                c1, c2 = (model.crossings[s.ends[0][0]], model.crossings[s.ends[1][0]])
                plus, minus = (c1, c2) if c1.sign == '+' else (c2, c1)
                out.setdefault((s.i, s.ends[0][1]), []).append(('PI', plus.index, minus.index))
            elif s.kind == 'PN':
                c, j = next(e for e in s.ends if e[0] is not None)
                out.setdefault((s.i, j), []).append(('PN', c))
        return out

    def _dashed(self):
        ps, pt = self._punctured(self.ms), self._punctured(self.mt)
        arrows = []
        V = self.vertex_set
        for mono in sorted(set(ps) & set(pt)):
            for a in ps[mono]:
                for b in pt[mono]:
                    if a[0] == 'PI' and b[0] == 'PI':
                        start = (a[2], b[1])
                        plus_end, minus_end = (a[1], b[1]), (a[2], b[2])
                        if start in V:
                            arrows.append(DashedArrow(start, plus_end, 'twin+', mono, minus_end))
                            arrows.append(DashedArrow(start, minus_end, 'twin-', mono, plus_end))
                    elif a[0] == 'PN' and b[0] == 'PI':
                        start, end = (a[1], b[1]), (a[1], b[2])
                        if start in V:
                            arrows.append(DashedArrow(start, end, 'ominus', mono))
                    elif a[0] == 'PI' and b[0] == 'PN':
                        start, end = (a[2], b[1]), (a[1], b[1])
                        if start in V:
                            arrows.append(DashedArrow(start, end, 'oplus', mono))
        return arrows

    # -- lines ---------------------------------------------------------------
    def solid_edges(self):
        edges = set()
        for x in self.vertices:
            for s in self.sides[x]:
                if s.kind == 'q1':
                    edges.add(tuple(sorted((x, s.far))))
        return sorted(edges)

    def lines(self):
        parent = {x: x for x in self.vertices}

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for a, b in self.solid_edges():
            parent[find(a)] = find(b)
        groups = {}
        for x in self.vertices:
            groups.setdefault(find(x), []).append(x)
        out = []
        for verts in sorted(groups.values()):
            out.append(self._classify(sorted(verts)))
        return out

    def _classify(self, verts):
        cs, ct = self.ms.crossings, self.mt.crossings
        loops = [(x, s) for x in verts for s in self.sides[x] if s.kind == 'loop']
        line = Line(verts, loops, {0: 'A', 1: 'D', 2: 'Dt'}[len(loops)])
        splitting = [(x, s) for x in verts for s in self.sides[x] if s.kind == 'split']
        line.outlets = sorted({x for x, _ in splitting})
        line.zero_points = sorted({x for x, s in splitting if s.zero_side})
        line.real_h = not any(s.right for _, s in splitting)
        same_tags = all(cs[x[0]].sign == ct[x[1]].sign for x, _ in loops)
        line.tagged_h = line.real_h and same_tags
        line.r_line = all(s.right for _, s in splitting)
        ending = [(x, s) for x in verts for s in self.sides[x] if s.kind in ('M', 'loop')]
        line.tagged_r = line.r_line and all(
            s.kind == 'loop' and cs[x[0]].sign != ct[x[1]].sign for x, s in ending)
        return line

    def components(self):
        """Connected components of solid and dashed arrows together."""
        parent = {x: x for x in self.vertices}

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for a, b in self.solid_edges():
            parent[find(a)] = find(b)
        for arr in self.arrows:
            parent[find(arr.start)] = find(arr.end)
        groups = {}
        for x in self.vertices:
            groups.setdefault(find(x), []).append(x)
        return [sorted(g) for g in sorted(groups.values())]

    def h_lines(self):
        """Lines whose component under solid and ominus/oplus arrows has no 0-point."""
        parent = {x: x for x in self.vertices}

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for a, b in self.solid_edges():
            parent[find(a)] = find(b)
        for arr in self.arrows:
            if arr.kind in ('ominus', 'oplus'):
                parent[find(arr.start)] = find(arr.end)
        bad = {find(x) for L in self.lines() for x in L.zero_points}
        return [L for L in self.lines() if find(L.vertices[0]) not in bad]

    def line_order_edges(self):
        """Pairs of line indices (a, b) with a dashed arrow from line a into line b."""
        lines = self.lines()
        where = {x: k for k, L in enumerate(lines) for x in L.vertices}
        return sorted({(where[a.start], where[a.end]) for a in self.arrows})

    # -- morphism pieces -------------------------------------------------------
    def side(self, x, key):
        return next(s for s in self.sides[x] if s.key == key)

    def _block_rows(self, model, c):
        return [model.crossings[k].summand for k in model.blocks[c.block]]

    def identity_piece(self, alg: Algebra, x):
        """``f_in(xi_v) . iota . f_out(xi_u)`` at the vertex ``x = (u, v)``."""
        u, v = x
        cu, cv = self.ms.crossings[u], self.mt.crossings[v]
        rows = self._block_rows(self.mt, cv)
        cols = self._block_rows(self.ms, cu)
        rlab = [self.mt.crossings[self.mt.summand_crossing[r]].label for r in rows]
        clab = [self.ms.crossings[self.ms.summand_crossing[c]].label for c in cols]
        fin = marker_matrix('in', cv.sign if cv.kind == 'int' else None, len(rows))
        fout = marker_matrix('out', cu.sign if cu.kind == 'int' else None, len(cols))
        d = self.datum
        out = {}
        for a in range(len(rows)):
            for b in range(len(cols)):
                coeff = 0
                for a2 in range(len(rows)):
                    for b2 in range(len(cols)):
                        if d.class_of[rlab[a2]] == d.class_of[clab[b2]]:
                            coeff += fin[a][a2] * fout[b2][b]
                if coeff:
                    z = d.class_of[rlab[a]]
                    out[(rows[a], cols[b])] = {alg.e(z): coeff}
        return out

    def radical_piece(self, alg: Algebra, v, nu, u, mu):
        """``f_in(xi_v) . f_{y_v, y_u} . f_out(xi_u)`` for crossings at segment ends.

        ``nu``/``mu`` are ``(segment index, end position)`` of tau/sigma at the
        crossings ``v``/``u``.  Returns ``{}`` when the edge order forbids it.
        """
        d = self.datum
        cv, cu = self.mt.crossings[v], self.ms.crossings[u]
        sv, su = self.mt.segments[nu[0]], self.ms.segments[mu[0]]
        jv, ju = sv.ends[nu[1]][1], su.ends[mu[1]][1]
        if jv == 0 or ju == 0 or jv >= ju:
            return {}
        yv = self.mt.block_label(d, cv, sv, nu[1])
        yu = self.ms.block_label(d, cu, su, mu[1])
        M = block_morphism(alg, yv, yu, cv.sign if cv.kind == 'int' else None,
                           cu.sign if cu.kind == 'int' else None)
        rows, cols = self._block_rows(self.mt, cv), self._block_rows(self.ms, cu)
        out = {}
        for a, row in enumerate(M):
            for b, val in enumerate(row):
                if val:
                    out[(rows[a], cols[b])] = dict(val)
        return out

    def piece_degree(self, v, nu, u, mu):
        d = self.datum
        sv, su = self.mt.segments[nu[0]], self.ms.segments[mu[0]]
        jv, ju = sv.ends[nu[1]][1], su.ends[mu[1]][1]
        return d.chi(sv.i, jv, ju) + self.ms.crossings[u].n - self.mt.crossings[v].n

    # -- extensions -------------------------------------------------------------
    def _step_coeff(self, c, arrow: DashedArrow):
        cs, ct = self.ms.crossings, self.mt.crossings
        if arrow.kind == 'twin+':
            return c
        if arrow.kind == 'twin-':
            return -c
        if arrow.kind == 'ominus':
            return 0 if cs[arrow.start[0]].sign == '+' else -c
        return c if ct[arrow.start[1]].sign == '+' else 0

    def extensions(self, line: Line, outlet, side_key):
        """All extensions of ``line`` from ``outlet`` in the given splitting side."""
        first = self.side(outlet, side_key)
        assert first.kind == 'split'
        found = []
        if side_key[0] == 'U':
            found.append(Extension(outlet, side_key, [], [], [1, 1], (outlet, side_key)))
            return found
        L = set(line.vertices)

        def walk(path, kinds, coeffs, used, arrived):
            cur = path[-1]
            other = next(s for s in self.sides[cur] if s.key != arrived)
            if other.kind == 'split' and other.key[0] == 'U':
                found.append(Extension(outlet, side_key, path[1:], kinds, coeffs + [coeffs[-1]],
                                       (cur, other.key)))
                return
            if other.kind == 'q1':
                nxt = other.far
                if nxt in path or nxt in L:
                    return
                walk(path + [nxt], kinds + ['q1'], coeffs + [coeffs[-1]], used, other.far_key)
                return
            if other.kind == 'split':
                for arr in self.arrows_from.get(cur, ()):
                    step(path, kinds, coeffs, used, arr)

        def step(path, kinds, coeffs, used, arr):
            if arr.end in path or arr.end in L:
                return
            walk(path + [arr.end], kinds + [arr.kind], coeffs + [self._step_coeff(coeffs[-1], arr)],
                 used + [arr], ('P',) + arr.monogon)

        for arr in self.arrows_from.get(outlet, ()):
            step([outlet], [], [1], [], arr)
        return [e for e in found if self._valid_extension(e)]

    def _valid_extension(self, e: Extension):
        verts = [e.outlet] + e.vertices
        vs = set(verts)
        if len(vs) != len(verts):
            return False
        links = {frozenset(p) for p in zip(verts, verts[1:])}
        for a, b in self.solid_edges():
            if a in vs and b in vs and frozenset((a, b)) not in links:
                return False
        for arr in self.arrows:
            if arr.start in vs and arr.end in vs and frozenset((arr.start, arr.end)) not in links:
                return False
            if arr.kind.startswith('twin') and arr.start in vs and arr.end in vs:
                if arr.twin_end in vs:
                    return False
        for x in e.vertices:
            if any(s.kind == 'loop' for s in self.sides[x]):
                return False
        return True

    def default_extension_set(self, line: Line):
        """One extension per splitting side of each outlet (first in search order)."""
        out = []
        for x in line.outlets:
            for s in self.sides[x]:
                if s.kind == 'split':
                    exts = self.extensions(line, x, s.key)
                    if not exts:
                        raise CaseMismatch(f"no extension from {x} in side {s.key}")
                    out.append(exts[0])
        return out

    def build_fL(self, alg: Algebra, line: Line, exts=None):
        """Degree-0 morphism attached to a tagged real h-line and a choice of extensions."""
        if exts is None:
            exts = self.default_extension_set(line)
        f = {}
        for x in line.vertices:
            for key, val in self.identity_piece(alg, x).items():
                mat_add_into(f, key, val)
        for e in exts:
            for x, c in zip(e.vertices, e.coeffs[1:]):
                if c:
                    for key, val in self.identity_piece(alg, x).items():
                        mat_add_into(f, key, val, c)
            c = e.coeffs[-1]
            x, key = e.terminal
            s = self.side(x, key)
            smu, snu = self.ms.segments[s.mu[0]], self.mt.segments[s.nu[0]]
            fu = smu.ends[1 - s.mu[1]][0]
            fv = snu.ends[1 - s.nu[1]][0]
            if c and fu is not None and fv is not None:
                piece = self.radical_piece(alg, fv, (s.nu[0], 1 - s.nu[1]), fu, (s.mu[0], 1 - s.mu[1]))
                for k, val in piece.items():
                    mat_add_into(f, k, val, c)
        return f

    # -- radical morphisms between segments ---------------------------------------
    def segment_pairs(self):
        """Unpunctured segment pairs ``(mu, nu)`` of sigma and tau in a common polygon."""
        for a in self.ms.segments:
            if a.kind != 'U':
                continue
            for b in self.mt.segments:
                if b.kind == 'U' and b.i == a.i:
                    yield a.index, b.index

    def _oriented(self, model, seg):
        """``(low end position, high end position)`` of a segment by edge index."""
        return (0, 1) if seg.ends[0][1] < seg.ends[1][1] else (1, 0)

    def crossing_case(self, mu, nu):
        """Classify an interior crossing of segments: 'a', 'b', 'c' or ``None``."""
        smu, snu = self.ms.segments[mu], self.mt.segments[nu]
        j1, j2 = sorted(e[1] for e in smu.ends)
        j3, j4 = sorted(e[1] for e in snu.ends)
        if len({j1, j2, j3, j4}) < 4:
            return None
        if j1 < j3 < j2 < j4:
            return 'a'
        if j3 < j1 < j4 < j2:
            return 'b' if j3 == 0 else 'c'
        return None

    def psi_terms(self, mu, nu, case=None):
        """Terms ``(v, nu end, u, mu end)`` of the radical morphism attached to a segment pair."""
        smu, snu = self.ms.segments[mu], self.mt.segments[nu]
        lo_u, hi_u = self._oriented(self.ms, smu)
        lo_v, hi_v = self._oriented(self.mt, snu)
        u, u2 = smu.ends[lo_u][0], smu.ends[hi_u][0]
        v, v2 = snu.ends[lo_v][0], snu.ends[hi_v][0]
        if case is None:
            case = self.crossing_case(mu, nu)
        if case == 'a':
            return [(v, (nu, lo_v), u2, (mu, hi_u))]
        if case == 'b':
            return [(v2, (nu, hi_v), u2, (mu, hi_u))]
        if case == 'c':
            return [(v2, (nu, hi_v), u2, (mu, hi_u)), (v, (nu, lo_v), u, (mu, lo_u))]
        if case == 'M':
            if not (smu.ends[lo_u][1] == 0 and snu.ends[lo_v][1] == 0):
                raise CaseMismatch("segments do not start at a common marked point")
            if not snu.ends[hi_v][1] < smu.ends[hi_u][1]:
                raise CaseMismatch("sigma's segment is not to the left at the marked point")
            return [(v2, (nu, hi_v), u2, (mu, hi_u))]
        raise CaseMismatch(f"segments {mu}, {nu} are not in a crossing or marked-point case")

    def crossing_index(self, mu, nu):
        """Index of the interior crossing of two segments, ``None`` if they do not cross."""
        case = self.crossing_case(mu, nu)
        if case is None:
            return None
        degs = {self.piece_degree(*t) for t in self.psi_terms(mu, nu, case)}
        assert len(degs) == 1
        return degs.pop()

    def marked_point_pairs(self):
        """Pairs leaving the marked point of one polygon with sigma's segment to the left."""
        for mu, nu in self.segment_pairs():
            smu, snu = self.ms.segments[mu], self.mt.segments[nu]
            if 0 in (smu.ends[0][1], smu.ends[1][1]) and 0 in (snu.ends[0][1], snu.ends[1][1]):
                ju = max(e[1] for e in smu.ends)
                jv = max(e[1] for e in snu.ends)
                if jv < ju:
                    yield mu, nu

    def as_zero(self):
        """Index-0 interior crossings and index-0 marked-point contacts."""
        cross, marked = [], []
        for mu, nu in self.segment_pairs():
            if self.crossing_index(mu, nu) == 0:
                cross.append((mu, nu))
        for mu, nu in self.marked_point_pairs():
            t = self.psi_terms(mu, nu, 'M')[0]
            if self.piece_degree(*t) == 0:
                marked.append((mu, nu))
        return cross, marked

    def build_psi(self, alg: Algebra, mu, nu, case=None):
        """Radical morphism of a segment pair; ``case`` is 'a', 'b', 'c', 'M' or 'shared'."""
        if case == 'shared':
            return self._psi_shared(alg, mu, nu)
        f = {}
        for t in self.psi_terms(mu, nu, case):
            for k, val in self.radical_piece(alg, *t).items():
                mat_add_into(f, k, val)
        return f

    def _psi_shared(self, alg, mu, nu):
        """Segments leaving one interior edge; gradings may differ (the pair comes from a shift)."""
        smu, snu = self.ms.segments[mu], self.mt.segments[nu]
        shared = None
        for pu in (0, 1):
            for pv in (0, 1):
                cu, ju = smu.ends[pu]
                cv, jv = snu.ends[pv]
                if cu is not None and cv is not None and ju == jv and ju != 0:
                    if self.ms.crossings[cu].khat == self.mt.crossings[cv].khat:
                        shared = (pu, pv)
        if shared is None:
            raise CaseMismatch("segments do not leave a common vertex")
        pu, pv = shared
        u, u2 = smu.ends[pu][0], smu.ends[1 - pu][0]
        v, v2 = snu.ends[pv][0], snu.ends[1 - pv][0]
        f = {}
        terms = []
        if v2 is not None:
            terms.append((v2, (nu, 1 - pv), u, (mu, pu)))
        if u2 is not None:
            terms.append((v, (nu, pv), u2, (mu, 1 - pu)))
        for t in terms:
            for k, val in self.radical_piece(alg, *t).items():
                mat_add_into(f, k, val)
        return f


def build_biquiver(bush: Bush, a: TaggedArc, b: TaggedArc) -> BiQuiver:
    return BiQuiver(bush, a, b)


def find_lines(q: BiQuiver):
    return q.lines()


@dataclass
class CountParts:
    hlines: int
    w2: int
    w1: int

    @property
    def total(self):
        return self.hlines + self.w2 + self.w1


def count_parts(bush: Bush, a: TaggedArc, b: TaggedArc) -> CountParts:
    q = BiQuiver(bush, a, b)
    hl = sum(1 for L in q.lines() if L.tagged_h)
    cross, marked = q.as_zero()
    q1 = BiQuiver(bush, a, shift_arc(b, -1))
    lines = q1.lines()
    tagged_r = [L for L in lines if L.tagged_r]
    comps = q1.components()
    where = {x: k for k, comp in enumerate(comps) for x in comp}
    w1 = len({where[L.vertices[0]] for L in tagged_r})
    return CountParts(hl, len(cross) + len(marked), w1)


def int_number(bush: Bush, a: TaggedArc, b: TaggedArc, rho: int) -> int:
    return count_parts(bush, a, shift_arc(b, rho)).total


def morphism_basis(bush: Bush, alg: Algebra, a: TaggedArc, b: TaggedArc):
    """Degree-0 cocycles ``X_a -> X_b`` indexed by the three parts of the count.

    Returns a list of ``(label, matrix)``: one ``f`` per tagged real h-line,
    one radical morphism per index-0 crossing or marked-point contact, and one
    radical morphism per component of the bi-quiver of ``(a, b[-1])`` holding a
    tagged r-line.
    """
    q = BiQuiver(bush, a, b)
    out = []
    for k, L in enumerate(q.lines()):
        if L.tagged_h:
            out.append((('h', k), q.build_fL(alg, L)))
    cross, marked = q.as_zero()
    for mu, nu in cross:
        out.append((('x', mu, nu), q.build_psi(alg, mu, nu)))
    for mu, nu in marked:
        out.append((('M', mu, nu), q.build_psi(alg, mu, nu, 'M')))
    q1 = BiQuiver(bush, a, shift_arc(b, -1), q.ms, None)
    comps = q1.components()
    where = {x: k for k, comp in enumerate(comps) for x in comp}
    seen = set()
    for L in q1.lines():
        if not L.tagged_r:
            continue
        k = where[L.vertices[0]]
        if k in seen:
            continue
        seen.add(k)
        # an unpunctured side of the r-line itself; left-splitting sides give coboundaries
        for x in L.vertices:
            side = next((s for s in q1.sides[x] if s.key[0] == 'U'
                         and not (s.kind == 'split' and not s.right)), None)
            if side is None:
                continue
            f = q.build_psi(alg, side.mu[0], side.nu[0], 'shared')
            if f:
                out.append((('r', x, side.key), f))
                break
    return out


def verify_theorem(bush: Bush, alg: Algebra, a: TaggedArc, b: TaggedArc, window,
                   field: Field = QQ_FIELD):
    """Compare ``int_number`` with the dimension of the Hom space for each shift.

    Returns one row ``{arcA, arcB, rho, int, homdim, match}`` per ``rho``.
    """
    hc = HomComplex(build_arc_module(bush, alg, a), build_arc_module(bush, alg, b),
                    field)
    rows = []
    for rho in window:
        n = int_number(bush, a, b, rho)
        h = hc.cohomology_dim(rho)
        rows.append({"arcA": a.describe(), "arcB": b.describe(), "rho": rho,
                     "int": n, "homdim": h, "match": n == h})
    return rows


def _oriented_paths(bush: Bush, arc: TaggedArc):
    """Both traversals of an arc as ``(letters, start tag, end tag)``."""
    p = arc_path(bush, arc)
    return [(list(p.letters), p.start_tag, p.end_tag),
            (list(bush.invert_letters(p.letters)), p.end_tag, p.start_tag)]


def _join(bush: Bush, head, tail):
    """Letters of ``head`` followed by ``tail`` glued at a shared marked point.

    Backtracking pairs of segments are cancelled together with the crossing
    between them; at a self-paired edge this removes the loop around the
    puncture.  Returns ``None`` when the glued path is empty or ill-graded.
    """
    P, Q = list(head), list(tail)
    while True:
        a, b = P[-1], Q[0]
        if a.j != b.j2:
            break
        if a.r != b.r2 or len(P) < 3 or len(Q) < 3:
            return None
        P, Q = P[:-2], Q[2:]
    merged = Seg(a.i, a.j, a.r, b.j2, b.r2)
    if merged.j == 0 and merged.j2 == 0:
        return None
    try:
        bush.check_letter(merged)
    except InputError:
        return None
    return P[:-1] + [merged] + Q[1:]


def extension_arcs(bush: Bush, sigma: TaggedArc, tau: TaggedArc):
    """Arcs obtained by gluing ``tau`` then ``sigma`` at a shared marked point.

    ``tau`` is traversed towards the marked point and ``sigma`` away from it.
    When both continue into the same punctured monogon the loop around the
    puncture is removed, which gives the admissible version of the glued
    curve.  Gradings are taken from the two arcs as given.
    """
    out = {}
    for P, st, _ in _oriented_paths(bush, tau):
        last = P[-1]
        if last.j2 != 0:
            continue
        for Q, _, et in _oriented_paths(bush, sigma):
            first = Q[0]
            if first.j != 0 or first.i != last.i:
                continue
            letters = _join(bush, P, Q)
            if letters is None:
                continue
            try:
                arc = arc_from_path(bush, letters, st, et)
            except InputError:
                continue
            out[arc.key()] = arc
    return [out[k] for k in sorted(out)]
