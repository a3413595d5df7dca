"""Representations of the bush attached to words and arcs.

A representation is a list of objects of the additive category of the bush
(segment classes on the minus side, signed edge classes on the plus side),
each contributing one basis vector per letter it contains, and a linear map
``f`` from the minus vectors to the plus vectors that respects rods.

Vectors living in rods at the marked edges ``(i, 0)`` carry no data and are
not stored.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .arcs import TaggedArc, build_model
from .errors import IncompatibleLocalSystem, InputError
from .linalg import QQ_FIELD, Field, rank
from .words import Bush, Plus, Seg, Word, classify_word, symmetric_centres


@dataclass
class RepObject:
    sign: str          # '-' for a segment class, '+' for a signed edge class
    cls: tuple         # class key
    letters: tuple     # letters of the class that carry vectors


@dataclass
class BushRep:
    objects: list = field(default_factory=list)
    minus: list = field(default_factory=list)     # (object index, letter)
    plus: list = field(default_factory=list)
    f: dict = field(default_factory=dict)         # (plus slot, minus slot) -> coeff

    def slot(self, obj, letter, sign):
        table = self.minus if sign == '-' else self.plus
        return table.index((obj, letter))

    def matrix(self):
        rows = {}
        for (p, m), c in self.f.items():
            if c:
                rows.setdefault(p, {})[m] = c
        return rows

    def rods(self):
        """Rod indices ``(i, j, r)`` met by vectors of either side."""
        return sorted({x.rod for _, x in self.minus} | {x.rod for _, x in self.plus})

    def object_multiset(self):
        out = {}
        for o in self.objects:
            out[(o.sign, o.cls)] = out.get((o.sign, o.cls), 0) + 1
        return out


def letter_class(bush: Bush, x):
    if isinstance(x, Plus) and x.kappa:
        return x.key()
    return min(x.key(), bush.star(x).key())


class _Builder:
    def __init__(self, bush: Bush):
        self.bush = bush
        self.rep = BushRep()
        self.where = {}

    def obj(self, tag, letters, sign):
        """Add an object holding ``letters``; ``tag`` names it for later lookups."""
        rep = self.rep
        idx = len(rep.objects)
        rep.objects.append(RepObject(sign, letter_class(self.bush, letters[0]), tuple(letters)))
        table = rep.minus if sign == '-' else rep.plus
        for x in letters:
            if isinstance(x, Seg) and x.j == 0:
                continue
            self.where[(tag, x)] = len(table)
            table.append((idx, x))
        return idx

    def hat(self, tag, x):
        """The object (or pair of objects) generated by the letter ``x``."""
        d = self.bush.datum
        if isinstance(x, Plus) and d.is_fixed(x.i, x.j):
            self.obj(tag, [x], '+')
            self.obj(tag, [self.bush.wedge(x)], '+')
        else:
            letters = [x, self.bush.star(x)]
            self.obj(tag, letters, x.sign)

    def add(self, tag_p, p, tag_m, m, c=1):
        key = (self.where[(tag_p, p)], self.where[(tag_m, m)])
        self.rep.f[key] = self.rep.f.get(key, 0) + c

    def has(self, tag, x):
        return (tag, x) in self.where

    def to_plus(self, tag_m, m, tag_p, p, mate=True, c=1):
        """``m -> p``, plus ``p^wedge`` when ``p`` is a minus-signed fixed letter."""
        if not self.has(tag_m, m):
            return
        self.add(tag_p, p, tag_m, m, c)
        if mate and p.kappa == '-':
            self.add(tag_p, self.bush.wedge(p), tag_m, m, c)


def _path_rep(bush: Bush, letters, start=None, end=None):
    """Representation of a letter sequence with optional one-sided centres.

    ``start``/``end`` are fixed plus letters closing the sequence at a puncture:
    the outer vector of the first (last) segment maps to them alone.
    """
    b = _Builder(bush)
    n = len(letters)
    if start is not None:
        b.obj('s', [start], '+')
    for k, x in enumerate(letters):
        b.hat(k, x)
    if end is not None:
        b.obj('e', [end], '+')
    star = bush.star
    for k, x in enumerate(letters):
        if not isinstance(x, Seg):
            continue
        # forward vector of x
        if k > 0:
            prev = letters[k - 1]
            b.to_plus(k, x, k - 1, star(prev))
        elif start is not None:
            b.to_plus(k, x, 's', start, mate=False)
        # backward vector of x
        if k < n - 1:
            nxt = letters[k + 1]
            b.to_plus(k, star(x), k + 1, nxt)
        elif end is not None:
            b.to_plus(k, star(x), 'e', end, mate=False)
    return b.rep


def companion(coeffs):
    """Companion matrix with last column ``a_d, ..., a_1`` for ``x^d - a_1 x^(d-1) - ... - a_d``."""
    d = len(coeffs)
    M = [[0] * d for _ in range(d)]
    for r in range(1, d):
        M[r][r - 1] = 1
    for r in range(d):
        M[r][d - 1] = coeffs[d - 1 - r]
    return M


def _identity(n):
    return [[1 if a == b else 0 for b in range(n)] for a in range(n)]


def _jordan_zero(n):
    return [[1 if b == a + 1 else 0 for b in range(n)] for a in range(n)]


def _zero(rows, cols):
    return [[0] * cols for _ in range(rows)]


def _hcat(left, right):
    return [list(a) + list(b) for a, b in zip(left, right)]


SPW_FAMILIES = ('1a', '1b', '1c', '1d', '2a', '2b', '2c', '2d', '3')


def spw_family(fid, q, coeffs=None):
    """Blocks ``(A, B, C, D)`` of the band matrix for a symmetric periodic word.

    ``fid`` is one of ``SPW_FAMILIES``; family ``3`` needs the ``q+1``
    coefficients of a companion polynomial.  Blocks are lists of rows; a block
    with zero rows is returned with its column count as ``(0, cols)``.
    """
    if q < 0:
        raise InputError("q must be non-negative")
    I, J = _identity, _jordan_zero
    zq1 = [[0] * q] + I(q)                                 # (q+1) x q: zero row over I_q
    iq0 = _hcat(I(q), _zero(q, 1))                         # q x (q+1): [I_q 0]
    n = q + 1
    table = {
        '1a': (zq1, I(n), I(q), iq0, (n, q, q, n)),
        '1b': (iq0, I(q), I(n), zq1, (q, n, n, q)),
        '1c': (I(n), I(n), I(n), J(n), (n, n, n, n)),
        '1d': (J(n), I(n), I(n), I(n), (n, n, n, n)),
        '2a': (I(n), zq1, iq0, I(q), (n, n, q, q)),
        '2b': (I(q), iq0, zq1, I(n), (q, q, n, n)),
        '2c': (I(n), I(n), J(n), I(n), (n, n, n, n)),
        '2d': (I(n), J(n), I(n), I(n), (n, n, n, n)),
    }
    if fid == '3':
        if coeffs is None or len(coeffs) != n:
            raise IncompatibleLocalSystem(f"family 3 needs {n} companion coefficients")
        return companion(coeffs), I(n), I(n), I(n), (n, n, n, n)
    if fid not in table:
        raise IncompatibleLocalSystem(f"unknown family {fid!r}")
    return table[fid]


def _apw_rep(bush: Bush, w: Word, P):
    """Band representation of an asymmetric periodic word twisted by ``P`` at the seam."""
    letters = w.letters
    if isinstance(letters[0], Seg):
        letters = letters[1:] + letters[:1]
    n, d = len(letters), len(P)
    b = _Builder(bush)
    for k, x in enumerate(letters):
        for c in range(d):
            b.hat((k, c), x)
    star = bush.star
    for k, x in enumerate(letters):
        if not isinstance(x, Seg):
            continue
        prev = letters[k - 1]
        for c in range(d):
            b.to_plus((k, c), x, (k - 1, c), star(prev))
        if k < n - 1:
            nxt = letters[k + 1]
            for c in range(d):
                b.to_plus((k, c), star(x), (k + 1, c), nxt)
        else:
            first = letters[0]
            for c in range(d):
                for r in range(d):
                    if P[r][c]:
                        b.to_plus((k, c), star(x), (0, r), first, c=P[r][c])
    return b.rep


def _spw_rotation(bush: Bush, w: Word):
    """Letters ``w_1 .. w_N`` with the two centres at positions ``N/2`` and ``N``."""
    ca, cb = symmetric_centres(bush, w)
    n = len(w)
    if 2 * (cb - ca) != n:
        raise IncompatibleLocalSystem("centres are not half a period apart")
    return w.letters[ca + 1:] + w.letters[:ca + 1]


def _spw_rep(bush: Bush, w: Word, blocks):
    A, B, C, D, (c, d, c2, d2) = blocks
    letters = _spw_rotation(bush, w)
    n = len(letters)
    h = n // 2
    W = lambda k: letters[k - 1]                           # 1-based access
    b = _Builder(bush)
    star = bush.star
    for k in range(1, h):
        for t in range(d):
            b.hat((k, t), W(k))
    for t in range(d):
        b.obj((h, t), [W(h)], '+')
    for t in range(d2):
        b.obj((h, t), [star(W(h))], '+')
    for k in range(h + 1, n):
        for t in range(d2):
            b.hat((k, t), W(k))
    for t in range(c2):
        b.obj((n, t), [W(n)], '+')
    for t in range(c):
        b.obj((n, t), [star(W(n))], '+')
    dims = {k: (d if k < h else d2) for k in range(1, n)}
    for k in range(1, n):
        x = W(k)
        if not isinstance(x, Seg):
            continue
        # forward vector x = w_k
        if k == 1:
            for t in range(d):
                for r in range(c):
                    if A[r][t]:
                        b.to_plus((1, t), x, (n, r), star(W(n)), mate=False, c=A[r][t])
                for r in range(c2):
                    if C[r][t]:
                        b.to_plus((1, t), x, (n, r), W(n), mate=False, c=C[r][t])
        elif k == h + 1:
            for t in range(d2):
                b.to_plus((k, t), x, (h, t), star(W(h)), mate=False)
        else:
            for t in range(dims[k]):
                b.to_plus((k, t), x, (k - 1, t), star(W(k - 1)))
        # backward vector w_k^*
        if k == h - 1:
            for t in range(d):
                b.to_plus((k, t), star(x), (h, t), W(h), mate=False)
        elif k == n - 1:
            for t in range(d2):
                for r in range(c):
                    if B[r][t]:
                        b.to_plus((k, t), star(x), (n, r), star(W(n)), mate=False, c=B[r][t])
                for r in range(c2):
                    if D[r][t]:
                        b.to_plus((k, t), star(x), (n, r), W(n), mate=False, c=D[r][t])
        else:
            for t in range(dims[k]):
                b.to_plus((k, t), star(x), (k + 1, t), W(k + 1))
    return b.rep


def build_R(bush: Bush, w: Word, local=None) -> BushRep:
    """Representation attached to a word and a local system.

    ``local`` is ``None`` for finite words (the plain representation), ``'+'``
    or ``'-'`` for one half of a symmetric finite word, a square matrix (or
    ``('companion', coeffs)``) for an asymmetric periodic word, a pair of
    signs for a rank-one symmetric periodic word, or ``(family, q[, coeffs])``
    for a general symmetric periodic word.
    """
    kind = classify_word(bush, w)
    if not w.periodic:
        if local is None:
            return _path_rep(bush, w.letters)
        if kind != 'SFW' or local not in ('+', '-'):
            raise IncompatibleLocalSystem(f"local system {local!r} does not fit a {kind} word")
        half = (len(w) - 1) // 2
        centre = w.letters[half]
        return _path_rep(bush, w.letters[:half], None, Plus(centre.i, centre.j, local, centre.r))
    if kind == 'APW':
        if isinstance(local, tuple) and local and local[0] == 'companion':
            local = companion(local[1])
        if not (isinstance(local, list) and local and all(len(r) == len(local) for r in local)):
            raise IncompatibleLocalSystem("an asymmetric periodic word needs a square matrix")
        return _apw_rep(bush, w, local)
    if isinstance(local, tuple) and len(local) == 2 and all(s in ('+', '-') for s in local):
        ca, cb = symmetric_centres(bush, w)
        x, y = w.letters[ca], w.letters[cb]
        return _path_rep(bush, w.letters[ca + 1:cb], Plus(x.i, x.j, local[0], x.r),
                         Plus(y.i, y.j, local[1], y.r))
    if isinstance(local, tuple) and local and local[0] in SPW_FAMILIES:
        return _spw_rep(bush, w, spw_family(*local))
    raise IncompatibleLocalSystem(f"local system {local!r} does not fit a symmetric periodic word")


def rep_of_arc(bush: Bush, arc: TaggedArc) -> BushRep:
    """Representation of a tagged arc read off its crossings and segments.

    One plus object per crossing class (a signed singleton at binary and
    punctured crossings), one minus object per unpunctured segment.  The
    vector of a segment at a crossing maps to the signed edge it meets there,
    and also to the partner sign when it meets a binary pair from its minus
    side.
    """
    model = build_model(bush, arc)
    b = _Builder(bush)
    labels = {}
    for c in model.crossings:
        # the plus letter of c seen from each adjacent polygon
        for key, (si, pos) in c.sides.items():
            seg = model.segments[si]
            if seg.kind != 'U':
                continue
            labels[(c.index, si)] = Plus(seg.i, seg.ends[pos][1], c.sign if c.kind != 'plain' else '', c.n)
    for c in model.crossings:
        lets = sorted({labels[k] for k in labels if k[0] == c.index}, key=Plus.key)
        if c.kind == 'plain':
            pair = [lets[0], bush.star(lets[0])]
            b.obj(('c', c.index), pair, '+')
        else:
            b.obj(('c', c.index), [lets[0]], '+')
    for seg in model.segments:
        if seg.kind != 'U':
            continue
        x = seg.letter
        b.obj(('s', seg.index), [x, bush.star(x)], '-')
    for seg in model.segments:
        if seg.kind != 'U':
            continue
        for pos, vec in ((0, seg.letter), (1, bush.star(seg.letter))):
            ci = seg.ends[pos][0]
            if ci is None:
                continue
            c = model.crossings[ci]
            p = labels[(ci, seg.index)]
            b.add(('c', ci), p, ('s', seg.index), vec)
            if c.kind == 'int' and c.sign == '-':
                mate = model.crossings[c.partner]
                b.add(('c', mate.index), Plus(p.i, p.j, mate.sign, p.r), ('s', seg.index), vec)
    return b.rep


def is_bijective(rep: BushRep, field: Field = QQ_FIELD) -> bool:
    n = len(rep.minus)
    if n != len(rep.plus):
        return False
    return n == 0 or rank(rep.matrix(), (n, n), field) == n


def direct_sum_reps(*reps: BushRep) -> BushRep:
    out = BushRep()
    for r in reps:
        oo, mo, po = len(out.objects), len(out.minus), len(out.plus)
        out.objects.extend(r.objects)
        out.minus.extend((o + oo, x) for o, x in r.minus)
        out.plus.extend((o + oo, x) for o, x in r.plus)
        for (p, m), c in r.f.items():
            out.f[(p + po, m + mo)] = c
    return out


def _generators(bush: Bush, r1: BushRep, r2: BushRep, sign):
    """Basis of morphisms between the objects of one sign, as maps of vectors."""
    src = r1.minus if sign == '-' else r1.plus
    tgt = r2.minus if sign == '-' else r2.plus
    by_obj1, by_obj2 = {}, {}
    for k, (o, x) in enumerate(src):
        by_obj1.setdefault(o, []).append((k, x))
    for k, (o, x) in enumerate(tgt):
        by_obj2.setdefault(o, []).append((k, x))
    gens = []
    for a, A in enumerate(r1.objects):
        if A.sign != sign or a not in by_obj1:
            continue
        for b2, B in enumerate(r2.objects):
            if B.sign != sign or b2 not in by_obj2:
                continue
            if A.cls == B.cls:
                pos2 = {x: k for k, x in by_obj2[b2]}
                gens.append([(pos2[x], k) for k, x in by_obj1[a] if x in pos2])
            if sign == '-':
                for k1, s1 in by_obj1[a]:
                    for k2, s2 in by_obj2[b2]:
                        if s1.rod == s2.rod and bush.rod_less(s1, s2):
                            gens.append([(k2, k1)])
    return [g for g in gens if g]


def hom_rep_dim(bush: Bush, r1: BushRep, r2: BushRep, field: Field = QQ_FIELD) -> int:
    """Dimension of the space of morphisms ``r1 -> r2`` of representations."""
    gm = _generators(bush, r1, r2, '-')
    gp = _generators(bush, r1, r2, '+')
    f1 = {}
    for (p, m), c in r1.f.items():
        f1.setdefault(m, []).append((p, c))
    f2 = {}
    for (p, m), c in r2.f.items():
        f2.setdefault(m, []).append((p, c))
    # equation rows indexed by (plus slot of r2, minus slot of r1)
    rows = {}
    index = {}

    def put(p2, m1, col, c):
        key = (p2, m1)
        if key not in index:
            index[key] = len(index)
        row = rows.setdefault(index[key], {})
        row[col] = row.get(col, 0) + c

    for col, g in enumerate(gm):
        # f2 . alpha_minus
        for m2, m1 in g:
            for p2, c in f2.get(m2, ()):
                put(p2, m1, col, c)
    off = len(gm)
    for col, g in enumerate(gp):
        # - alpha_plus . f1
        image = dict((p1, p2) for p2, p1 in g)
        for m1, targets in f1.items():
            for p1, c in targets:
                if p1 in image:
                    put(image[p1], m1, off + col, -c)
    ncols = len(gm) + len(gp)
    if ncols == 0:
        return 0
    return ncols - rank(rows, (max(len(index), 1), ncols), field)
