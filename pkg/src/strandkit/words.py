"""Letters, the bush and words.

A *minus letter* ``Seg(i, j, r, j2, r2)`` is an oriented graded segment in
polygon ``i`` leaving edge ``j`` with grading ``r`` and arriving at edge ``j2``
with grading ``r2``.  Gradings at the boundary edge ``0`` are ``None``.  A
*plus letter* ``Plus(i, j, kappa, r)`` is a signed edge index with grading
``r``.  Both kinds live in a rod indexed by ``(i, j, r)``; minus rods are
ordered (left smaller than right), plus rods carry the trivial order.

Words alternate between the two kinds and satisfy ``w_k^* | w_{k+1}``: the
star of each letter shares its rod with the next letter.  Finite words are
arcs or extensible pieces of arcs; periodic words are stored by one period.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from typing import ClassVar

from .datum import SkewGentleDatum
from .errors import (BrokenAdjacency, GradingViolation, IndexOutOfPolygon, InputError,
                     NonMinimalPeriod, RotateOnFinite)

NONE_KEY = -10 ** 9


@dataclass(frozen=True)
class Seg:
    i: int
    j: int
    r: int | None
    j2: int
    r2: int | None
    sign: ClassVar[str] = '-'

    @property
    def rod(self):
        return (self.i, self.j, self.r)

    def shift(self, rho):
        return Seg(self.i, self.j, None if self.r is None else self.r + rho,
                   self.j2, None if self.r2 is None else self.r2 + rho)

    def key(self):
        return (0, self.i, self.j, NONE_KEY if self.r is None else self.r, self.j2,
                NONE_KEY if self.r2 is None else self.r2)

    def token(self):
        a = f"{self.i},{self.j}" + ("" if self.r is None else f"@{self.r}")
        b = f"{self.i},{self.j2}" + ("" if self.r2 is None else f"@{self.r2}")
        return f"m({a}>{b})"


@dataclass(frozen=True)
class Plus:
    i: int
    j: int
    kappa: str
    r: int
    sign: ClassVar[str] = '+'

    @property
    def rod(self):
        return (self.i, self.j, self.r)

    @property
    def pm(self):
        return (self.i, self.j, self.kappa)

    def shift(self, rho):
        return Plus(self.i, self.j, self.kappa, self.r + rho)

    def key(self):
        return (1, self.i, self.j, self.kappa, self.r)

    def token(self):
        return f"p({self.i},{self.j}{self.kappa}@{self.r})"


@dataclass(frozen=True)
class Word:
    letters: tuple
    periodic: bool = False

    def __len__(self):
        return len(self.letters)

    def key(self):
        return (self.periodic, tuple(x.key() for x in self.letters))

    def tokens(self):
        return " ".join(x.token() for x in self.letters)

    def plus_letters(self):
        return [x for x in self.letters if isinstance(x, Plus)]


class Bush:
    """Rod structure and the operations star, wedge and rod order over a datum."""

    def __init__(self, datum: SkewGentleDatum):
        self.datum = datum

    # -- letters ---------------------------------------------------------
    def segment(self, i, j, r, j2):
        """Segment from edge ``j`` (grading ``r``) to ``j2``; the far grading is derived."""
        d = self.datum
        d.check_edge(i, j)
        d.check_edge(i, j2)
        if j == j2:
            raise InputError("a segment joins two different edges")
        if j == 0:
            raise InputError("segments leaving the boundary are built by boundary_segment")
        if j2 == 0:
            return Seg(i, j, r, 0, None)
        return Seg(i, j, r, j2, r - d.chi(i, j, j2) + (1 if j2 > j else -1))

    def boundary_segment(self, i, j2, r2):
        """Segment leaving the boundary edge ``(i, 0)`` towards ``(i, j2)``."""
        self.datum.check_edge(i, j2, allow_boundary=False)
        return Seg(i, 0, None, j2, r2)

    def check_letter(self, x):
        d = self.datum
        if isinstance(x, Plus):
            d.check_edge(x.i, x.j, allow_boundary=False)
            want = ('+', '-') if d.is_fixed(x.i, x.j) else ('',)
            if x.kappa not in want:
                raise InputError(f"sign {x.kappa!r} not allowed at edge ({x.i},{x.j})")
            return
        d.check_edge(x.i, x.j)
        d.check_edge(x.i, x.j2)
        if x.j == x.j2:
            raise InputError("a segment joins two different edges")
        if (x.r is None) != (x.j == 0) or (x.r2 is None) != (x.j2 == 0):
            raise InputError("exactly the boundary ends of a segment carry no grading")
        ok, msg = segment_grading_check(d, x)
        if not ok:
            raise GradingViolation(msg)

    def star(self, x):
        if isinstance(x, Seg):
            return Seg(x.i, x.j2, x.r2, x.j, x.r)
        if x.kappa:
            return Plus(x.i, x.j, '-' if x.kappa == '+' else '+', x.r)
        i2, j2 = self.datum.partner[(x.i, x.j)]
        return Plus(i2, j2, '', x.r)

    @staticmethod
    def wedge(x):
        if isinstance(x, Plus) and x.kappa:
            return Plus(x.i, x.j, '-' if x.kappa == '+' else '+', x.r)
        return x

    @staticmethod
    def equiv(a, b):
        """Equality up to the sign flip at fixed edges."""
        if isinstance(a, Plus) and isinstance(b, Plus):
            return a.rod == b.rod
        return a == b

    @staticmethod
    def rod_less(a: Seg, b: Seg):
        """Order inside a minus rod: left is smaller."""
        j, j1, j2 = a.j, a.j2, b.j2
        return j2 < j1 < j or j < j2 < j1 or j1 < j < j2

    def rod_letters(self, i, j, r, sign):
        """All letters of the rod ``((i, j), r)`` with the given sign, in rod order."""
        d = self.datum
        d.check_edge(i, j)
        if sign == '+':
            if j == 0:
                return []
            return [Plus(i, j, k, r) for (_, _, k) in d.pm_of(i, j)]
        segs = []
        for j2 in range(0, d.m(i) + 1):
            if j2 == j:
                continue
            if j == 0:
                segs.append(Seg(i, 0, None, j2, r))
            else:
                segs.append(self.segment(i, j, r, j2))
        ordered = []
        for s in segs:
            pos = sum(1 for t in segs if t is not s and self.rod_less(t, s))
            ordered.append((pos, s))
        return [s for _, s in sorted(ordered, key=lambda p: p[0])]

    # -- sequences ---------------------------------------------------------
    def compare_seq(self, v, w):
        """Compare two letter sequences starting in one rod.

        Returns -1, 0, 1, or ``None`` when the heads lie in different rods.
        """
        n = min(len(v), len(w))
        for k in range(n):
            a, b = v[k], w[k]
            if self.equiv(a, b):
                continue
            if isinstance(a, Seg) and isinstance(b, Seg) and a.rod == b.rod:
                return -1 if self.rod_less(a, b) else 1
            return None
        if len(v) == len(w):
            return 0
        if len(v) < len(w):
            return -1 if isinstance(w[len(v)], Seg) else 1
        return 1 if isinstance(v[len(w)], Seg) else -1

    def invert_letters(self, letters):
        return tuple(self.star(x) for x in reversed(letters))


def segment_grading_check(d: SkewGentleDatum, seg: Seg):
    """Check ``r1 - r2 = chi_{j1,j2} - 1`` for an interior segment with ``j1 < j2``."""
    if seg.j == 0 or seg.j2 == 0:
        return True, "boundary segment"
    (j1, r1), (j2, r2) = sorted([(seg.j, seg.r), (seg.j2, seg.r2)])
    want = d.chi(seg.i, j1, j2) - 1
    if r1 - r2 == want:
        return True, "ok"
    return False, f"segment in polygon {seg.i}: r({j1}) - r({j2}) = {r1 - r2}, expected {want}"


def build_bush(d: SkewGentleDatum) -> Bush:
    return Bush(d)


# -- words -------------------------------------------------------------------

def validate_word(bush: Bush, letters, periodic=False) -> Word:
    letters = tuple(letters)
    if not letters:
        raise InputError("empty word")
    for x in letters:
        bush.check_letter(x)
    n = len(letters)
    steps = n if periodic else n - 1
    for k in range(steps):
        a, b = letters[k], letters[(k + 1) % n]
        if a.sign == b.sign or bush.star(a).rod != b.rod:
            raise BrokenAdjacency(k)
    if periodic:
        if n % 2:
            raise BrokenAdjacency(n - 1, "a periodic word alternates and has even period")
        for p in range(1, n):
            if n % p == 0 and letters[p:] + letters[:p] == letters:
                raise NonMinimalPeriod(f"period {p} divides the stored period {n}")
    return Word(letters, periodic)


def invert(bush: Bush, w: Word) -> Word:
    return Word(bush.invert_letters(w.letters), w.periodic)


def shift_word(w: Word, rho: int) -> Word:
    return Word(tuple(x.shift(rho) for x in w.letters), w.periodic)


def rotate(w: Word, p: int) -> Word:
    if not w.periodic:
        raise RotateOnFinite("only periodic words can be rotated")
    p %= len(w)
    return Word(w.letters[p:] + w.letters[:p], True)


def _cyclic(letters, start, count, step):
    n = len(letters)
    return [letters[(start + step * t) % n] for t in range(count)]


def _kappa_normalize(bush: Bush, w: Word) -> Word:
    """Choose ``+`` at a fixed plus letter iff its forward tail is at least its reversed head."""
    d = bush.datum
    letters = list(w.letters)
    n = len(letters)
    out = list(letters)
    for k, x in enumerate(letters):
        if not (isinstance(x, Plus) and d.is_fixed(x.i, x.j)):
            continue
        if w.periodic:
            tail = _cyclic(letters, k + 1, n + 1, 1)
            head = [bush.star(y) for y in _cyclic(letters, k - 1, n + 1, -1)]
        else:
            tail = letters[k + 1:]
            head = list(bush.invert_letters(letters[:k]))
        c = bush.compare_seq(tail, head)
        out[k] = replace(x, kappa='+' if c is None or c >= 0 else '-')
    return Word(tuple(out), w.periodic)


def canonical_forms(bush: Bush, w: Word):
    """All sign-normalized representatives of the class of ``w`` with their provenance.

    Yields ``(word, inverted, rotation)``.
    """
    for inverted in (False, True):
        base = invert(bush, w) if inverted else w
        normal = _kappa_normalize(bush, base)
        if w.periodic:
            for p in range(len(w)):
                yield rotate(normal, p), inverted, p
        else:
            yield normal, inverted, 0


def canonicalize(bush: Bush, w: Word) -> Word:
    """Unique representative of the class of ``w`` under inversion, sign flips and rotation."""
    return min((c for c, _, _ in canonical_forms(bush, w)), key=Word.key)


def canonicalize_tracked(bush: Bush, w: Word):
    return min(canonical_forms(bush, w), key=lambda t: t[0].key())


def words_equivalent(bush: Bush, v, w):
    return len(v) == len(w) and all(bush.equiv(a, b) for a, b in zip(v, w))


def is_symmetric(bush: Bush, w: Word):
    inv = bush.invert_letters(w.letters)
    if not w.periodic:
        return words_equivalent(bush, w.letters, inv)
    n = len(w)
    return any(words_equivalent(bush, w.letters, inv[p:] + inv[:p]) for p in range(n))


def is_inextensible(w: Word):
    if w.periodic:
        return True
    first, last = w.letters[0], w.letters[-1]
    return isinstance(first, Seg) and first.j == 0 and isinstance(last, Seg) and last.j2 == 0


def classify_word(bush: Bush, w: Word) -> str:
    """One of ``AFW``, ``SFW``, ``APW``, ``SPW`` or ``extensible``."""
    if not w.periodic:
        if not is_inextensible(w):
            return 'extensible'
        return 'SFW' if is_symmetric(bush, w) else 'AFW'
    return 'SPW' if is_symmetric(bush, w) else 'APW'


def compare_classes(bush: Bush, v: Word, w: Word) -> str:
    """``less``, ``equal``, ``greater`` or ``incomparable`` (finite words)."""
    if v.periodic or w.periodic:
        n = max(len(v), len(w)) + 1
        a = _cyclic(v.letters, 0, n, 1) if v.periodic else list(v.letters)
        b = _cyclic(w.letters, 0, n, 1) if w.periodic else list(w.letters)
    else:
        a, b = list(v.letters), list(w.letters)
    c = bush.compare_seq(a, b)
    return {None: 'incomparable', -1: 'less', 0: 'equal', 1: 'greater'}[c]


def symmetric_centres(bush: Bush, w: Word):
    """Positions of the fixed plus letters fixed by the reflection symmetry of ``w``."""
    letters = w.letters
    n = len(letters)
    out = []
    for k, x in enumerate(letters):
        if not (isinstance(x, Plus) and x.kappa):
            continue
        if w.periodic:
            fwd = _cyclic(letters, k + 1, n, 1)
            back = [bush.star(y) for y in _cyclic(letters, k - 1, n, -1)]
        else:
            fwd = list(letters[k + 1:])
            back = list(bush.invert_letters(letters[:k]))
        if words_equivalent(bush, fwd, back):
            out.append(k)
    return out
