"""Tagged arcs and their crossing model.

A tagged arc is a canonical word of kind ``AFW`` (both ends on the boundary),
``SFW`` (one end at a puncture) or ``SPW`` (both ends at punctures), plus one
sign per punctured end.

The *path* of an arc is the part of the word traversed by the curve itself:
the whole word for ``AFW``, the half before the middle letter for ``SFW`` and
the half between the two reflection centres for ``SPW``.

The *crossing model* lists, in order along the path, the crossings of the
curve with the arcs of the dissection and the segments between them:

* ``U`` segments cross a polygon (one per minus letter);
* ``PI`` segments loop around a puncture between the two crossings produced
  by a plus letter at a self-paired edge;
* ``PN`` segments join a punctured end to its crossing.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import BandNotArc, InputError, NotArcObject, TagCountMismatch
from .words import (Bush, Plus, Seg, Word, canonicalize_tracked, classify_word, invert,
                    shift_word, symmetric_centres, validate_word)

TAG_COUNT = {'AFW': 0, 'SFW': 1, 'SPW': 2}


@dataclass(frozen=True)
class TaggedArc:
    word: Word
    kind: str
    tags: tuple = ()

    def key(self):
        return (self.kind, self.word.key(), self.tags)

    def describe(self):
        tags = "".join(self.tags)
        return f"{self.kind}[{tags}] {self.word.tokens()}"


def encode_arc(bush: Bush, word: Word, tags=()) -> TaggedArc:
    """Canonical tagged arc of a word and the signs at its punctured ends.

    For a symmetric periodic word the two signs refer to the two reflection
    centres of the given period, in order of position.
    """
    tags = tuple(tags)
    for t in tags:
        if t not in ('+', '-'):
            raise InputError(f"tag {t!r} is not '+' or '-'")
    kind = classify_word(bush, word)
    if kind == 'APW':
        raise BandNotArc("an asymmetric periodic word is a band, not an arc")
    if kind == 'extensible':
        raise NotArcObject("the word is extensible; arcs start and end on the boundary or at punctures")
    if len(tags) != TAG_COUNT[kind]:
        raise TagCountMismatch(f"{kind} needs {TAG_COUNT[kind]} tags, got {len(tags)}")
    canon, inverted, rot = canonicalize_tracked(bush, word)
    if kind == 'SPW':
        n = len(word)
        old = symmetric_centres(bush, word)
        if len(old) != 2:
            raise NotArcObject("symmetric periodic word without two punctured centres")
        moved = {}
        for pos, tag in zip(old, tags):
            p = n - 1 - pos if inverted else pos
            moved[(p - rot) % n] = tag
        new = symmetric_centres(bush, canon)
        tags = tuple(moved[p] for p in new)
    return TaggedArc(canon, kind, tags)


def decode_arc(arc: TaggedArc):
    return arc.word, arc.tags


@dataclass(frozen=True)
class ArcPath:
    letters: tuple
    start_tag: str | None = None
    end_tag: str | None = None


def arc_path(bush: Bush, arc: TaggedArc) -> ArcPath:
    w = arc.word.letters
    if arc.kind == 'AFW':
        return ArcPath(w)
    if arc.kind == 'SFW':
        half = (len(w) - 1) // 2
        return ArcPath(w[:half], None, arc.tags[0])
    ca, cb = symmetric_centres(bush, arc.word)
    return ArcPath(w[ca + 1:cb], arc.tags[0], arc.tags[1])


def arc_from_path(bush: Bush, letters, start_tag=None, end_tag=None) -> TaggedArc:
    """Tagged arc traversing the given letters; tags mark punctured ends."""
    letters = tuple(letters)
    if not letters or not isinstance(letters[0], Seg) or not isinstance(letters[-1], Seg):
        raise InputError("a path starts and ends with a segment")
    if start_tag is not None and end_tag is None:
        return arc_from_path(bush, bush.invert_letters(letters), None, start_tag)
    first, last = letters[0], letters[-1]
    if start_tag is None and end_tag is None:
        return encode_arc(bush, validate_word(bush, letters), ())
    d = bush.datum
    if not d.is_fixed(last.i, last.j2):
        raise InputError("a punctured end must reach a self-paired edge")
    end = Plus(last.i, last.j2, '+', last.r2)
    if start_tag is None:
        full = letters + (end,) + bush.invert_letters(letters)
        return encode_arc(bush, validate_word(bush, full), (end_tag,))
    if not d.is_fixed(first.i, first.j):
        raise InputError("a punctured end must reach a self-paired edge")
    start = Plus(first.i, first.j, '+', first.r)
    full = (start,) + letters + (end,) + bush.invert_letters(letters)
    return encode_arc(bush, validate_word(bush, full, periodic=True), (start_tag, end_tag))


def shift_arc(arc: TaggedArc, rho: int) -> TaggedArc:
    return TaggedArc(shift_word(arc.word, rho), arc.kind, arc.tags)


def invert_arc(bush: Bush, arc: TaggedArc) -> TaggedArc:
    return encode_arc(bush, invert(bush, arc.word), arc.tags) if arc.kind != 'SPW' else arc


# -- crossing model ------------------------------------------------------------

@dataclass
class Crossing:
    index: int
    label: tuple          # signed index (i, j, kappa) on the side the path arrives from
    khat: tuple           # arc class key, ignoring signs
    n: int                # grading
    kind: str             # 'plain', 'int' (binary pair) or 'end' (punctured end)
    partner: int | None = None
    summand: int = -1
    block: int = -1
    sides: dict = field(default_factory=dict)   # side key -> (segment index, end position)

    @property
    def sign(self):
        return self.label[2]


@dataclass
class ArcSegment:
    index: int
    kind: str                 # 'U', 'PI' or 'PN'
    i: int
    ends: list                # [(crossing index or None, edge j)] in path direction
    letter: Seg | None = None


@dataclass
class ArcModel:
    arc: TaggedArc
    path: ArcPath
    crossings: list
    segments: list
    blocks: list              # list of lists of crossing indices (one or two)
    summands: list            # (class index, n) per summand
    summand_crossing: list

    def block_label(self, d, c: Crossing, seg: ArcSegment, pos: int):
        """Block index used by ``seg`` at its end ``pos`` (crossing ``c``)."""
        i, j = seg.i, seg.ends[pos][1]
        if c.kind == 'int':
            return (i, j)
        if c.kind == 'end':
            return (i, j, c.sign)
        return (i, j, '')


def build_model(bush: Bush, arc: TaggedArc) -> ArcModel:
    d = bush.datum
    path = arc_path(bush, arc)
    crossings, segments = [], []

    def add_crossing(label, n, kind):
        i, j, _ = label
        c = Crossing(len(crossings), label, d.khat(i, j), n, kind)
        crossings.append(c)
        return c

    def add_segment(kind, i, ends, letter=None):
        s = ArcSegment(len(segments), kind, i, ends, letter)
        segments.append(s)
        for pos, (ci, j) in enumerate(ends):
            if ci is not None:
                key = ('P' if kind != 'U' else 'U', i, j)
                crossings[ci].sides[key] = (s.index, pos)
        return s

    prev = None
    letters = path.letters
    if path.start_tag is not None:
        first = letters[0]
        c = add_crossing((first.i, first.j, path.start_tag), first.r, 'end')
        add_segment('PN', first.i, [(None, 'P'), (c.index, first.j)])
        prev = c.index
    pending = None
    for x in letters:
        if isinstance(x, Seg):
            pending = (x, prev)
            prev = None
            continue
        seg, start = pending
        if d.is_fixed(x.i, x.j):
            other = '-' if x.kappa == '+' else '+'
            c1 = add_crossing((x.i, x.j, x.kappa), x.r, 'int')
            c2 = add_crossing((x.i, x.j, other), x.r, 'int')
            c1.partner, c2.partner = c2.index, c1.index
            add_segment('U', seg.i, [(start, seg.j), (c1.index, seg.j2)], seg)
            add_segment('PI', x.i, [(c1.index, x.j), (c2.index, x.j)])
            prev = c2.index
        else:
            c = add_crossing((x.i, x.j, ''), x.r, 'plain')
            add_segment('U', seg.i, [(start, seg.j), (c.index, seg.j2)], seg)
            prev = c.index
        pending = None
    seg, start = pending
    if path.end_tag is not None:
        c = add_crossing((seg.i, seg.j2, path.end_tag), seg.r2, 'end')
        add_segment('U', seg.i, [(start, seg.j), (c.index, seg.j2)], seg)
        add_segment('PN', seg.i, [(c.index, seg.j2), (None, 'P')])
    else:
        add_segment('U', seg.i, [(start, seg.j), (None, seg.j2)], seg)
    # the sides of a plain crossing face the two polygons glued along its arc
    for c in crossings:
        if c.kind == 'plain':
            keys = list(c.sides)
            assert len(keys) == 2, keys
    blocks, summands, owner = [], [], []
    done = set()
    for c in crossings:
        if c.index in done:
            continue
        if c.kind == 'int':
            plus, minus = (c, crossings[c.partner]) if c.sign == '+' else (crossings[c.partner], c)
            group = [plus, minus]
        else:
            group = [c]
        for g in group:
            g.block = len(blocks)
            g.summand = len(summands)
            summands.append((d.class_of[g.label], g.n))
            owner.append(g.index)
            done.add(g.index)
        blocks.append([g.index for g in group])
    return ArcModel(arc, path, crossings, segments, blocks, summands, owner)
