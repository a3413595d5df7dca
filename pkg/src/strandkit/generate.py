"""Random and exhaustive generation of tagged arcs over a datum.

Arcs are built as paths: a first segment leaving the boundary or a puncture,
then alternately a crossing (a plus letter) and a segment in the polygon on
the far side, until the path reaches the boundary or a puncture again.
"""

from __future__ import annotations

import random

from .arcs import TaggedArc, arc_from_path, build_model, shift_arc
from .errors import CapExceeded, InputError
from .words import Bush, Plus

ENUMERATION_CAP = 10


def _continue_from(bush: Bush, seg):
    """Letters that may follow a segment ending at an interior edge: (plus letter, next edge)."""
    d = bush.datum
    i, j, r = seg.i, seg.j2, seg.r2
    if d.is_fixed(i, j):
        return Plus(i, j, '+', r), (i, j)
    return Plus(i, j, '', r), d.partner[(i, j)]


def _next_segments(bush: Bush, i, j, r):
    d = bush.datum
    return [bush.segment(i, j, r, j2) for j2 in range(d.m(i) + 1) if j2 != j]


def _starts(bush: Bush, r_range):
    """First segments: from the boundary, and from each puncture."""
    d = bush.datum
    out = []
    for i in range(1, d.t + 1):
        for j2 in range(1, d.m(i) + 1):
            for r in r_range:
                out.append((None, bush.boundary_segment(i, j2, r)))
    for (i, j) in sorted(d.fixed):
        for r in r_range:
            for s in _next_segments(bush, i, j, r):
                out.append(('P', s))
    return out


def _finish(bush: Bush, letters, start_punct, end_punct, rng=None, tags=None):
    """Tagged arc of a finished path; random or given tags at punctured ends."""
    if tags is None:
        pick = (lambda: rng.choice('+-')) if rng else (lambda: '+')
        st = pick() if start_punct else None
        et = pick() if end_punct else None
    else:
        st, et = tags
    return arc_from_path(bush, letters, st, et)


def random_arc(bush: Bush, rng: random.Random, max_crossings=6, r_bound=2, tries=200):
    """A random tagged arc with at most ``max_crossings`` crossings."""
    d = bush.datum
    starts = _starts(bush, range(-r_bound, r_bound + 1))
    for _ in range(tries):
        kind, seg = rng.choice(starts)
        letters = [seg]
        budget = rng.randint(1, max_crossings)
        crossings = 1 if kind else 0
        arc = None
        while True:
            last = letters[-1]
            if last.j2 == 0:
                if len(letters) == 1 and kind is None:
                    break
                try:
                    arc = _finish(bush, letters, kind, False, rng)
                except InputError:
                    arc = None
                break
            fixed = d.is_fixed(last.i, last.j2)
            at_limit = crossings + (2 if fixed else 1) > budget
            if fixed and (at_limit or rng.random() < 0.4):
                try:
                    arc = _finish(bush, letters, kind, True, rng)
                except InputError:
                    arc = None
                break
            if at_limit and not fixed:
                # head for the boundary of the next polygon
                plus, (i2, j2) = _continue_from(bush, last)
                letters += [plus, bush.segment(i2, j2, last.r2, 0)]
                crossings += 1
                continue
            plus, (i2, j2) = _continue_from(bush, last)
            crossings += 2 if fixed else 1
            letters += [plus, rng.choice(_next_segments(bush, i2, j2, last.r2))]
        if arc is not None and len(build_model(bush, arc).crossings) <= max_crossings:
            return arc
    raise RuntimeError("no arc generated; the datum may admit none within the bounds")


def random_arcs(bush: Bush, count, seed=0, max_crossings=6, r_bound=2):
    rng = random.Random(seed)
    return [random_arc(bush, rng, max_crossings, r_bound) for _ in range(count)]


def normalize_shift(arc: TaggedArc) -> TaggedArc:
    """Shift an arc so that its smallest plus-letter grading is zero."""
    rs = [x.r for x in arc.word.letters if isinstance(x, Plus)]
    return shift_arc(arc, -min(rs)) if rs else arc


def enumerate_arcs(bush: Bush, max_crossings, r_bound=0, cap=ENUMERATION_CAP, up_to_shift=False):
    """All tagged arcs with at most ``max_crossings`` crossings, sorted and deduplicated.

    Paths start with grading in ``[-r_bound, r_bound]``; every tagging of the
    punctured ends is included.  With ``up_to_shift`` arcs are normalized by
    ``normalize_shift`` before deduplication.
    """
    if max_crossings > cap:
        raise CapExceeded(f"crossing bound {max_crossings} exceeds the cap {cap}")
    d = bush.datum
    found = {}

    def emit(letters, start_punct, end_punct):
        tag_sets = [(s, e) for s in (('+', '-') if start_punct else (None,))
                    for e in (('+', '-') if end_punct else (None,))]
        for st, et in tag_sets:
            try:
                arc = _finish(bush, letters, start_punct, end_punct, tags=(st, et))
            except InputError:
                continue
            if len(build_model(bush, arc).crossings) > max_crossings:
                continue
            if up_to_shift:
                arc = normalize_shift(arc)
            found[arc.key()] = arc

    def grow(letters, crossings, start_punct):
        last = letters[-1]
        if last.j2 == 0:
            if crossings:
                emit(letters, start_punct, False)
            return
        fixed = d.is_fixed(last.i, last.j2)
        if fixed and crossings + 1 <= max_crossings:
            emit(letters, start_punct, True)
        step = 2 if fixed else 1
        if crossings + step > max_crossings:
            return
        plus, (i2, j2) = _continue_from(bush, last)
        for s in _next_segments(bush, i2, j2, last.r2):
            grow(letters + [plus, s], crossings + step, start_punct)

    if max_crossings <= 0:
        return []
    for kind, seg in _starts(bush, range(-r_bound, r_bound + 1)):
        grow([seg], 1 if kind else 0, kind)
    return sorted(found.values(), key=lambda a: (len(a.word), a.word.tokens(), a.tags))
