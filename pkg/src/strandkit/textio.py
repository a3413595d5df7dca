"""Reading and writing datums, words and tagged arcs as text.

Arcs are accepted in three shapes:

* JSON ``{"letters": [...], "tags": [...], "periodic": false}`` where a
  segment is ``{"seg": [i, j, j2], "r": r, "r2": r2}`` and a plus letter is
  ``{"plus": [i, j], "kappa": "", "r": r}``;
* JSON ``{"tokens": "...", "tags": [...], "periodic": false}``;
* a token line such as ``m(2,0>2,2@0) p(2,2@0) m(1,1@0>1,3@2) ...``,
  optionally prefixed by ``KIND[tags]`` as printed by ``TaggedArc.describe``.

All indices are 1-based and gradings are plain integers.
"""

from __future__ import annotations

import json
import re

from .arcs import TaggedArc, encode_arc
from .errors import InputError
from .words import Bush, Plus, Seg, Word, validate_word

_SEG = re.compile(r"m\((\d+),(\d+)(?:@(-?\d+))?>(\d+),(\d+)(?:@(-?\d+))?\)")
_PLUS = re.compile(r"p\((\d+),(\d+)([+-]?)@(-?\d+)\)")
_HEAD = re.compile(r"^\s*(AFW|SFW|SPW)\[([+-]*)\]\s*")


def _opt_int(s):
    return None if s is None else int(s)


def parse_token(tok: str):
    m = _SEG.fullmatch(tok)
    if m:
        i, j, r, i2, j2, r2 = m.groups()
        if i != i2:
            raise InputError(f"segment {tok!r} joins two polygons")
        return Seg(int(i), int(j), _opt_int(r), int(j2), _opt_int(r2))
    m = _PLUS.fullmatch(tok)
    if m:
        i, j, kappa, r = m.groups()
        return Plus(int(i), int(j), kappa, int(r))
    raise InputError(f"unreadable letter {tok!r}")


def parse_tokens(text: str):
    return [parse_token(t) for t in text.split()]


def letter_from_json(obj):
    try:
        if "seg" in obj:
            i, j, j2 = (int(x) for x in obj["seg"])
            return Seg(i, j, _opt_int(obj.get("r")), j2, _opt_int(obj.get("r2")))
        if "plus" in obj:
            i, j = (int(x) for x in obj["plus"])
            return Plus(i, j, obj.get("kappa", ""), int(obj["r"]))
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError(f"malformed letter {obj!r}: {exc!r}") from None
    raise InputError(f"letter {obj!r} is neither a segment nor a plus letter")


def letter_to_json(x):
    if isinstance(x, Seg):
        return {"seg": [x.i, x.j, x.j2], "r": x.r, "r2": x.r2}
    return {"plus": [x.i, x.j], "kappa": x.kappa, "r": x.r}


def word_from_obj(bush: Bush, obj) -> tuple:
    """``(word, tags)`` from a parsed JSON object or a token line."""
    if isinstance(obj, str):
        text = obj.strip()
        tags, periodic = (), False
        m = _HEAD.match(text)
        if m:
            tags, periodic = tuple(m.group(2)), m.group(1) == 'SPW'
            text = text[m.end():]
        return validate_word(bush, parse_tokens(text), periodic), tags
    if not isinstance(obj, dict):
        raise InputError("an arc is a JSON object or a token line")
    if "letters" in obj:
        letters = [letter_from_json(x) for x in obj["letters"]]
    elif "tokens" in obj:
        letters = parse_tokens(obj["tokens"])
    else:
        raise InputError("an arc object needs 'letters' or 'tokens'")
    periodic = bool(obj.get("periodic", False))
    return validate_word(bush, letters, periodic), tuple(obj.get("tags", ()))


def parse_arc(bush: Bush, obj) -> TaggedArc:
    word, tags = word_from_obj(bush, obj)
    return encode_arc(bush, word, tags)


def parse_arc_text(bush: Bush, text: str) -> list:
    """All arcs in a file body: a JSON arc, a JSON list of arcs, or one token line per arc."""
    stripped = text.strip()
    if stripped.startswith(('{', '[')):
        try:
            data = json.loads(stripped)
        except json.JSONDecodeError as exc:
            raise InputError(f"arc file is not valid JSON: {exc}") from None
        items = data if isinstance(data, list) else [data]
        return [parse_arc(bush, x) for x in items]
    lines = [ln for ln in stripped.splitlines() if ln.strip() and not ln.lstrip().startswith('#')]
    if not lines:
        raise InputError("no arcs found")
    return [parse_arc(bush, ln) for ln in lines]


def load_arcs(bush: Bush, path) -> list:
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from None
    return parse_arc_text(bush, text)


def arc_to_json(arc: TaggedArc):
    return {"kind": arc.kind, "letters": [letter_to_json(x) for x in arc.word.letters],
            "tags": list(arc.tags), "periodic": arc.word.periodic,
            "tokens": arc.word.tokens()}


def word_to_json(w: Word):
    return {"letters": [letter_to_json(x) for x in w.letters], "periodic": w.periodic,
            "tokens": w.tokens()}
