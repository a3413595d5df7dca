"""Built-in datums, words and arcs."""

from __future__ import annotations

import json
from importlib import resources

from .arcs import encode_arc
from .datum import validate_datum
from .words import Bush, Plus, Seg, Word, validate_word

RUNNING_DATUM = {
    "polygons": [7, 2, 1],
    "pairs": [[[1, 1], [2, 2]], [[1, 2], [1, 6]], [[1, 5], [3, 1]], [[1, 7], [2, 1]]],
    "fixed": [[1, 3], [1, 4]],
    "gradings": [[0, -1, 0, 0, -1, 0], [0], []],
}


def running_datum():
    return validate_datum(RUNNING_DATUM)


def d4_datum():
    text = resources.files("strandkit.data").joinpath("d4.json").read_text(encoding="utf-8")
    return validate_datum(json.loads(text))


def running_segments():
    """The named segments of the running example."""
    return {
        "mu1": Seg(2, 0, None, 2, 0),
        "mu2": Seg(1, 1, 0, 3, 2),
        "mu3": Seg(1, 3, 2, 4, 3),
        "mu4": Seg(1, 4, 3, 7, 5),
        "mu5": Seg(2, 0, None, 1, 5),
        "mu6": Seg(1, 2, 0, 6, 3),
        "mu7": Seg(1, 1, 2, 2, 3),
        "mu8": Seg(2, 1, 1, 2, 2),
        "mu9": Seg(1, 6, 0, 7, 1),
    }


def running_words(bush: Bush):
    """Words ``w1`` (asymmetric finite), ``w2`` (symmetric finite), ``w3`` and ``w4`` (periodic)."""
    s = running_segments()
    star = bush.star
    mu1, mu2, mu3, mu4, mu5, mu6 = (s[k] for k in ("mu1", "mu2", "mu3", "mu4", "mu5", "mu6"))
    w1 = validate_word(bush, [
        mu1, Plus(2, 2, '', 0), mu2, Plus(1, 3, '+', 2), mu3, Plus(1, 4, '+', 3), star(mu3),
        Plus(1, 3, '+', 2), mu3, Plus(1, 4, '+', 3), mu4, Plus(1, 7, '', 5), star(mu5)])
    w2 = validate_word(bush, [
        mu1, Plus(2, 2, '', 0), mu2, Plus(1, 3, '+', 2), mu3, Plus(1, 4, '+', 3), star(mu3),
        Plus(1, 3, '-', 2), star(mu2), Plus(1, 1, '', 0), star(mu1)])
    mu7, mu8, mu9 = s["mu7"], s["mu8"], s["mu9"]
    w3 = validate_word(bush, [
        mu6, Plus(1, 6, '', 3), star(mu7), Plus(1, 1, '', 2), star(mu8), Plus(2, 1, '', 1),
        star(mu9), Plus(1, 6, '', 0)], periodic=True)
    w4 = validate_word(bush, [
        Seg(1, 3, 0, 4, 1), Plus(1, 4, '+', 1), Seg(1, 4, 1, 3, 0), Plus(1, 3, '+', 0)], periodic=True)
    return {"w1": w1, "w2": w2, "w3": w3, "w4": w4}


def running_arcs(bush: Bush):
    """The arcs ``sigma`` (one punctured end, tag ``-``) and ``tau`` (boundary to boundary)."""
    w = running_words(bush)
    return encode_arc(bush, w["w2"], ('-',)), encode_arc(bush, w["w1"], ())
