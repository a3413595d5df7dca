import random

import pytest

from strandkit.arcs import shift_arc
from strandkit.catalog import running_segments, running_words
from strandkit.errors import IncompatibleLocalSystem
from strandkit.generate import enumerate_arcs, random_arcs
from strandkit.intersect import count_parts
from strandkit.linalg import Field
from strandkit.reps import (SPW_FAMILIES, BushRep, RepObject, build_R, companion, direct_sum_reps,
                            hom_rep_dim, is_bijective, letter_class, rep_of_arc, spw_family)
from strandkit.words import Plus, Seg, classify_word, validate_word
from support import RAW_DATUMS, setup

FAMILY3_COEFFS = {0: [2], 1: [3, -1], 2: [1, 1, 2]}


@pytest.fixture(scope="module")
def words(running):
    return running_words(running.bush)


def _slot(table, letter):
    hits = [k for k, (_, x) in enumerate(table) if x == letter]
    assert len(hits) == 1
    return hits[0]


def test_symmetric_finite_rep_matrix(running, words):
    b = running.bush
    s = running_segments()
    mu1, mu2, mu3 = s["mu1"], s["mu2"], s["mu3"]
    rep = build_R(b, words["w2"], '+')
    minus_order = [b.star(mu1), mu2, b.star(mu2), mu3, b.star(mu3)]
    plus_order = [Plus(2, 2, '', 0), Plus(1, 1, '', 0), Plus(1, 3, '+', 2), Plus(1, 3, '-', 2),
                  Plus(1, 4, '+', 3)]
    assert len(rep.minus) == 5 and len(rep.plus) == 5
    cols = [_slot(rep.minus, x) for x in minus_order]
    rows = [_slot(rep.plus, x) for x in plus_order]
    M = [[rep.f.get((p, m), 0) for m in cols] for p in rows]
    assert M == [[1, 0, 0, 0, 0],
                 [0, 1, 0, 0, 0],
                 [0, 0, 1, 1, 0],
                 [0, 0, 0, 1, 0],
                 [0, 0, 0, 0, 1]]
    minus_objects = {o.letters for o in rep.objects if o.sign == '-'}
    assert minus_objects == {(mu1, b.star(mu1)), (mu2, b.star(mu2)), (mu3, b.star(mu3))}
    assert sum(1 for o in rep.objects if o.sign == '+') == 4
    assert is_bijective(rep)


def test_asymmetric_finite_rep(running, words):
    rep = build_R(running.bush, words["w1"])
    assert sum(1 for o in rep.objects if o.sign == '-') == 7
    # two vectors per segment, minus the two ends on the boundary
    assert len(rep.minus) == 12
    assert is_bijective(rep)


def test_truncated_word_not_bijective(running, words):
    b = running.bush
    w = validate_word(b, words["w2"].letters[:-2])
    assert not is_bijective(build_R(b, w))


def test_band_with_trivial_twist(running, words):
    rep = build_R(running.bush, words["w3"], [[1]])
    assert len(rep.minus) == 8
    assert is_bijective(rep)
    assert is_bijective(build_R(running.bush, words["w3"], ('companion', [1])))


@pytest.mark.parametrize("P", [[[2]], [[0, 1], [1, 0]], companion([3, -1])])
def test_band_twists_bijective(running, words, P):
    rep = build_R(running.bush, words["w3"], P)
    assert is_bijective(rep)
    assert hom_rep_dim(running.bush, rep, rep) == len(P)


def test_segment_with_two_plus_objects_not_bijective(running):
    """A segment object next to one plus object: only one component can be nonzero."""
    b = running.bush
    mu6 = running_segments()["mu6"]
    assert (mu6.r, mu6.r2) == (0, 3)
    plus = [Plus(1, 2, '', 0), Plus(1, 6, '', 0)]
    rep = BushRep(objects=[RepObject('-', letter_class(b, mu6), (mu6, b.star(mu6))),
                           RepObject('+', letter_class(b, plus[0]), tuple(plus))],
                  minus=[(0, mu6), (0, b.star(mu6))], plus=[(1, plus[0]), (1, plus[1])],
                  f={(0, 0): 1})
    assert not is_bijective(rep)
    # no block-diagonal map can be bijective: rod (1,6) at grading 3 has a minus vector only
    minus_rods = sorted(x.rod for _, x in rep.minus)
    plus_rods = sorted(x.rod for _, x in rep.plus)
    assert minus_rods != plus_rods


def test_local_system_errors(running, words):
    b = running.bush
    with pytest.raises(IncompatibleLocalSystem):
        build_R(b, words["w1"], '+')
    with pytest.raises(IncompatibleLocalSystem):
        build_R(b, words["w3"], '+')
    with pytest.raises(IncompatibleLocalSystem):
        build_R(b, words["w4"], [[1]])
    with pytest.raises(IncompatibleLocalSystem):
        spw_family('3', 1)


@pytest.mark.parametrize("fid", SPW_FAMILIES)
@pytest.mark.parametrize("q", [0, 1, 2])
def test_symmetric_band_families(running, words, fid, q):
    local = (fid, q, FAMILY3_COEFFS[q]) if fid == '3' else (fid, q)
    rep = build_R(running.bush, words["w4"], local)
    assert is_bijective(rep)
    assert hom_rep_dim(running.bush, rep, rep) == q + 1


def test_rank_one_signs_match_families(running, words):
    b = running.bush
    w4 = words["w4"]
    signs = {('+', '+'): '1b', ('+', '-'): '2b', ('-', '+'): '2a', ('-', '-'): '1a'}
    fam = {f: build_R(b, w4, (f, 0)) for f in set(signs.values())}
    for pair, fid in signs.items():
        r = build_R(b, w4, pair)
        assert is_bijective(r)
        for other, rf in fam.items():
            want = 1 if other == fid else 0
            assert hom_rep_dim(b, r, rf) == want
            assert hom_rep_dim(b, rf, r) == want


def test_rep_of_arc_matches_words(running, words, sigma_tau):
    b = running.bush
    sigma, tau = sigma_tau
    for arc, ref in ((sigma, build_R(b, words["w2"], '-')), (tau, build_R(b, words["w1"]))):
        rep = rep_of_arc(b, arc)
        assert rep.object_multiset() == ref.object_multiset()
        end = hom_rep_dim(b, ref, ref)
        assert hom_rep_dim(b, rep, ref) == end == hom_rep_dim(b, ref, rep)


def test_single_crossing_arcs_have_rank_one_blocks(running):
    b = running.bush
    arcs = enumerate_arcs(b, 1)
    assert arcs
    for arc in arcs:
        rep = rep_of_arc(b, arc)
        for rod in rep.rods():
            assert sum(1 for _, x in rep.minus if x.rod == rod) <= 1
            assert sum(1 for _, x in rep.plus if x.rod == rod) <= 1


def _local_for(arc):
    return {'AFW': None, 'SFW': arc.tags[0] if arc.tags else None,
            'SPW': tuple(arc.tags)}[arc.kind]


def test_bijective_iff_inextensible_sampled():
    """R(w) is bijective exactly for inextensible words, on over a thousand sampled words."""
    sampled = 0
    for name in sorted(RAW_DATUMS):
        b = setup(name).bush
        for arc in random_arcs(b, 200, seed=3, max_crossings=6):
            w = arc.word
            assert classify_word(b, w) in ('AFW', 'SFW', 'SPW')
            assert is_bijective(build_R(b, w, _local_for(arc)))
            sampled += 1
            if w.periodic or len(w) < 3:
                continue
            for letters in (w.letters[2:], w.letters[:-2]):
                v = validate_word(b, letters)
                kind = classify_word(b, v)
                assert is_bijective(build_R(b, v)) == (kind != 'extensible')
                sampled += 1
    assert sampled >= 1000


def test_rep_of_arc_agrees_with_word_rep():
    for name in sorted(RAW_DATUMS):
        b = setup(name).bush
        for arc in random_arcs(b, 60, seed=8):
            rep = rep_of_arc(b, arc)
            ref = build_R(b, arc.word, _local_for(arc))
            assert is_bijective(rep)
            assert rep.object_multiset() == ref.object_multiset()
            assert hom_rep_dim(b, rep, ref) == hom_rep_dim(b, ref, ref)


def test_hom_additive_over_sums(running):
    b = running.bush
    arcs = random_arcs(b, 6, seed=21, max_crossings=4)
    reps = [rep_of_arc(b, a) for a in arcs]
    s01 = direct_sum_reps(reps[0], reps[1])
    for r in reps[2:]:
        assert hom_rep_dim(b, s01, r) == hom_rep_dim(b, reps[0], r) + hom_rep_dim(b, reps[1], r)
        assert hom_rep_dim(b, r, s01) == hom_rep_dim(b, r, reps[0]) + hom_rep_dim(b, r, reps[1])


def test_hom_identity_and_disjoint_rods(running):
    b = running.bush
    for arc in random_arcs(b, 20, seed=2, max_crossings=4):
        r = rep_of_arc(b, arc)
        assert hom_rep_dim(b, r, r) >= 1
        far = rep_of_arc(b, shift_arc(arc, 100))
        assert not set(r.rods()) & set(far.rods())
        assert hom_rep_dim(b, r, far) == 0


def test_hom_over_prime_field(running, sigma_tau):
    b = running.bush
    sigma, tau = sigma_tau
    rs, rt = rep_of_arc(b, sigma), rep_of_arc(b, tau)
    assert hom_rep_dim(b, rs, rt, Field(7)) == hom_rep_dim(b, rs, rt)


def test_running_pair_cross_oracle(running, sigma_tau):
    b = running.bush
    sigma, tau = sigma_tau
    for rho in range(-8, 9):
        t = shift_arc(tau, rho)
        assert hom_rep_dim(b, rep_of_arc(b, sigma), rep_of_arc(b, t)) == count_parts(b, sigma, t).hlines


def cross_oracle_pairs(n_per_datum=80, seed=4):
    """Random arc pairs with a random shift over the three test datums."""
    out = []
    rng = random.Random(seed)
    for name in sorted(RAW_DATUMS):
        b = setup(name).bush
        arcs = random_arcs(b, 40, seed=seed, max_crossings=5)
        for _ in range(n_per_datum):
            a, c = rng.choice(arcs), rng.choice(arcs)
            out.append((name, a, shift_arc(c, rng.randint(-3, 3))))
    return out


def test_cross_oracle_sampled_pairs():
    pairs = cross_oracle_pairs()
    assert len(pairs) >= 200
    bad = []
    for name, a, c in pairs:
        b = setup(name).bush
        h = hom_rep_dim(b, rep_of_arc(b, a), rep_of_arc(b, c))
        n = count_parts(b, a, c).hlines
        if h != n:
            bad.append((name, a.describe(), c.describe(), h, n))
    assert bad == []
