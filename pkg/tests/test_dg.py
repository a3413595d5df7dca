import pytest

from strandkit.algebra import Algebra
from strandkit.arcs import shift_arc
from strandkit.dg import (DgModule, HomComplex, build_arc_module, cone, direct_sum, hom_component_degree,
                          hom_dim, hom_profile, identity_morphism, module_to_json, shift_dg,
                          validate_dg, zero_module)
from strandkit.errors import NotACocycle, NotArcObject, TypeMismatch
from strandkit.generate import enumerate_arcs, random_arcs
from support import RAW_DATUMS, golden_diff, labelled, load_golden, setup

# Hand-transcribed differentials of the running arcs.  The ten tau summands
# are listed in the printed order; TAU_PERMUTATION gives the position of each
# printed summand in our order.
GOLDEN = load_golden("running_dg.json")
SIGMA_LABELS = GOLDEN["sigma"]["labels"]
SIGMA_DIFF = golden_diff(GOLDEN["sigma"]["entries"])
TAU_PRINTED_LABELS = GOLDEN["tau_printed"]["labels"]
TAU_PRINTED_DIFF = golden_diff(GOLDEN["tau_printed"]["entries"])
TAU_PERMUTATION = GOLDEN["tau_printed"]["permutation"]


@pytest.fixture(scope="module")
def modules(running, sigma_tau):
    sigma, tau = sigma_tau
    return (build_arc_module(running.bush, running.alg, sigma),
            build_arc_module(running.bush, running.alg, tau))


def test_sigma_module_exact(running, modules):
    Xs, _ = modules
    assert Xs.summand_labels() == SIGMA_LABELS
    assert labelled(running.alg, Xs.diff) == SIGMA_DIFF


def test_tau_module_up_to_permutation(running, modules):
    _, Xt = modules
    perm = TAU_PERMUTATION
    assert sorted(perm) == list(range(10))
    labels = Xt.summand_labels()
    assert [labels[perm[k]] for k in range(10)] == TAU_PRINTED_LABELS
    ours = labelled(running.alg, Xt.diff)
    moved = {(perm[a], perm[b]): v for (a, b), v in TAU_PRINTED_DIFF.items()}
    assert ours == moved


def test_running_modules_valid(modules):
    for m in modules:
        assert validate_dg(m) == []


def test_sign_flip_breaks_square_zero(modules):
    _, Xt = modules
    perm = TAU_PERMUTATION
    # the (0,2) entry cancels against (0,1) in the square of the differential
    key = (perm[0], perm[2])
    diff = {k: dict(v) for k, v in Xt.diff.items()}
    diff[key] = {b: -c for b, c in diff[key].items()}
    bad = validate_dg(DgModule(Xt.algebra, Xt.summands, diff))
    assert any(p.startswith("d^2") for p in bad)


def test_zero_differential_is_valid(running):
    m = DgModule(running.alg, [(0, 0), (3, 2)], {})
    assert validate_dg(m) == []
    assert validate_dg(zero_module(running.alg)) == []


def test_non_arc_input(running):
    with pytest.raises(NotArcObject):
        build_arc_module(running.bush, running.alg, "not an arc")


def test_single_crossing_module(running):
    for arc in enumerate_arcs(running.bush, 1):
        m = build_arc_module(running.bush, running.alg, arc)
        assert len(m) == 1 and m.diff == {}


def test_shift(running, modules, sigma_tau):
    Xs, _ = modules
    assert [n for _, n in shift_dg(Xs, -5).summands] == [-5, -3, -3, -2]
    same = shift_dg(Xs, 0)
    assert (same.summands, same.diff) == (Xs.summands, Xs.diff)
    moved = build_arc_module(running.bush, running.alg, shift_arc(sigma_tau[0], 1))
    ref = shift_dg(Xs, 1)
    assert (moved.summands, moved.diff, moved.summand_labels()) == (ref.summands, ref.diff,
                                                                    ref.summand_labels())


def test_component_degrees(running):
    alg, d = running.alg, running.datum
    z11, z3p, z4m = (d.class_of[x] for x in ((1, 1, ''), (1, 3, '+'), (1, 4, '-')))
    assert hom_component_degree(alg, (z11, 4), (z11, 4), alg.e(z11)) == 0
    assert hom_component_degree(alg, (z3p, 2), (z11, 0), alg.p((1, 1, ''), (1, 3, '+'))) == 1
    assert hom_component_degree(alg, (z4m, 3), (z3p, 2), alg.p((1, 3, '+'), (1, 4, '-'))) == 1
    with pytest.raises(TypeMismatch):
        hom_component_degree(alg, (z11, 0), (z3p, 2), alg.p((1, 1, ''), (1, 3, '+')))


@pytest.mark.parametrize("name", sorted(RAW_DATUMS) + ["d4"])
def test_random_modules_valid(name):
    """Square zero, degree one, radical and triangular differentials on 250 arcs per datum."""
    s = setup(name)
    for arc in random_arcs(s.bush, 250, seed=17, max_crossings=8):
        m = build_arc_module(s.bush, s.alg, arc)
        assert validate_dg(m) == [], arc.describe()


def test_running_hom_dims(modules):
    Xs, Xt = modules
    prof = hom_profile(Xs, Xt, range(-8, 9))
    want = [0] * 17
    want[0 + 8], want[-5 + 8] = 2, 1
    assert prof == want


def test_hom_to_zero(running, modules):
    Xs, _ = modules
    z = zero_module(running.alg)
    assert all(hom_dim(Xs, z, rho) == 0 for rho in range(-4, 5))


@pytest.mark.parametrize("name", ["running", "gentle", "d4"])
def test_arc_objects_have_local_endomorphisms(name):
    s = setup(name)
    for arc in random_arcs(s.bush, 40, seed=9, max_crossings=5):
        m = build_arc_module(s.bush, s.alg, arc)
        assert hom_dim(m, m, 0) == 1, arc.describe()


def _sparse_product(A, B):
    out = {}
    for r, row in A.items():
        for k, a in row.items():
            for c, b in B.get(k, {}).items():
                out.setdefault(r, {})
                out[r][c] = out[r].get(c, 0) + a * b
    return {r: {c: v for c, v in row.items() if v} for r, row in out.items()}


def test_hom_complex_square_zero(running, modules):
    Xs, Xt = modules
    for M, N in ((Xs, Xt), (Xt, Xs), (Xt, Xt)):
        hc = HomComplex(M, N)
        for k in hc.degrees():
            d1, d2 = hc.matrix(k), hc.matrix(k + 1)
            # rows of d1 are columns of d2; (d2 d1)[r][c] = sum_m d2[r][m] d1[m][c]
            prod = _sparse_product(d2, d1)
            assert all(not row for row in prod.values())


def test_shift_compatibility(running):
    s = running
    arcs = random_arcs(s.bush, 8, seed=31, max_crossings=5)
    mods = [build_arc_module(s.bush, s.alg, a) for a in arcs]
    for M in mods[:4]:
        for N in mods[4:]:
            for rho in range(-4, 5):
                assert hom_dim(M, shift_dg(N, rho), 0) == hom_dim(M, N, rho)


def _euler(hc):
    return sum((-1) ** (k % 2) * hc.dim(k) for k in hc.degrees())


def test_euler_characteristic_ignores_contractible_summand(running, modules):
    Xs, Xt = modules
    C = cone(identity_morphism(Xs), Xs, Xs)
    assert _euler(HomComplex(Xt, direct_sum(Xs, C))) == _euler(HomComplex(Xt, Xs))
    assert _euler(HomComplex(direct_sum(Xt, C), Xs)) == _euler(HomComplex(Xt, Xs))


def test_cone_of_identity_is_trivial(running, modules):
    Xs, Xt = modules
    C = cone(identity_morphism(Xt), Xt, Xt)
    assert validate_dg(C, minimal=False) == []
    probes = [Xs, Xt] + [build_arc_module(running.bush, running.alg, a)
                         for a in random_arcs(running.bush, 6, seed=1, max_crossings=5)]
    for Y in probes:
        assert hom_profile(Y, C, range(-5, 6)) == [0] * 11
        assert hom_profile(C, Y, range(-5, 6)) == [0] * 11


def test_cone_rejects_non_cocycles(running, modules):
    Xs, Xt = modules
    f = {(0, 0): {running.alg.e(Xs.summands[0][0]): 1}}
    with pytest.raises(NotACocycle):
        cone(f, Xs, Xs)


def test_module_json(running, modules):
    js = module_to_json(modules[0])
    assert [s["label"] for s in js["summands"]] == SIGMA_LABELS
    assert len(js["entries"]) == 4
