"""Cones of morphisms between arc objects over the bundled type-D4 datum.

Lists the arc objects up to shift, then takes a pair whose morphism space in
degree zero is two-dimensional and identifies the cone of each combination
of the two line morphisms by its Hom profile against all arc objects.

    python demos/d4_cones.py
"""

from strandkit.algebra import Algebra
from strandkit.arcs import shift_arc
from strandkit.catalog import d4_datum
from strandkit.dg import add_morphisms, build_arc_module, cone, hom_profile, scale_morphism, shift_dg
from strandkit.generate import enumerate_arcs
from strandkit.intersect import BiQuiver, extension_arcs
from strandkit.textio import parse_arc
from strandkit.words import build_bush

WINDOW = range(-5, 6)
SIGMA = "AFW[] m(2,0>2,1@0) p(2,1@0) m(1,1@0>1,3@1) p(1,3-@1) m(1,3@1>1,2@0) p(1,2@0) m(3,1@0>3,0)"
TAU = "AFW[] m(1,0>1,3@1) p(1,3-@1) m(1,3@1>1,1@0) p(1,1@0) m(2,1@0>2,0)"


def main():
    d = d4_datum()
    b, alg = build_bush(d), Algebra(d)
    arcs = enumerate_arcs(b, 4, r_bound=2, up_to_shift=True)
    print(f"{len(arcs)} arc objects up to shift:")
    for a in arcs:
        print("  " + a.describe())
    probes = [build_arc_module(b, alg, a) for a in arcs]

    def profile(X):
        return [tuple(hom_profile(P, X, WINDOW) + hom_profile(X, P, WINDOW)) for P in probes]

    # arc objects with a single shift, keyed by profile, to name cones that are indecomposable
    named = {}
    for a in arcs:
        for r in range(-2, 3):
            named.setdefault(tuple(profile(build_arc_module(b, alg, shift_arc(a, r)))), f"{a.describe()} [{r}]")

    sigma, tau = parse_arc(b, SIGMA), parse_arc(b, TAU)
    q = BiQuiver(b, sigma, tau)
    L = next(L for L in q.lines() if L.tagged_h)
    x = L.outlets[0]
    side = next(s for s in q.sides[x] if s.kind == 'split')
    e1, e2 = q.extensions(L, x, side.key)
    f1, f2 = q.build_fL(alg, L, [e1]), q.build_fL(alg, L, [e2])
    Ms, Mt = build_arc_module(b, alg, sigma), build_arc_module(b, alg, tau)

    ext = extension_arcs(b, sigma, tau)[0]
    print(f"glued arc: {ext.describe()}")
    target = tuple(profile(shift_dg(build_arc_module(b, alg, ext), 1)))
    for l1, l2 in [(1, 0), (0, 1), (1, 1), (2, 3), (1, -1)]:
        f = add_morphisms(scale_morphism(f1, l1), scale_morphism(f2, l2))
        p = tuple(profile(cone(f, Ms, Mt)))
        what = named.get(p, "decomposable")
        sign = "-" if l2 < 0 else "+"
        print(f"cone({l1} f1 {sign} {abs(l2)} f2): {what}{'  (glued arc shifted by 1)' if p == target else ''}")


if __name__ == "__main__":
    main()
