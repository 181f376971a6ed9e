"""Random campaigns against every inequality in the catalog.

Each sample has its own seeded stream, so the numbers below are reproducible
whatever the worker count.  The l_p interpolation bound is run in two forms:
the one obtained by interpolating the two endpoint bounds, and a version
whose exponents do not match at p=1.  The second fails on the regular
triangle itself.
"""
from polyframe import InequalityId, evaluate, falsification_campaign, make_regular_simplex
from polyframe.geometry import Family

N = 2000
for fam, d in (("simplex", 2), ("simplex", 3), ("quadrilateral", 2),
               ("pyramid_quad", 3), ("bipyramid_tri", 3)):
    ids = [i for i in InequalityId if Family(fam) in i.families]
    camp = falsification_campaign(ids, fam, d, N, seed=1)
    print(f"{fam} d={d}, n={N}")
    for r in camp.results:
        flag = "" if r.asserted else "   (not asserted)"
        print(f"  {r.id:28s} violations {r.violations:5d}  min rel gap {r.min_relative_gap: .2e}{flag}")

T = make_regular_simplex(2)
for ident in ("LP_INTERP", "LP_INTERP_AS_STATED"):
    r = evaluate(ident, T, p=1)
    print(f"\nregular triangle, {ident} at p=1: {r.lhs:.6f} <= {r.rhs:.6f}? {r.holds}")
