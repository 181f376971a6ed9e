"""The regular simplex is extremal for every simplex bound in the catalog.

Each bound is printed as lhs <= rhs with its relative gap.  On the regular
simplex the gaps vanish; after nudging one vertex by 0.1 rad along the sphere
they become strictly positive.
"""
import math

import numpy as np

from polyframe import evaluate, make_polytope, make_regular_simplex

IDS = ("VERTEX_SIMPLEX", "VOLUME_BOUND", "EDGE_SIMPLEX", "ISOPERIMETRIC",
       "NORMAL_SIMPLEX_VERTEX", "NORMAL_EDGE")


def nudge(T, angle=0.1):
    V = T.vertices.copy()
    v, w = V[0], V[1] - np.dot(V[1], V[0]) * V[0]
    V[0] = math.cos(angle) * v + math.sin(angle) * w / np.linalg.norm(w)
    return make_polytope("simplex", vertices=V)


for d in (2, 3, 4):
    T = make_regular_simplex(d)
    print(f"d = {d}")
    for ident in IDS:
        r, q = evaluate(ident, T), evaluate(ident, nudge(T))
        print(f"  {ident:22s} regular gap {r.relative_gap: .1e}   nudged gap {q.relative_gap:.2e}")

# The isoperimetric ratio of the regular tetrahedron, and the constant one
# would get without the factorials coming from the normal scaling.
r = evaluate("ISOPERIMETRIC", make_regular_simplex(3))
print("\nregular tetrahedron: ||vol_2||^3 / vol^2 =", r.rhs)
print("uncorrected constant would demand        ", r.metadata["printed_constant"])
