"""The normal simplex: facet normals as vertices.

Scaled outward facet normals sum to zero, so their convex hull N_T is a
simplex around the origin.  With Hodge normals (raw generalized cross
products, length (d-1)! times the facet content) its volume is a power of
vol(T).
"""
import math

from polyframe import evaluate, normal_simplex, sample_polytope

for d in (2, 3, 4):
    T = sample_polytope("simplex", d, 11)
    N = normal_simplex(T, scale="hodge")
    predicted = (d + 1) * math.factorial(d) ** (d - 2) * T.volume ** (d - 1)
    print(f"d={d}: vol(N_T) = {N.volume:.12f}, (d+1) d!^(d-2) vol(T)^(d-1) = {predicted:.12f}")

# The normals at a vertex span a parallelotope of volume (d! vol)^(d-1) ...
T = sample_polytope("simplex", 3, 5)
r = evaluate("LOCAL_NORMAL_IDENTITY", T)
print(f"\nlocal identity (worst vertex {r.metadata['vertex']}): {r.lhs:.12f} vs {r.rhs:.12f}")

# ... and the normals of the two facets through an edge span a triangle
# whose area is proportional to the edge length.
r = evaluate("NORMAL_CONE_VOLUME", T)
print(f"normal cone (worst edge {r.metadata['edge']}): {r.lhs:.12f} vs {r.rhs:.12f}")
