"""Frame operators of a simplex, and det S as a sum of squared minors.

The vertex and edge frames of a simplex are spanning sets, so each has a
positive definite frame operator S.  AM-GM on the eigenvalues bounds det S by
(tr S / d)^d, with equality exactly when the frame is tight.
"""
import math

import numpy as np

from polyframe import (
    cauchy_binet,
    edge_frame,
    frame_operator,
    make_regular_simplex,
    sample_polytope,
    vertex_frame,
)
from polyframe.frames import trace_det_gap

np.set_printoptions(precision=4, suppress=True)

# The regular tetrahedron: both frames are tight.
T = make_regular_simplex(3)
for name, f in (("vertex", vertex_frame(T)), ("edge", edge_frame(T))):
    s = frame_operator(f)
    print(f"{name:6s} frame: eigenvalues {s.eigenvalues}, tightness deviation {s.tightness_deviation:.1e}")

# A random inscribed tetrahedron is not tight; the trace-determinant gap is positive.
R = sample_polytope("simplex", 3, 7)
s = frame_operator(edge_frame(R))
print("\nrandom tetrahedron, edge frame")
print("  eigenvalues     ", s.eigenvalues)
print("  (tr/d)^d - det  ", trace_det_gap(s))

# det S equals the sum of squared 3x3 minors over all 3-subsets of edges.
print("  det S (LU)      ", s.determinant)
print("  Cauchy-Binet sum", cauchy_binet(edge_frame(R)))

# Only spanning triples contribute.  For a simplex each of them gives
# (3! vol)^2, and there are (d+1)^(d-1) = 16 of them.
print("  16 (3! vol)^2   ", 16 * (math.factorial(3) * R.volume) ** 2)
