"""Z-forms: det of the augmented edge frame as a quadratic form in volumes.

Adding the base diagonals (or the apex segment of a bipyramid) to the edges
of a (d+2)-vertex polytope gives the edge set of K_{d+2}.  Cauchy-Binet then
writes det S_E as a fixed integer quadratic form in the partition volumes.
"""
import numpy as np

from polyframe import BIPYR_Z, QUAD_Z, sample_polytope, z_form, z_spectral_properties

for fam, d in (("quadrilateral", 2), ("pyramid_quad", 3), ("bipyramid_tri", 3)):
    P = sample_polytope(fam, d, 2)
    z = z_form(P)
    print(f"{fam:14s} T = {np.round(z.volumes, 4)}")
    print(f"{'':14s} det S_E = {z.det_edge_frame:.10f} = {z.scale} * <ZT,T> = {z.scale * z.value:.10f}")

print()
for name, Z in (("quadrilateral", QUAD_Z), ("bipyramid", BIPYR_Z)):
    s = z_spectral_properties(Z)
    print(f"{name} Z: eigenvalues {np.round(s.eigenvalues, 12)}, lemma holds: {s.all_pass}")
    for k, v in s.properties.items():
        print(f"    {k:40s} {v}")

# 2I has a nonnegative eigenvector for every coordinate direction.
print("2I passes:", z_spectral_properties(2 * np.eye(4, dtype=int)).all_pass)
