"""Searching one-parameter families for tight frames.

For the square pyramid the parameter is the height z0 of the base plane (the
apex is the north pole); for the equilateral bipyramid it is h/R.  The
objective is the tightness deviation of the chosen frame.
"""
from polyframe import tightness_search, verify_known_tight_configs
from polyframe.search import pyramid_volume_maximum

for row in verify_known_tight_configs(include_extra=True):
    print(f"{row['config']:58s} deviation {row['deviation']:.1e}  S = {row['constant']:.4f} I")

print()
for fam, frame in (("pyramid_quad", "vertex"), ("pyramid_quad", "augmented_edge"),
                   ("pyramid_quad", "augmented_edge_no_synthetic"),
                   ("bipyramid_tri", "augmented_edge"), ("bipyramid_tri", "augmented_edge_no_synthetic")):
    res = tightness_search(fam, frame, seed=0)
    xs = ", ".join(f"{o['x']:.10f}" for o in res.optima)
    print(f"{fam:13s} {frame:28s} optima: {xs}")

# The vertex frame of the pyramid is tight for both z0 = 1/sqrt(6) and its mirror.
print("\nlargest pyramid:", pyramid_volume_maximum())
