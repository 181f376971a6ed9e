"""Frames attached to a polytope: vertices, edges, facet centroids, normals."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DegeneracyError, FamilyError
from .frames import Frame
from .geometry import (
    SYNTHETIC_EDGES,
    Family,
    InscribedPolytope,
    _build,
    hodge_facet_normals,
    origin_is_interior,
)

NORMAL_SCALES = ("content", "unit", "hodge")


def _edge_label(i: int, j: int, synthetic: bool = False) -> str:
    label = f"e_{i + 1}{j + 1}"
    return label + "^o" if synthetic else label


def vertex_frame(P: InscribedPolytope) -> Frame:
    labels = [f"v_{i + 1}" for i in range(P.n_vertices)]
    return Frame(P.dim, P.vertices, labels)


def edge_frame(P: InscribedPolytope) -> Frame:
    """One vector ``v_j - v_i`` (i < j) per combinatorial edge."""
    labels = [_edge_label(i, j) for i, j in P.edges]
    return Frame(P.dim, P.edge_vectors(), labels)


def centroid_frame(T: InscribedPolytope) -> Frame:
    """Facet centroids of a simplex; row j is the centroid of the facet opposite v_j."""
    _require_simplex(T)
    V = T.vertices
    C = np.array([V[list(f)].mean(axis=0) for f in T.facets])
    return Frame(T.dim, C, [f"c_F{j + 1}" for j in range(len(C))])


def facet_normals(T: InscribedPolytope, scale: str = "content") -> np.ndarray:
    """Outward facet normals of a simplex, row j for the facet opposite v_j.

    ``scale`` selects the length: ``"content"`` gives ``vol_{d-1}(F)``,
    ``"unit"`` gives 1, ``"hodge"`` gives ``(d-1)! vol_{d-1}(F)`` (the raw
    generalized cross product of the facet's edge vectors).
    """
    if scale not in NORMAL_SCALES:
        raise ValueError(f"scale must be one of {NORMAL_SCALES}")
    H = hodge_facet_normals(T)
    if scale == "hodge":
        return H
    if scale == "unit":
        return H / np.linalg.norm(H, axis=1)[:, None]
    return H / math.factorial(T.dim - 1)


def normal_frames(T: InscribedPolytope) -> tuple[Frame, Frame]:
    """(unit normals, content-scaled normals) of a simplex."""
    _require_simplex(T)
    labels = [f"n_F{j + 1}" for j in range(T.n_vertices)]
    return (Frame(T.dim, facet_normals(T, "unit"), labels),
            Frame(T.dim, facet_normals(T, "content"), labels))


def normal_simplex(T: InscribedPolytope, scale: str = "content") -> InscribedPolytope:
    """Simplex whose vertices are the outward facet normals of T.

    The origin is always interior (the scaled normals sum to zero); this is
    asserted rather than assumed.
    """
    N = facet_normals(T, scale)
    if not origin_is_interior(N):
        raise DegeneracyError("normal simplex does not contain the origin")
    return _build(Family.SIMPLEX, N, {"normal_simplex_of": T.family.value, "scale": scale})


@dataclass(frozen=True, eq=False)
class AugmentedEdgeSet:
    real_edges: np.ndarray
    synthetic_edges: np.ndarray
    real_labels: tuple
    synthetic_labels: tuple

    @property
    def frame(self) -> Frame:
        V = np.vstack([self.real_edges, self.synthetic_edges])
        return Frame(V.shape[1], V, self.real_labels + self.synthetic_labels)

    @property
    def real_content_sq(self) -> float:
        """``||vol_1(Q)||^2``: sum of squared real edge lengths."""
        return float(np.sum(self.real_edges**2))

    @property
    def synthetic_content_sq(self) -> float:
        """``||vol_1(Q^o)||^2``: sum of squared synthetic edge lengths."""
        return float(np.sum(self.synthetic_edges**2))


def augmented_edge_frame(Q: InscribedPolytope, include_synthetic: bool = True) -> AugmentedEdgeSet:
    """Real edges plus the completion edges of a d+2 vertex polytope.

    Quadrilateral and pyramid get the diagonals v1v3, v2v4 (of the base);
    the bipyramid gets the apex-apex segment v4v5.
    """
    if Q.family not in SYNTHETIC_EDGES:
        raise FamilyError(f"no augmented edge frame for {Q.family.value}")
    V = Q.vertices
    real = Q.edge_vectors()
    pairs = SYNTHETIC_EDGES[Q.family] if include_synthetic else ()
    synth = np.array([V[j] - V[i] for i, j in pairs]).reshape(len(pairs), Q.dim)
    return AugmentedEdgeSet(
        real_edges=real,
        synthetic_edges=synth,
        real_labels=tuple(_edge_label(i, j) for i, j in Q.edges),
        synthetic_labels=tuple(_edge_label(i, j, True) for i, j in pairs),
    )


def _require_simplex(T: InscribedPolytope) -> None:
    if T.family is not Family.SIMPLEX:
        raise FamilyError(f"operation needs a simplex, got {T.family.value}")
