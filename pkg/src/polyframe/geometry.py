"""Polytope families, volumes, facet normals and partitions.

Combinatorics (edges, facets, partition cells) are fixed per family; only the
metric data are floating point.  Four families are supported:

``simplex``
    ``d + 1`` vertices in any dimension ``d >= 2``.  Facet ``j`` is the facet
    opposite vertex ``j``.
``quadrilateral``
    four points in cyclic order in the plane; edge ``e_j`` joins ``v_j`` and
    ``v_{j+1}``.
``pyramid_quad``
    a quadrilateral base ``v_1..v_4`` (cyclic order) and an apex ``v_5``.
``bipyramid_tri``
    a triangle ``v_1, v_2, v_3`` and two apexes ``v_4, v_5`` on opposite sides.

Vertex indices are 0-based in code and in the JSON format.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from enum import Enum
from typing import Mapping, Sequence

import numpy as np

from .errors import (
    ArityError,
    ContainmentError,
    DegeneracyError,
    DimensionError,
    FamilyError,
    OrderingError,
    ParameterError,
)

SPHERE_TOL = 1e-12
DEGENERACY_TOL = 1e-12
PARTITION_RTOL = 1e-9


class Family(str, Enum):
    SIMPLEX = "simplex"
    QUADRILATERAL = "quadrilateral"
    PYRAMID_QUAD = "pyramid_quad"
    BIPYRAMID_TRI = "bipyramid_tri"

    @classmethod
    def parse(cls, value) -> "Family":
        if isinstance(value, cls):
            return value
        try:
            return cls(str(value).lower())
        except ValueError:
            raise FamilyError(f"unknown polytope family {value!r}") from None

    @property
    def fixed_dim(self) -> int | None:
        return {
            Family.QUADRILATERAL: 2,
            Family.PYRAMID_QUAD: 3,
            Family.BIPYRAMID_TRI: 3,
        }.get(self)


def _frozen(a) -> np.ndarray:
    arr = np.array(a, dtype=float)
    arr.flags.writeable = False
    return arr


# ---------------------------------------------------------------------------
# combinatorics
# ---------------------------------------------------------------------------

_QUAD_EDGES = ((0, 1), (1, 2), (2, 3), (0, 3))
_PYRAMID_EDGES = ((0, 1), (1, 2), (2, 3), (0, 3), (0, 4), (1, 4), (2, 4), (3, 4))
_PYRAMID_FACETS = ((0, 1, 2, 3), (0, 1, 4), (1, 2, 4), (2, 3, 4), (3, 0, 4))
_BIPYRAMID_EDGES = (
    (0, 1), (1, 2), (0, 2),
    (0, 3), (1, 3), (2, 3),
    (0, 4), (1, 4), (2, 4),
)
_BIPYRAMID_FACETS = ((0, 1, 3), (1, 2, 3), (2, 0, 3), (0, 1, 4), (1, 2, 4), (2, 0, 4))
# triangle edges e_1, e_2, e_3 of the bipyramid
BIPYRAMID_TRIANGLE_EDGES = ((0, 1), (1, 2), (2, 0))

# completion edges (diagonals / apex-apex segment) per family
SYNTHETIC_EDGES = {
    Family.QUADRILATERAL: ((0, 2), (1, 3)),
    Family.PYRAMID_QUAD: ((0, 2), (1, 3)),
    Family.BIPYRAMID_TRI: ((3, 4),),
}


def family_combinatorics(family: Family, d: int):
    """Return ``(edges, facets)`` index tuples for a family in dimension d."""
    family = Family.parse(family)
    if family is Family.SIMPLEX:
        n = d + 1
        edges = tuple(itertools.combinations(range(n), 2))
        facets = tuple(tuple(i for i in range(n) if i != j) for j in range(n))
        return edges, facets
    if family is Family.QUADRILATERAL:
        facets = ((0, 1), (1, 2), (2, 3), (3, 0))
        return _QUAD_EDGES, facets
    if family is Family.PYRAMID_QUAD:
        return _PYRAMID_EDGES, _PYRAMID_FACETS
    return _BIPYRAMID_EDGES, _BIPYRAMID_FACETS


_VERTEX_COUNT = {Family.QUADRILATERAL: 4, Family.PYRAMID_QUAD: 5, Family.BIPYRAMID_TRI: 5}


# ---------------------------------------------------------------------------
# volumetric primitives
# ---------------------------------------------------------------------------

def simplex_volume(points) -> float:
    """d-dimensional volume of the simplex spanned by ``d + 1`` points in R^d."""
    P = np.asarray(points, dtype=float)
    if P.ndim != 2 or P.shape[0] != P.shape[1] + 1:
        raise ArityError(f"need d+1 points in dimension d, got shape {P.shape}")
    d = P.shape[1]
    return abs(float(np.linalg.det(P[1:] - P[0]))) / math.factorial(d)


def facet_content(points) -> float:
    """k-dimensional content of the simplex on ``k + 1`` points in R^d (k < d).

    Uses the Gram determinant of the edge differences, so the points may sit in
    any ambient dimension.  Degenerate input gives 0.
    """
    P = np.asarray(points, dtype=float)
    k = P.shape[0] - 1
    if k <= 0:
        return 0.0
    E = P[1:] - P[0]
    g = float(np.linalg.det(E @ E.T))
    return math.sqrt(max(g, 0.0)) / math.factorial(k)


def hodge_complement(vectors) -> np.ndarray:
    """Generalized cross product of ``d - 1`` vectors in R^d.

    Coordinate ``i`` (1-based) is ``(-1)**(i+1)`` times the minor obtained by
    deleting column ``i`` of the matrix whose rows are the inputs.  The result
    is orthogonal to every input and its length is the (d-1)-volume of the
    parallelepiped they span.
    """
    M = np.atleast_2d(np.asarray(vectors, dtype=float))
    d = M.shape[1]
    if M.shape[0] != d - 1:
        raise ArityError(f"need {d - 1} vectors in dimension {d}, got {M.shape[0]}")
    out = np.empty(d)
    for i in range(d):
        out[i] = (-1) ** i * np.linalg.det(np.delete(M, i, axis=1))
    return out


def barycentric(vertices, x) -> np.ndarray:
    V = np.asarray(vertices, dtype=float)
    n, d = V.shape
    if n != d + 1:
        raise ArityError("barycentric coordinates need a d-simplex")
    A = np.vstack([V.T, np.ones(n)])
    b = np.append(np.asarray(x, dtype=float), 1.0)
    return np.linalg.solve(A, b)


def origin_is_interior(vertices, margin: float = 1e-12) -> bool:
    """True when the origin is strictly inside the simplex."""
    try:
        lam = barycentric(vertices, np.zeros(np.asarray(vertices).shape[1]))
    except np.linalg.LinAlgError:
        return False
    return bool(np.all(lam > margin))


def origin_simplex_volumes(vertices) -> np.ndarray:
    """Volumes of conv(0, v_S) over all d-subsets S of the vertices.

    Subsets are enumerated lexicographically.  These are the Cauchy-Binet
    terms of the vertex frame, divided by d!.
    """
    V = np.asarray(vertices, dtype=float)
    d = V.shape[1]
    idx = np.array(list(itertools.combinations(range(len(V)), d)))
    dets = np.linalg.det(V[idx])
    return np.abs(dets) / math.factorial(d)


def _shoelace(P) -> float:
    x, y = P[:, 0], P[:, 1]
    return 0.5 * abs(float(np.dot(x, np.roll(y, -1)) - np.dot(np.roll(x, -1), y)))


# ---------------------------------------------------------------------------
# polytope value type
# ---------------------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class InscribedPolytope:
    dim: int
    family: Family
    vertices: np.ndarray
    edges: tuple
    facets: tuple
    on_sphere: bool
    params: Mapping = field(default_factory=dict)

    @property
    def n_vertices(self) -> int:
        return len(self.vertices)

    @property
    def volume(self) -> float:
        return polytope_volume(self)

    @property
    def centroid(self) -> np.ndarray:
        return self.vertices.mean(axis=0)

    def edge_vectors(self) -> np.ndarray:
        V = self.vertices
        return np.array([V[j] - V[i] for i, j in self.edges])

    def __repr__(self) -> str:
        return (f"InscribedPolytope(family={self.family.value}, dim={self.dim}, "
                f"n_vertices={self.n_vertices}, on_sphere={self.on_sphere})")


def polytope_volume(P: InscribedPolytope) -> float:
    """d-volume of P from its facet list (cones over fan-triangulated facets)."""
    V = P.vertices
    if P.family is Family.SIMPLEX:
        return simplex_volume(V)
    if P.family is Family.QUADRILATERAL:
        return _shoelace(V)
    c = V.mean(axis=0)
    total = 0.0
    for facet in P.facets:
        f = [V[i] for i in facet]
        for k in range(1, len(f) - 1):
            total += simplex_volume([c, f[0], f[k], f[k + 1]])
    return total


def _is_on_sphere(V) -> bool:
    return bool(np.all(np.abs(np.linalg.norm(V, axis=1) - 1.0) <= SPHERE_TOL))


def _build(family: Family, vertices, params=None, on_sphere=None) -> InscribedPolytope:
    V = _frozen(vertices)
    if V.ndim != 2:
        raise DimensionError("vertices must be a 2-d array")
    n, d = V.shape
    if d < 2:
        raise DimensionError(f"dimension must be >= 2, got {d}")
    fixed = family.fixed_dim
    if fixed is not None and d != fixed:
        raise DimensionError(f"{family.value} requires d={fixed}, got {d}")
    expected = d + 1 if family is Family.SIMPLEX else _VERTEX_COUNT[family]
    if n != expected:
        raise ArityError(f"{family.value} in d={d} needs {expected} vertices, got {n}")
    _check_position(family, V)
    edges, facets = family_combinatorics(family, d)
    actual = _is_on_sphere(V)
    if on_sphere and not actual:
        raise ParameterError("on_sphere flag set but a vertex is off the unit sphere")
    P = InscribedPolytope(d, family, V, edges, facets, actual, dict(params or {}))
    if polytope_volume(P) < DEGENERACY_TOL:
        raise DegeneracyError(f"{family.value} has (near) zero volume")
    return P


def _check_position(family: Family, V) -> None:
    """Reject vertex sets whose convex hull does not have the family's faces."""
    if family is Family.QUADRILATERAL:
        _check_convex_polygon(V)
    elif family is Family.PYRAMID_QUAD:
        base = V[:4]
        n = np.cross(base[1] - base[0], base[2] - base[0])
        if np.linalg.norm(n) < DEGENERACY_TOL:
            raise DegeneracyError("pyramid base is degenerate")
        n = n / np.linalg.norm(n)
        if abs(np.dot(base[3] - base[0], n)) > 1e-9:
            raise DegeneracyError("pyramid base is not planar")
        # project base into its own plane
        u = base[1] - base[0]
        u = u / np.linalg.norm(u)
        w = np.cross(n, u)
        _check_convex_polygon(np.column_stack([(base - base[0]) @ u, (base - base[0]) @ w]))
    elif family is Family.BIPYRAMID_TRI:
        _bipyramid_center(V)


def _check_convex_polygon(P2) -> None:
    crosses = []
    for j in range(4):
        a = P2[(j + 1) % 4] - P2[j]
        b = P2[(j + 2) % 4] - P2[(j + 1) % 4]
        crosses.append(a[0] * b[1] - a[1] * b[0])
    crosses = np.array(crosses)
    if not (np.all(crosses > DEGENERACY_TOL) or np.all(crosses < -DEGENERACY_TOL)):
        raise OrderingError("quadrilateral vertices are not in strictly convex cyclic order")


# ---------------------------------------------------------------------------
# constructors
# ---------------------------------------------------------------------------

def make_regular_simplex(d: int) -> InscribedPolytope:
    """Regular simplex inscribed in the unit sphere of R^d.

    Built recursively: the last vertex is the north pole and the remaining ones
    are a scaled regular (d-1)-simplex in the plane ``x_d = -1/d``.  For d=2 the
    vertices sit at 90, 210 and 330 degrees.
    """
    if int(d) != d or d < 2:
        raise DimensionError(f"regular simplex needs integer d >= 2, got {d}")
    V = np.array([[1.0], [-1.0]])
    for k in range(2, int(d) + 1):
        base = math.sqrt(1.0 - 1.0 / k**2) * V
        base = np.column_stack([base, np.full(len(V), -1.0 / k)])
        apex = np.zeros(k)
        apex[-1] = 1.0
        V = np.vstack([base, apex])
    # put the pole first so that v_1 is the apex, matching the 2-d picture
    V = np.vstack([V[-1], V[:-1]])
    return _build(Family.SIMPLEX, V, {"regular": True})


def make_polytope(family, params: Mapping | None = None, **kwargs) -> InscribedPolytope:
    """Construct a polytope of the given family.

    Parameters (as a mapping or keyword arguments):

    simplex
        ``vertices``: (d+1, d) array.
    quadrilateral
        ``angles``: four strictly increasing angles in [0, 2*pi) (radians).
    pyramid_quad
        ``z0`` in (-1, 1): height of the base plane; the apex is the north pole.
        Optional ``base_angles`` (default 0, pi/2, pi, 3pi/2, i.e. a square) and
        ``rotation`` added to every base angle.
    bipyramid_tri
        ``R`` > 0 circumradius of the triangle in the plane z=0, ``h`` > 0 the
        apex height; apexes are (0,0,h) and (0,0,-h_lower) with ``h_lower``
        defaulting to ``h``.  Optional triangle ``angles`` (default equilateral
        at 90, 210, 330 degrees).

    Any family also accepts explicit ``vertices``.
    """
    family = Family.parse(family)
    p = dict(params or {})
    p.update(kwargs)
    if "vertices" in p:
        return _build(family, p["vertices"], {k: v for k, v in p.items() if k != "vertices"})
    if family is Family.SIMPLEX:
        raise ParameterError("simplex needs explicit vertices (or use make_regular_simplex)")
    if family is Family.QUADRILATERAL:
        angles = _cyclic_angles(p.get("angles"), 4)
        V = np.column_stack([np.cos(angles), np.sin(angles)])
        return _build(family, V, {"angles": [float(a) for a in angles]})
    if family is Family.PYRAMID_QUAD:
        if "z0" not in p:
            raise ParameterError("pyramid_quad needs z0")
        z0 = float(p["z0"])
        if not -1.0 < z0 < 1.0:
            raise ParameterError(f"z0 must lie in (-1, 1), got {z0}")
        angles = p.get("base_angles")
        angles = (np.arange(4) * (np.pi / 2) if angles is None
                  else _cyclic_angles(angles, 4))
        angles = np.asarray(angles, dtype=float) + float(p.get("rotation", 0.0))
        r = math.sqrt(1.0 - z0 * z0)
        base = np.column_stack([r * np.cos(angles), r * np.sin(angles), np.full(4, z0)])
        V = np.vstack([base, [0.0, 0.0, 1.0]])
        rec = {"z0": z0, "base_angles": [float(a) for a in angles]}
        return _build(family, V, rec)
    # bipyramid
    if "R" not in p or "h" not in p:
        raise ParameterError("bipyramid_tri needs R and h")
    R, h = float(p["R"]), float(p["h"])
    h_lower = float(p.get("h_lower", h))
    if R <= 0 or h <= 0 or h_lower <= 0:
        raise ParameterError("R, h and h_lower must be positive")
    angles = p.get("angles")
    angles = (np.pi / 2 + np.arange(3) * (2 * np.pi / 3) if angles is None
              else _cyclic_angles(angles, 3))
    tri = np.column_stack([R * np.cos(angles), R * np.sin(angles), np.zeros(3)])
    V = np.vstack([tri, [0.0, 0.0, h], [0.0, 0.0, -h_lower]])
    rec = {"R": R, "h": h, "h_lower": h_lower, "angles": [float(a) for a in angles]}
    return _build(family, V, rec)


def _cyclic_angles(angles, n) -> np.ndarray:
    if angles is None:
        raise ParameterError(f"need {n} angles")
    a = np.asarray(angles, dtype=float)
    if a.shape != (n,):
        raise ArityError(f"need exactly {n} angles, got {a.shape}")
    if np.any(a < 0) or np.any(a >= 2 * np.pi) or np.any(np.diff(a) <= 0):
        raise OrderingError("angles must be strictly increasing in [0, 2*pi)")
    return a


# ---------------------------------------------------------------------------
# normals
# ---------------------------------------------------------------------------

def hodge_facet_normals(T: InscribedPolytope) -> np.ndarray:
    """Outward facet normals of a simplex, unnormalized Hodge-star scale.

    Row ``j`` is the normal of the facet opposite vertex ``j``; its length is
    ``(d-1)! * vol_{d-1}(F_j)``.
    """
    _require_simplex(T)
    V = T.vertices
    c = V.mean(axis=0)
    out = np.empty_like(V)
    for j, facet in enumerate(T.facets):
        F = V[list(facet)]
        n = hodge_complement(F[1:] - F[0])
        if np.linalg.norm(n) < DEGENERACY_TOL:
            raise DegeneracyError(f"facet {j} is degenerate")
        if np.dot(n, F.mean(axis=0) - c) < 0:
            n = -n
        out[j] = n
    return out


def outward_facet_normals(T: InscribedPolytope) -> list[tuple[int, np.ndarray]]:
    """Outward normals n_F with ``|n_F| = vol_{d-1}(F)``, one per facet."""
    H = hodge_facet_normals(T)
    scale = 1.0 / math.factorial(T.dim - 1)
    return [(j, H[j] * scale) for j in range(len(H))]


def _require_simplex(T: InscribedPolytope) -> None:
    if T.family is not Family.SIMPLEX:
        raise FamilyError(f"operation needs a simplex, got {T.family.value}")


# ---------------------------------------------------------------------------
# partitions
# ---------------------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class Partition:
    base_point: np.ndarray
    cells: tuple
    cell_labels: tuple

    def volumes(self) -> np.ndarray:
        return np.array([simplex_volume(c) for c in self.cells])


@dataclass(frozen=True, eq=False)
class VolumeVector:
    values: np.ndarray
    base_point: np.ndarray
    weights: np.ndarray | None = None

    def norm(self, p: float = 2.0, weights=None) -> float:
        w = self.weights if weights is None else weights
        return norm(self, p, w)

    def __len__(self) -> int:
        return len(self.values)

    def __array__(self, dtype=None, copy=None):
        return np.asarray(self.values, dtype=dtype)


def _line_intersection(a, c, b, e):
    """Intersection of segments a-c and b-e; returns (point, s, t)."""
    A = np.column_stack([c - a, -(e - b)])
    st, *_ = np.linalg.lstsq(A, b - a, rcond=None)
    s, t = st
    p = a + s * (c - a)
    if np.linalg.norm(p - (b + t * (e - b))) > 1e-9:
        raise DegeneracyError("diagonals do not meet")
    return p, s, t


def quad_center(V) -> np.ndarray:
    """Intersection of the diagonals v1-v3 and v2-v4."""
    V = np.asarray(V, dtype=float)
    p, s, t = _line_intersection(V[0], V[2], V[1], V[3])
    if not (0 < s < 1 and 0 < t < 1):
        raise OrderingError("diagonals do not cross inside the quadrilateral")
    return p


def _bipyramid_center(V) -> np.ndarray:
    """Point where the apex segment v4-v5 pierces the triangle v1 v2 v3."""
    V = np.asarray(V, dtype=float)
    a, b, c, top, bottom = V
    n = np.cross(b - a, c - a)
    if np.linalg.norm(n) < DEGENERACY_TOL:
        raise DegeneracyError("bipyramid triangle is degenerate")
    denom = np.dot(n, bottom - top)
    if abs(denom) < DEGENERACY_TOL:
        raise ContainmentError("apex segment is parallel to the triangle")
    t = np.dot(n, a - top) / denom
    if not 0 < t < 1:
        raise ContainmentError("apexes are not on opposite sides of the triangle")
    p = top + t * (bottom - top)
    # barycentric coordinates inside the triangle plane
    T = np.column_stack([b - a, c - a])
    uv, *_ = np.linalg.lstsq(T, p - a, rcond=None)
    lam = np.array([1 - uv.sum(), uv[0], uv[1]])
    if np.any(lam <= 0):
        raise ContainmentError("apex segment misses the triangle interior")
    return p


def partition(P: InscribedPolytope) -> Partition:
    """Split P into simplices about a base point.

    simplex: origin cones, cell j has v_j replaced by the origin.
    quadrilateral: T_j = conv(p, v_j, v_{j+1}) with p the diagonal crossing.
    pyramid_quad: T_j = conv(p, v_j, v_{j+1}, v_5), p the base diagonal crossing.
    bipyramid_tri: T_j = conv(p, e_j, v_4) and T_{j+3} = conv(p, e_j, v_5) for the
    triangle edges e_1 = v1v2, e_2 = v2v3, e_3 = v3v1, p on the apex segment.
    """
    V = P.vertices
    if P.family is Family.SIMPLEX:
        if not origin_is_interior(V):
            raise ContainmentError("origin is not interior to the simplex")
        cells = []
        for j in range(len(V)):
            C = V.copy()
            C[j] = 0.0
            cells.append(_frozen(C))
        base = np.zeros(P.dim)
    elif P.family is Family.QUADRILATERAL:
        base = quad_center(V)
        cells = [_frozen([base, V[j], V[(j + 1) % 4]]) for j in range(4)]
    elif P.family is Family.PYRAMID_QUAD:
        base, _, _ = _line_intersection(V[0], V[2], V[1], V[3])
        cells = [_frozen([base, V[j], V[(j + 1) % 4], V[4]]) for j in range(4)]
    else:
        base = _bipyramid_center(V)
        cells = [_frozen([base, V[i], V[j], V[3]]) for i, j in BIPYRAMID_TRIANGLE_EDGES]
        cells += [_frozen([base, V[i], V[j], V[4]]) for i, j in BIPYRAMID_TRIANGLE_EDGES]
    labels = tuple(range(1, len(cells) + 1))
    return Partition(_frozen(base), tuple(cells), labels)


def volume_vector(part: Partition) -> VolumeVector:
    """Cell volumes ordered by cell label."""
    order = np.argsort(part.cell_labels, kind="stable")
    vols = part.volumes()[order]
    return VolumeVector(_frozen(vols), part.base_point)


def norm(v, p: float = 2.0, weights=None) -> float:
    """Weighted l_p norm ``(sum w_j |v_j|^p)^(1/p)``, p >= 1."""
    if p < 1:
        raise ParameterError(f"p must be >= 1, got {p}")
    x = np.abs(np.asarray(getattr(v, "values", v), dtype=float))
    if weights is None:
        w = np.ones_like(x)
    else:
        w = np.asarray(weights, dtype=float)
        if w.shape != x.shape or np.any(w <= 0):
            raise ParameterError("weights must be positive and match the vector length")
    if p == 2:
        return math.sqrt(math.fsum(w * x * x))
    return math.fsum(w * x**p) ** (1.0 / p)
