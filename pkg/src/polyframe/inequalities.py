"""Catalog of polytope inequalities and identities, Z-forms, spectral lemma.

Every catalog entry is evaluated as ``lhs <= rhs``.  For inequalities the gap
is ``rhs - lhs``; for identities it is ``-|lhs - rhs|`` so that one rule
(``relative_gap >= -tol``) decides ``holds`` for both kinds.

Two normalizations of facet normals appear below.  Content normals have
length ``vol_{d-1}(F)``; Hodge normals are the raw generalized cross products
of a facet's edge vectors, of length ``(d-1)! vol_{d-1}(F)``.  The volume
identities for the normal simplex hold with Hodge normals.  The two agree in
the plane.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum
from typing import Callable

import numpy as np

from .builders import augmented_edge_frame, facet_normals
from .errors import ApplicabilityError, ConsistencyError, ContainmentError
from .frames import cauchy_binet, jacobi_eigh
from .geometry import (
    Family,
    InscribedPolytope,
    facet_content,
    norm,
    origin_is_interior,
    origin_simplex_volumes,
    partition,
    simplex_volume,
    volume_vector,
)
from .oracles import spanning_tree_count

TOL = 1e-9
EQ_TOL = 1e-7
BALL_TOL = 1e-12
LP_VALUES = (1.0, 1.25, 1.5, 2.0)

QUAD_Z = np.array([
    [2, 1, 0, 1],
    [1, 2, 1, 0],
    [0, 1, 2, 1],
    [1, 0, 1, 2],
], dtype=np.int64)

BIPYR_Z = np.array([
    [2, 1, 1, 1, 0, 0],
    [1, 2, 1, 0, 1, 0],
    [1, 1, 2, 0, 0, 1],
    [1, 0, 0, 2, 1, 1],
    [0, 1, 0, 1, 2, 1],
    [0, 0, 1, 1, 1, 2],
], dtype=np.int64)

# det S_E(Q u Q^o) = scale * <Z T, T>
Z_SCALE = {
    Family.QUADRILATERAL: 16,
    Family.PYRAMID_QUAD: 5**2 * math.factorial(3) ** 2,
    Family.BIPYRAMID_TRI: 5**2 * math.factorial(3) ** 2,
}
Z_MATRIX = {
    Family.QUADRILATERAL: QUAD_Z,
    Family.PYRAMID_QUAD: QUAD_Z,
    Family.BIPYRAMID_TRI: BIPYR_Z,
}

_S = (Family.SIMPLEX,)
_D2 = (Family.QUADRILATERAL, Family.PYRAMID_QUAD, Family.BIPYRAMID_TRI)


class InequalityId(Enum):
    # value: (kind, families, asserted, statement)
    VERTEX_SIMPLEX = ("inequality", _S, True,
                      "||vol_d(T)||_2 (origin cones) <= (1/d!)(1+1/d)^(d/2)")
    VOLUME_BOUND = ("inequality", _S, True,
                    "vol_d(T) <= sqrt(d+1)/d! (1+1/d)^(d/2), equality iff regular")
    EDGE_SIMPLEX = ("inequality", _S, True,
                    "vol_d(T) <= ||vol_1(T)||_2^d / (d! (d+1)^((d-1)/2) d^(d/2))")
    LP_INTERP = ("inequality", _S, True,
                 "||vol_d(T)||_p <= EDGE^(2/p-1) * VERTEX^(2-2/p) (Hoelder interpolation)")
    LP_INTERP_AS_STATED = ("inequality", _S, False,
                           "||vol_d(T)||_p <= (d+1)^((3d+1)/2-2d/p)/(d! d^(d/2)) ||vol_1(T)||_2^(2/p-1)")
    LOCAL_NORMAL_IDENTITY = ("identity", _S, True,
                             "|det(Hodge normals of facets at v)| = (d! vol_d(T))^(d-1)")
    NORMAL_SIMPLEX_VOLUME = ("identity", _S, True,
                             "vol_d(N_T) = (d+1) d!^(d-2) vol_d(T)^(d-1), Hodge normals")
    NORMAL_SIMPLEX_VERTEX = ("inequality", _S, True,
                             "||vol_d(N_T)||_2 <= ||vol_{d-1}(T)||_2^d / (d! d^(d/2))")
    ISOPERIMETRIC = ("inequality", _S, True,
                     "sqrt(d+1) d!^(d-1) d^(d/2) / (d-1)!^d <= ||vol_{d-1}(T)||_2^d / vol_d(T)^(d-1)")
    NORMAL_EDGE = ("inequality", _S, True,
                   "EDGE_SIMPLEX applied to the unit normal simplex")
    NORMAL_CONE_VOLUME = ("identity", _S, True,
                          "vol_{d-1}(conv(0, Hodge normals at e)) = (d! vol_d(T))^(d-2)/(d-1)! |e|")
    QUAD_INEQ1 = ("inequality", (Family.QUADRILATERAL,), True,
                  "||vol_2(Q)||_{2,0} <= 1")
    QUAD_INEQ2 = ("inequality", (Family.QUADRILATERAL,), True,
                  "||vol_2(Q)||_{2,p}^2 + (T1+T3)(T2+T4) <= (||vol_1(Q)||^2+||vol_1(Q^o)||^2)^2/128")
    QUAD_VOLUME_MAX = ("inequality", (Family.QUADRILATERAL,), True,
                       "vol_2(Q) <= vol_2(square) = 2")
    PYR_INEQ1 = ("inequality", (Family.PYRAMID_QUAD,), True,
                 "||vol_3(Q)||_{2,0} <= (1/3!)(5/3)^(3/2)")
    PYR_INEQ2 = ("inequality", (Family.PYRAMID_QUAD,), True,
                 "||vol_3(Q)||_{2,p}^2 + eps_pyr(Q) <= (||vol_1(Q)||^2+||vol_1(Q^o)||^2)^3/(2*5^2*3^3*3!^2)")
    BIPYR_INEQ1 = ("inequality", (Family.BIPYRAMID_TRI,), True,
                   "||vol_3(Q)||_{2,0}^2 <= (1/3!^2)(5/3)^3")
    BIPYR_INEQ2 = ("inequality", (Family.BIPYRAMID_TRI,), True,
                   "||vol_3(Q)||_{2,p}^2 + eps_bipyr(Q) <= (||vol_1(Q)||^2+||vol_1(Q^o)||^2)^3/(2*5^2*3^3*3!^2)")
    CONJECTURE_D23 = ("inequality", _D2, True,
                      "||vol_d(Q)||_{2,p}^2 + eps_d(Q) <= (||vol_1(Q)||^2+||vol_1(Q^o)||^2)^d/(c_d d!^2 d^d), c_d = 2(d+2)^(d-1)")

    @property
    def kind(self) -> str:
        return self.value[0]

    @property
    def families(self) -> tuple:
        return self.value[1]

    @property
    def asserted(self) -> bool:
        return self.value[2]

    @property
    def statement(self) -> str:
        return self.value[3]

    @classmethod
    def parse(cls, value) -> "InequalityId":
        if isinstance(value, cls):
            return value
        name = str(value).split("(")[0].strip().upper()
        return cls[name]


@dataclass(frozen=True)
class InequalityReport:
    id: InequalityId
    lhs: float
    rhs: float
    gap: float
    relative_gap: float
    holds: bool
    equality: bool
    metadata: dict = field(default_factory=dict)

    @property
    def asserted(self) -> bool:
        return self.id.asserted

    @property
    def label(self) -> str:
        p = self.metadata.get("p")
        return f"{self.id.name}(p={p:g})" if p is not None else self.id.name

    def to_dict(self) -> dict:
        return {
            "id": self.label,
            "kind": self.id.kind,
            "lhs": self.lhs,
            "rhs": self.rhs,
            "gap": self.gap,
            "relative_gap": self.relative_gap,
            "holds": self.holds,
            "equality": self.equality,
            "asserted": self.asserted,
            "metadata": _jsonable(self.metadata),
        }


def _jsonable(x):
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    if isinstance(x, np.ndarray):
        return _jsonable(x.tolist())
    if isinstance(x, (np.floating, np.integer, np.bool_)):
        return x.item()
    if isinstance(x, Enum):
        return x.value
    return x


def make_report(ident: InequalityId, lhs: float, rhs: float, tol: float = TOL,
                eq_tol: float = EQ_TOL, metadata: dict | None = None) -> InequalityReport:
    lhs, rhs = float(lhs), float(rhs)
    gap = -abs(lhs - rhs) if ident.kind == "identity" else rhs - lhs
    rel = gap / max(abs(rhs), 1e-300)
    return InequalityReport(
        id=ident,
        lhs=lhs,
        rhs=rhs,
        gap=gap,
        relative_gap=rel,
        holds=bool(rel >= -tol),
        equality=bool(abs(rel) <= eq_tol),
        metadata=dict(metadata or {}),
    )


# ---------------------------------------------------------------------------
# shared quantities
# ---------------------------------------------------------------------------

def _require_ball(P: InscribedPolytope) -> None:
    # trace of the vertex frame is at most n only inside the closed unit ball
    if np.any(np.linalg.norm(P.vertices, axis=1) > 1.0 + BALL_TOL):
        raise ApplicabilityError("vertex-frame bound needs every vertex in the closed unit ball")


def _require_origin(P: InscribedPolytope) -> None:
    if not origin_is_interior(P.vertices):
        raise ContainmentError("origin is not interior to the simplex")


def edge_content_sq(P: InscribedPolytope) -> float:
    """``||vol_1(P)||_2^2``, the sum of squared edge lengths."""
    return float(np.sum(P.edge_vectors() ** 2))


def facet_contents(T: InscribedPolytope) -> np.ndarray:
    V = T.vertices
    return np.array([facet_content(V[list(f)]) for f in T.facets])


def vertex_bound(d: int) -> float:
    return (1.0 + 1.0 / d) ** (d / 2) / math.factorial(d)


def edge_bound(d: int, edge_norm: float) -> float:
    return edge_norm**d / (math.factorial(d) * (d + 1) ** ((d - 1) / 2) * d ** (d / 2))


def _unit_simplex_edges(N: np.ndarray) -> float:
    n = len(N)
    total = 0.0
    for i in range(n):
        for j in range(i + 1, n):
            total += float(np.sum((N[j] - N[i]) ** 2))
    return math.sqrt(total)


# ---------------------------------------------------------------------------
# evaluators: each returns (lhs, rhs, metadata)
# ---------------------------------------------------------------------------

def _vertex_simplex(T, **_):
    _require_ball(T)
    _require_origin(T)
    d = T.dim
    cones = volume_vector(partition(T))
    return cones.norm(2), vertex_bound(d), {"cone_volumes": cones.values}


def _volume_bound(T, **_):
    _require_ball(T)
    d = T.dim
    return simplex_volume(T.vertices), math.sqrt(d + 1) * vertex_bound(d), {}


def _edge_simplex(T, **_):
    L = math.sqrt(edge_content_sq(T))
    return simplex_volume(T.vertices), edge_bound(T.dim, L), {"edge_norm": L}


def _lp_value(p):
    if p is None:
        raise ApplicabilityError("LP_INTERP needs p")
    p = float(p)
    if not 1.0 <= p <= 2.0:
        raise ApplicabilityError(f"LP_INTERP needs 1 <= p <= 2, got {p}")
    return p


def _lp_interp(T, p=None, **_):
    p = _lp_value(p)
    _require_ball(T)
    _require_origin(T)
    d = T.dim
    cones = volume_vector(partition(T))
    L = math.sqrt(edge_content_sq(T))
    theta = 2.0 / p - 1.0
    rhs = edge_bound(d, L) ** theta * vertex_bound(d) ** (1.0 - theta)
    return cones.norm(p), rhs, {"p": p, "edge_norm_exponent": d * theta}


def _lp_interp_as_stated(T, p=None, **_):
    p = _lp_value(p)
    _require_ball(T)
    _require_origin(T)
    d = T.dim
    cones = volume_vector(partition(T))
    L = math.sqrt(edge_content_sq(T))
    const = (d + 1) ** ((3 * d + 1) / 2 - 2 * d / p) / (math.factorial(d) * d ** (d / 2))
    return cones.norm(p), const * L ** (2.0 / p - 1.0), {"p": p, "edge_norm_exponent": 2.0 / p - 1.0}


def _local_normal_identity(T, vertex=None, **_):
    d = T.dim
    H = facet_normals(T, "hodge")
    rhs = (math.factorial(d) * simplex_volume(T.vertices)) ** (d - 1)
    vertices = range(T.n_vertices) if vertex is None else [int(vertex)]
    worst = None
    for i in vertices:
        # facets through v_i are the ones opposite every other vertex
        lhs = abs(float(np.linalg.det(np.delete(H, i, axis=0))))
        err = abs(lhs - rhs)
        if worst is None or err > worst[1]:
            worst = (i, err, lhs)
    return worst[2], rhs, {"vertex": worst[0]}


def _normal_simplex_volume(T, **_):
    d = T.dim
    H = facet_normals(T, "hodge")
    if not origin_is_interior(H):
        raise ConsistencyError("normal simplex does not contain the origin")
    lhs = simplex_volume(H)
    rhs = (d + 1) * math.factorial(d) ** (d - 2) * simplex_volume(T.vertices) ** (d - 1)
    return lhs, rhs, {"content_scale_volume": lhs / math.factorial(d - 1) ** d}


def _normal_simplex_vertex(T, **_):
    d = T.dim
    N = facet_normals(T, "content")
    if not origin_is_interior(N):
        raise ConsistencyError("normal simplex does not contain the origin")
    lhs = norm(origin_simplex_volumes(N), 2)
    F = norm(facet_contents(T), 2)
    return lhs, F**d / (math.factorial(d) * d ** (d / 2)), {}


def _isoperimetric(T, **_):
    d = T.dim
    printed = math.sqrt(d + 1) * math.factorial(d) ** (d - 1) * d ** (d / 2)
    lhs = printed / math.factorial(d - 1) ** d
    F = norm(facet_contents(T), 2)
    rhs = F**d / simplex_volume(T.vertices) ** (d - 1)
    return lhs, rhs, {"printed_constant": printed, "printed_form_holds": bool(printed <= rhs * (1 + TOL))}


def _normal_edge(T, **_):
    d = T.dim
    U = facet_normals(T, "unit")
    if not origin_is_interior(U):
        raise ConsistencyError("unit normal simplex does not contain the origin")
    return simplex_volume(U), edge_bound(d, _unit_simplex_edges(U)), {}


def _normal_cone_volume(T, edge=None, **_):
    d = T.dim
    V = T.vertices
    H = facet_normals(T, "hodge")
    vol = simplex_volume(V)
    edges = T.edges if edge is None else [tuple(edge)]
    worst = None
    for a, b in edges:
        incident = [j for j in range(T.n_vertices) if j not in (a, b)]
        lhs = facet_content(np.vstack([np.zeros(d), H[incident]]))
        rhs = (math.factorial(d) * vol) ** (d - 2) / math.factorial(d - 1) * float(np.linalg.norm(V[b] - V[a]))
        err = abs(lhs - rhs) / rhs
        if worst is None or err > worst[0]:
            worst = (err, lhs, rhs, (a, b))
    _, lhs, rhs, e = worst
    return lhs, rhs, {"edge": list(e)}


def _trace_augmented(Q) -> tuple[float, float]:
    aug = augmented_edge_frame(Q, include_synthetic=True)
    return aug.real_content_sq, aug.synthetic_content_sq


def _zq_half(Q):
    """(||T||^2, eps, T) with eps = <(Z/2 - I) T, T>."""
    T = volume_vector(partition(Q)).values
    Z = Z_MATRIX[Q.family]
    sq = float(T @ T)
    eps = float(T @ (0.5 * Z - np.eye(len(T))) @ T)
    return sq, eps, T


def _quad_ineq1(Q, **_):
    _require_ball(Q)
    all_terms = origin_simplex_volumes(Q.vertices)
    return norm(all_terms, 2), 1.0, {"origin_simplex_volumes": all_terms}


def _quad_ineq2(Q, **_):
    T = volume_vector(partition(Q)).values
    real, synth = _trace_augmented(Q)
    product = (T[0] + T[2]) * (T[1] + T[3])
    lhs = float(T @ T) + product
    return lhs, (real + synth) ** 2 / 128.0, {"T": T, "product": product,
                                             "real_sq": real, "synthetic_sq": synth}


def _quad_volume_max(Q, **_):
    _require_ball(Q)
    return Q.volume, 2.0, {}


def _pyr_ineq1(Q, **_):
    _require_ball(Q)
    return norm(origin_simplex_volumes(Q.vertices), 2), (5.0 / 3.0) ** 1.5 / 6.0, {}


def _ineq2_3d(Q):
    sq, eps, T = _zq_half(Q)
    real, synth = _trace_augmented(Q)
    rhs = (real + synth) ** 3 / (2 * 5**2 * 3**3 * 36)
    return sq + eps, rhs, {"T": T, "eps": eps, "real_sq": real, "synthetic_sq": synth}


def _pyr_ineq2(Q, **_):
    return _ineq2_3d(Q)


def _bipyr_ineq1(Q, **_):
    _require_ball(Q)
    lhs = norm(origin_simplex_volumes(Q.vertices), 2) ** 2
    return lhs, (5.0 / 3.0) ** 3 / 36.0, {}


def _bipyr_ineq2(Q, **_):
    return _ineq2_3d(Q)


def _conjecture(Q, **_):
    d = Q.dim
    c_d = spanning_tree_count(d + 2, contract_edge=True)
    sq, eps, T = _zq_half(Q)
    real, synth = _trace_augmented(Q)
    rhs = (real + synth) ** d / (c_d * math.factorial(d) ** 2 * d**d)
    return sq + eps, rhs, {"c_d": c_d, "eps": eps}


EVALUATORS: dict[InequalityId, Callable] = {
    InequalityId.VERTEX_SIMPLEX: _vertex_simplex,
    InequalityId.VOLUME_BOUND: _volume_bound,
    InequalityId.EDGE_SIMPLEX: _edge_simplex,
    InequalityId.LP_INTERP: _lp_interp,
    InequalityId.LP_INTERP_AS_STATED: _lp_interp_as_stated,
    InequalityId.LOCAL_NORMAL_IDENTITY: _local_normal_identity,
    InequalityId.NORMAL_SIMPLEX_VOLUME: _normal_simplex_volume,
    InequalityId.NORMAL_SIMPLEX_VERTEX: _normal_simplex_vertex,
    InequalityId.ISOPERIMETRIC: _isoperimetric,
    InequalityId.NORMAL_EDGE: _normal_edge,
    InequalityId.NORMAL_CONE_VOLUME: _normal_cone_volume,
    InequalityId.QUAD_INEQ1: _quad_ineq1,
    InequalityId.QUAD_INEQ2: _quad_ineq2,
    InequalityId.QUAD_VOLUME_MAX: _quad_volume_max,
    InequalityId.PYR_INEQ1: _pyr_ineq1,
    InequalityId.PYR_INEQ2: _pyr_ineq2,
    InequalityId.BIPYR_INEQ1: _bipyr_ineq1,
    InequalityId.BIPYR_INEQ2: _bipyr_ineq2,
    InequalityId.CONJECTURE_D23: _conjecture,
}


def evaluate(ident, P: InscribedPolytope, tol: float = TOL, eq_tol: float = EQ_TOL,
             **params) -> InequalityReport:
    """Evaluate one catalog entry on P.

    Extra keyword parameters: ``p`` for the LP_INTERP variants, ``vertex`` for
    LOCAL_NORMAL_IDENTITY, ``edge`` for NORMAL_CONE_VOLUME.  Identities report
    the worst vertex/edge when none is given.
    """
    ident = InequalityId.parse(ident)
    if P.family not in ident.families:
        raise ApplicabilityError(f"{ident.name} does not apply to {P.family.value}")
    if ident is InequalityId.CONJECTURE_D23 and P.dim not in (2, 3):
        raise ApplicabilityError("CONJECTURE_D23 is evaluated for d in {2, 3}")
    lhs, rhs, meta = EVALUATORS[ident](P, **params)
    metadata = {"family": P.family.value, "d": P.dim}
    metadata.update(meta)
    return make_report(ident, lhs, rhs, tol, eq_tol, metadata)


def applicable_ids(P: InscribedPolytope) -> list[InequalityId]:
    return [i for i in InequalityId if P.family in i.families]


def run_suite(P: InscribedPolytope, tol: float = TOL, eq_tol: float = EQ_TOL,
              lp_values=LP_VALUES, on_inapplicable: str = "skip") -> list[InequalityReport]:
    """Evaluate every catalog entry that applies to P, in catalog order.

    A failed inequality is reported, never raised.  Entries whose runtime
    preconditions fail (origin outside, vertex outside the unit ball) are
    skipped, or re-raised when ``on_inapplicable="raise"``.
    """
    out = []
    for ident in applicable_ids(P):
        ps = lp_values if ident in (InequalityId.LP_INTERP, InequalityId.LP_INTERP_AS_STATED) else (None,)
        for p in ps:
            kwargs = {} if p is None else {"p": p}
            try:
                out.append(evaluate(ident, P, tol, eq_tol, **kwargs))
            except (ApplicabilityError, ContainmentError):
                if on_inapplicable == "raise":
                    raise
    return out


# ---------------------------------------------------------------------------
# Z-forms
# ---------------------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class ZForm:
    matrix: np.ndarray
    volumes: np.ndarray
    value: float
    scale: int
    det_edge_frame: float
    relative_error: float

    @property
    def half_value(self) -> float:
        """``||T||^2 + eps(Q)``, i.e. ``<ZT, T> / 2``."""
        return 0.5 * self.value


def z_form(Q: InscribedPolytope, rtol: float = 1e-8) -> ZForm:
    """The family's Z matrix, partition volumes T and ``<ZT, T>``.

    Cross-checks ``det S_E(Q u Q^o) = scale * <ZT, T>``, with the determinant
    taken by Cauchy-Binet enumeration over the augmented edge frame, and raises
    ConsistencyError when they disagree.
    """
    if Q.family not in Z_MATRIX:
        raise ApplicabilityError(f"no Z-form for {Q.family.value}")
    Z = Z_MATRIX[Q.family]
    T = volume_vector(partition(Q)).values
    value = float(T @ Z @ T)
    scale = Z_SCALE[Q.family]
    det = cauchy_binet(augmented_edge_frame(Q).frame)
    rel = abs(det - scale * value) / max(abs(det), 1e-300)
    if rel > rtol:
        raise ConsistencyError(
            f"det S_E = {det!r} but {scale} * <ZT,T> = {scale * value!r} (rel {rel:.2e})")
    return ZForm(Z, T, value, scale, det, rel)


@dataclass(frozen=True, eq=False)
class ZSpectralReport:
    symmetric: bool
    orthant_nonnegative: bool
    nonnegative_entries: bool
    constant_diagonal: bool
    constant_row_sum: bool
    alpha: int | None
    rho: int | None
    eigenvalues: np.ndarray
    eigenvectors: np.ndarray
    spectrum_in_range: bool
    max_is_rho: bool
    ones_is_eigenvector: bool
    other_eigenvectors_mixed_sign: bool
    unique_positive_eigenvector: bool
    convention_dependent: bool

    @property
    def properties(self) -> dict:
        return {
            "a_symmetric": self.symmetric,
            "b_orthant_nonnegative": self.orthant_nonnegative,
            "c_nonnegative_entries": self.nonnegative_entries,
            "d_constant_diagonal": self.constant_diagonal,
            "e_constant_row_sum": self.constant_row_sum,
            "i_spectrum_in_0_rho": self.spectrum_in_range,
            "ii_max_is_rho": self.max_is_rho,
            "iii_ones_eigenvector": self.ones_is_eigenvector,
            "iv_other_eigenvectors_leave_orthant": self.other_eigenvectors_mixed_sign,
        }

    @property
    def all_pass(self) -> bool:
        return all(self.properties.values())


def z_spectral_properties(Z, n_samples: int = 1000, seed: int = 0,
                          tol: float = 1e-10) -> ZSpectralReport:
    """Check the structural properties of an integer Z matrix and its spectrum.

    Property (iv) is checked on the computed eigenbasis.  For a repeated
    eigenvalue the basis is not unique, which ``convention_dependent`` flags;
    the check used (every basis vector has coordinates of both signs) does not
    depend on the sign chosen for each vector.
    """
    Zi = np.asarray(Z)
    if not np.issubdtype(Zi.dtype, np.integer):
        raise ValueError("Z must be an integer matrix")
    n = len(Zi)
    symmetric = bool(np.array_equal(Zi, Zi.T))
    nonneg = bool(np.all(Zi >= 0))
    diag = np.diag(Zi)
    const_diag = bool(np.all(diag == diag[0]))
    rows = Zi.sum(axis=1)
    const_rows = bool(np.all(rows == rows[0]))
    alpha = int(diag[0]) if const_diag else None
    rho = int(rows[0]) if const_rows else None

    rng = np.random.default_rng(seed)
    X = rng.uniform(0.0, 1.0, size=(n_samples, n))
    quad = np.einsum("ij,jk,ik->i", X, Zi.astype(float), X)
    orthant = bool(np.all(quad >= 0))

    w, U = jacobi_eigh(Zi.astype(float))
    ones = np.ones(n, dtype=Zi.dtype)
    ones_ok = rho is not None and bool(np.array_equal(Zi @ ones, rho * ones))
    if rho is None:
        in_range = max_rho = mixed = False
    else:
        in_range = bool(np.all(w >= -tol) and np.all(w <= rho + tol))
        max_rho = bool(abs(w[-1] - rho) <= tol * max(1, rho))
        # every basis vector not along the ones vector must have both signs
        along_ones = [k for k in range(n) if np.allclose(np.abs(U[:, k]), 1 / math.sqrt(n), atol=1e-8)
                      and (np.all(U[:, k] > 0) or np.all(U[:, k] < 0))]
        mixed = all(U[:, k].min() < -tol and U[:, k].max() > tol
                    for k in range(n) if k not in along_ones)
    positive = [k for k in range(n) if np.all(U[:, k] >= -tol) or np.all(U[:, k] <= tol)]
    unique_pos = all(np.allclose(np.abs(U[:, k]), 1 / math.sqrt(n), atol=1e-8) for k in positive)
    repeated = bool(np.any(np.diff(w) <= 1e-8))
    return ZSpectralReport(symmetric, orthant, nonneg, const_diag, const_rows, alpha, rho,
                           w, U, in_range, max_rho, ones_ok, mixed, unique_pos, repeated)
