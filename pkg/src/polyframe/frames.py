"""Finite frames in R^d: frame operator, spectral summary, Cauchy-Binet.

The frame operator of ``{v_1, ..., v_n}`` is ``S = sum_j v_j v_j^T``.  Its
eigenvalues are computed with a cyclic Jacobi solver (deterministic sweep
order) and its determinant with an LU factorization, so that the Cauchy-Binet
sum can serve as an independent check on ``det S``.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

import numpy as np

from .errors import DimensionError, NotAFrameError, ParameterError, SizeError

RANK_TOL = 1e-10
JACOBI_TOL = 1e-13
MAX_SUBSETS = 10**6
_CHUNK = 20_000


@dataclass(frozen=True, eq=False)
class Frame:
    """An ordered, spanning list of vectors in R^d."""

    dim: int
    vectors: np.ndarray
    labels: tuple | None = None

    def __post_init__(self):
        V = np.array(self.vectors, dtype=float)
        if V.ndim != 2 or V.shape[1] != self.dim:
            raise DimensionError(f"frame vectors must have shape (n, {self.dim}), got {V.shape}")
        if self.dim < 1:
            raise DimensionError("frame dimension must be positive")
        if self.labels is not None:
            labels = tuple(self.labels)
            if len(labels) != len(V):
                raise ParameterError("one label per frame vector")
            object.__setattr__(self, "labels", labels)
        s = np.linalg.svd(V, compute_uv=False) if len(V) else np.zeros(1)
        if len(V) < self.dim or s[-1] <= RANK_TOL * max(s[0], RANK_TOL):
            raise NotAFrameError("vectors do not span R^%d" % self.dim)
        V.flags.writeable = False
        object.__setattr__(self, "vectors", V)

    @classmethod
    def from_vectors(cls, vectors, labels=None) -> "Frame":
        V = np.atleast_2d(np.asarray(vectors, dtype=float))
        return cls(V.shape[1], V, labels)

    def __len__(self) -> int:
        return len(self.vectors)

    def analysis(self, x) -> np.ndarray:
        """``F x = (<x, v_j>)_j``."""
        return self.vectors @ np.asarray(x, dtype=float)

    def synthesis(self, y) -> np.ndarray:
        """``F* y = sum_j y_j v_j``."""
        return self.vectors.T @ np.asarray(y, dtype=float)


@dataclass(frozen=True, eq=False)
class FrameOperatorSummary:
    operator: np.ndarray
    eigenvalues: np.ndarray
    eigenvectors: np.ndarray
    lower_bound: float
    upper_bound: float
    trace: float
    determinant: float
    tightness_deviation: float

    @property
    def dim(self) -> int:
        return len(self.operator)

    @property
    def tight_constant(self) -> float:
        return self.trace / self.dim


def jacobi_eigh(A, tol: float = JACOBI_TOL, max_sweeps: int = 100):
    """Eigen-decomposition of a small symmetric matrix by cyclic Jacobi rotations.

    Sweeps visit pairs (p, q), p < q, in row order and stop once the
    off-diagonal Frobenius norm is at most ``tol * max(1, ||A||_F)``.
    Returns ascending eigenvalues and the matching orthonormal eigenvectors
    (as columns).
    """
    A = np.array(A, dtype=float)
    n = A.shape[0]
    if A.shape != (n, n):
        raise DimensionError("jacobi_eigh needs a square matrix")
    A = 0.5 * (A + A.T)
    V = np.eye(n)
    threshold = tol * max(1.0, float(np.linalg.norm(A)))
    for _ in range(max_sweeps):
        off = math.sqrt(max(float(np.sum(A * A) - np.sum(np.diag(A) ** 2)), 0.0))
        if off <= threshold:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = float(A[p, q])
                if apq == 0.0:
                    continue
                # plain floats: an infinite tau just gives t = 0
                tau = (float(A[q, q]) - float(A[p, p])) / (2.0 * apq)
                t = (1.0 if tau >= 0 else -1.0) / (abs(tau) + math.hypot(1.0, tau))
                c = 1.0 / math.sqrt(1.0 + t * t)
                s = t * c
                col_p, col_q = A[:, p].copy(), A[:, q].copy()
                A[:, p] = c * col_p - s * col_q
                A[:, q] = s * col_p + c * col_q
                row_p, row_q = A[p, :].copy(), A[q, :].copy()
                A[p, :] = c * row_p - s * row_q
                A[q, :] = s * row_p + c * row_q
                A[p, q] = A[q, p] = 0.0
                v_p, v_q = V[:, p].copy(), V[:, q].copy()
                V[:, p] = c * v_p - s * v_q
                V[:, q] = s * v_p + c * v_q
    w = np.diag(A).copy()
    order = np.argsort(w, kind="stable")
    return w[order], V[:, order]


def tightness_deviation(S) -> float:
    """``||S - (tr S / d) I||_F / (tr S / d)``; zero exactly for tight frames."""
    S = np.asarray(S, dtype=float)
    d = len(S)
    a = np.trace(S) / d
    return float(np.linalg.norm(S - a * np.eye(d)) / a)


def frame_operator(f: Frame) -> FrameOperatorSummary:
    V = f.vectors
    S = V.T @ V
    S = 0.5 * (S + S.T)
    w, U = jacobi_eigh(S)
    if w[0] <= 0:
        raise NotAFrameError("frame operator is not positive definite")
    # LU with partial pivoting, independent of the eigensolver
    det = float(np.linalg.det(S))
    return FrameOperatorSummary(
        operator=S,
        eigenvalues=w,
        eigenvectors=U,
        lower_bound=float(w[0]),
        upper_bound=float(w[-1]),
        trace=float(np.trace(S)),
        determinant=det,
        tightness_deviation=tightness_deviation(S),
    )


def _as_vectors(f) -> np.ndarray:
    if isinstance(f, Frame):
        return f.vectors
    return np.atleast_2d(np.asarray(f, dtype=float))


def subset_determinants(f, max_subsets: int = MAX_SUBSETS) -> np.ndarray:
    """Determinants of all d x d submatrices, subsets in lexicographic order."""
    V = _as_vectors(f)
    n, d = V.shape
    if n < d:
        raise SizeError(f"need at least d={d} vectors, got {n}")
    total = math.comb(n, d)
    if total > max_subsets:
        raise SizeError(f"C({n},{d}) = {total} subsets exceeds the guard {max_subsets}")
    combos = itertools.combinations(range(n), d)
    out = np.empty(total)
    start = 0
    while start < total:
        idx = np.array(list(itertools.islice(combos, _CHUNK)), dtype=np.intp)
        out[start:start + len(idx)] = np.linalg.det(V[idx])
        start += len(idx)
    return out


def cauchy_binet(f, max_subsets: int = MAX_SUBSETS) -> float:
    """``sum over d-subsets of det(V_J)^2``, which equals ``det S``.

    Summation is compensated (``math.fsum``) over the lexicographic order, so
    the result does not depend on how the subsets were evaluated.
    """
    dets = subset_determinants(f, max_subsets)
    return math.fsum(dets * dets)


def trace_det_gap(s: FrameOperatorSummary) -> float:
    """``(tr S / d)^d - det S``, nonnegative by AM-GM, zero iff tight."""
    return (s.trace / s.dim) ** s.dim - s.determinant


def is_tight(f: Frame, tol: float = 1e-9) -> bool:
    if tol <= 0:
        raise ParameterError("tol must be positive")
    return frame_operator(f).tightness_deviation <= tol
