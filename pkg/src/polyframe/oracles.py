"""Integer and enumeration oracles for the combinatorial constants.

``cayley_constant`` counts spanning d-subsets of a simplex's edge vectors by
brute force; ``spanning_tree_count`` applies the matrix-tree theorem with
exact integer (Bareiss) elimination.
"""

from __future__ import annotations

import itertools

import numpy as np

from .errors import ParameterError, SamplingError
from .frames import subset_determinants

# |det| / prod(norms) above this counts as spanning
_NONZERO = 1e-9
# a generic sample keeps every ratio outside this band
_AMBIGUOUS = (1e-12, 1e-6)


def cayley_constant(d: int, seed: int = 0, max_tries: int = 100) -> int:
    """Number of d-subsets of the C(d+1, 2) edge vectors of a generic simplex
    that span R^d.  Equals (d+1)^(d-1).
    """
    if not 2 <= d <= 6:
        raise ParameterError(f"cayley_constant supports 2 <= d <= 6, got {d}")
    rng = np.random.default_rng(seed)
    pairs = list(itertools.combinations(range(d + 1), 2))
    idx = np.array(list(itertools.combinations(range(len(pairs)), d)))
    for _ in range(max_tries):
        V = rng.standard_normal((d + 1, d))
        E = np.array([V[j] - V[i] for i, j in pairs])
        dets = np.abs(subset_determinants(E))
        scale = np.prod(np.linalg.norm(E, axis=1)[idx], axis=1)
        ratio = dets / scale
        if np.any((ratio > _AMBIGUOUS[0]) & (ratio < _AMBIGUOUS[1])):
            continue  # near-coincidence that is not combinatorially forced
        return int(np.count_nonzero(ratio > _NONZERO))
    raise SamplingError("could not draw a generic simplex")


def bareiss_determinant(M) -> int:
    """Exact determinant of an integer matrix by fraction-free elimination."""
    A = [[int(x) for x in row] for row in M]
    n = len(A)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if A[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if A[i][k] != 0), None)
            if swap is None:
                return 0
            A[k], A[swap] = A[swap], A[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                A[i][j] = (A[i][j] * A[k][k] - A[i][k] * A[k][j]) // prev
        prev = A[k][k]
    return sign * A[n - 1][n - 1]


def laplacian(n: int, edges) -> list[list[int]]:
    L = [[0] * n for _ in range(n)]
    for i, j in edges:
        L[i][j] -= 1
        L[j][i] -= 1
        L[i][i] += 1
        L[j][j] += 1
    return L


def complete_graph_edges(n: int, remove_edge: bool = False,
                         contract_edge: bool = False) -> list[tuple[int, int]]:
    """Edges of K_n, optionally with {0, 1} deleted or contracted.

    Contraction merges vertex 1 into vertex 0 and relabels the rest, keeping
    parallel edges, so the result is a multigraph on n - 1 vertices.
    """
    if remove_edge and contract_edge:
        raise ParameterError("choose one of remove_edge and contract_edge")
    edges = list(itertools.combinations(range(n), 2))
    if remove_edge:
        return edges[1:]
    if contract_edge:
        relabel = lambda v: 0 if v <= 1 else v - 1  # noqa: E731
        return [(relabel(i), relabel(j)) for i, j in edges[1:]]
    return edges


def spanning_tree_count(n: int, remove_edge: bool = False, contract_edge: bool = False) -> int:
    """Spanning trees of K_n, of K_n minus the edge {0, 1}, or of K_n / {0, 1}.

    Any cofactor of the graph Laplacian; here the last row and column are
    deleted.  Deletion gives (n-2) n^(n-3); contraction gives 2 n^(n-3), which
    for n = d + 2 is the constant 2 (d+2)^(d-1).
    """
    if not 3 <= n <= 12:
        raise ParameterError(f"spanning_tree_count supports 3 <= n <= 12, got {n}")
    m = n - 1 if contract_edge else n
    L = laplacian(m, complete_graph_edges(n, remove_edge, contract_edge))
    minor = [row[:-1] for row in L[:-1]]
    return bareiss_determinant(minor)


def brute_force_spanning_trees(n: int, edges) -> int:
    """Count spanning trees by testing every (n-1)-edge subset for acyclicity."""
    count = 0
    for subset in itertools.combinations(edges, n - 1):
        parent = list(range(n))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        ok = True
        for i, j in subset:
            ri, rj = find(i), find(j)
            if ri == rj:
                ok = False
                break
            parent[ri] = rj
        count += ok
    return count


def conjecture_constant(d: int) -> int:
    """2 (d+2)^(d-1): spanning trees of K_{d+2} with one edge contracted."""
    return 2 * (d + 2) ** (d - 1)


def cayley_formula(d: int) -> int:
    return (d + 1) ** (d - 1)


__all__ = [
    "cayley_constant",
    "spanning_tree_count",
    "bareiss_determinant",
    "brute_force_spanning_trees",
    "conjecture_constant",
    "cayley_formula",
    "laplacian",
    "complete_graph_edges",
]
