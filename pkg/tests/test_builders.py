import math

import numpy as np
import pytest

from polyframe.builders import (
    augmented_edge_frame,
    centroid_frame,
    edge_frame,
    facet_normals,
    normal_frames,
    normal_simplex,
    vertex_frame,
)
from polyframe.errors import FamilyError
from polyframe.frames import frame_operator
from polyframe.geometry import facet_content, make_polytope, make_regular_simplex
from polyframe.oracles import cayley_formula
from polyframe.search import sample_polytope


@pytest.mark.parametrize("d", range(2, 6))
def test_regular_simplex_frames_tight(d):
    T = make_regular_simplex(d)
    sv = frame_operator(vertex_frame(T))
    assert sv.tightness_deviation < 1e-12
    assert sv.tight_constant == pytest.approx((d + 1) / d)
    se = frame_operator(edge_frame(T))
    # sum of squared edge lengths of the inscribed regular simplex is (d+1)^2
    assert se.trace == pytest.approx((d + 1) ** 2)
    assert se.tightness_deviation < 1e-12


def test_edge_labels(tetra):
    assert edge_frame(tetra).labels[:3] == ("e_12", "e_13", "e_14")


def test_edge_frame_determinant_cayley(rng):
    for d in (2, 3, 4):
        T = sample_polytope("simplex", d, rng)
        det = frame_operator(edge_frame(T)).determinant
        assert det == pytest.approx(cayley_formula(d) * (math.factorial(d) * T.volume) ** 2, rel=1e-9)


def test_centroid_frame_identity(rng):
    for d in (2, 3, 4):
        T = sample_polytope("simplex", d, rng)
        V = T.vertices
        s = V.sum(axis=0)
        S_c = frame_operator(centroid_frame(T)).operator
        assert np.allclose(S_c, (V.T @ V + (d - 1) * np.outer(s, s)) / d**2)


def test_centroid_frame_centered(tetra):
    S_c = frame_operator(centroid_frame(tetra)).operator
    S_v = frame_operator(vertex_frame(tetra)).operator
    assert np.allclose(S_c, S_v / 9)


def test_normal_scales(rng):
    T = sample_polytope("simplex", 4, rng)
    C = facet_normals(T, "content")
    H = facet_normals(T, "hodge")
    U = facet_normals(T, "unit")
    contents = [facet_content(T.vertices[list(f)]) for f in T.facets]
    assert np.allclose(np.linalg.norm(C, axis=1), contents)
    assert np.allclose(H, 6 * C)
    assert np.allclose(np.linalg.norm(U, axis=1), 1)
    # outward: normal j points away from the opposite vertex
    for j, f in enumerate(T.facets):
        assert np.dot(C[j], T.vertices[f[0]] - T.vertices[j]) > 0
    # Minkowski: content normals sum to zero
    assert np.allclose(C.sum(axis=0), 0, atol=1e-12)


def test_normal_frames_and_simplex(tetra):
    unit, content = normal_frames(tetra)
    assert len(unit) == len(content) == 4
    N = normal_simplex(tetra)
    assert N.family.value == "simplex"
    with pytest.raises(FamilyError):
        centroid_frame(make_polytope("pyramid_quad", z0=0.0))


def test_augmented_edge_sets(square):
    aug = augmented_edge_frame(square)
    assert aug.synthetic_labels == ("e_13^o", "e_24^o")
    assert aug.real_content_sq == pytest.approx(8.0)
    assert aug.synthetic_content_sq == pytest.approx(8.0)
    assert len(augmented_edge_frame(square, include_synthetic=False).frame) == 4
    B = make_polytope("bipyramid_tri", R=1, h=1)
    assert augmented_edge_frame(B).synthetic_labels == ("e_45^o",)
    with pytest.raises(FamilyError):
        augmented_edge_frame(make_regular_simplex(2))
