import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from polyframe.errors import (
    ArityError,
    ContainmentError,
    DegeneracyError,
    DimensionError,
    OrderingError,
    ParameterError,
)
from polyframe.geometry import (
    Family,
    facet_content,
    hodge_complement,
    make_polytope,
    make_regular_simplex,
    norm,
    origin_is_interior,
    origin_simplex_volumes,
    partition,
    simplex_volume,
    volume_vector,
)
from polyframe.search import sample_polytope

# vol_d of the regular simplex inscribed in the unit sphere
REGULAR_VOLUME = {2: 3 * math.sqrt(3) / 4, 3: 8 / (9 * math.sqrt(3)), 4: 0.14557734228514255}


@pytest.mark.parametrize("d", range(2, 7))
def test_regular_simplex_on_sphere(d):
    T = make_regular_simplex(d)
    assert T.on_sphere
    assert np.allclose(np.linalg.norm(T.vertices, axis=1), 1.0, atol=1e-14)
    G = T.vertices @ T.vertices.T
    off = G[~np.eye(d + 1, dtype=bool)]
    assert np.allclose(off, -1.0 / d, atol=1e-14)
    if d in REGULAR_VOLUME:
        assert T.volume == pytest.approx(REGULAR_VOLUME[d], rel=1e-13)


def test_regular_triangle_angles():
    V = make_regular_simplex(2).vertices
    deg = np.degrees(np.arctan2(V[:, 1], V[:, 0])) % 360
    assert np.allclose(np.sort(deg), [90, 210, 330])


def test_facet_content_matches_triangle_area():
    P = np.array([[0, 0, 0], [2, 0, 0], [0, 3, 0]], float)
    assert facet_content(P) == pytest.approx(3.0)
    assert facet_content(P[:2]) == pytest.approx(2.0)


def test_hodge_complement_is_cross_product(rng):
    a, b = rng.standard_normal((2, 3))
    assert np.allclose(hodge_complement(np.array([a, b])), np.cross(a, b))


def test_hodge_complement_orthogonal(rng):
    for d in range(2, 6):
        W = rng.standard_normal((d - 1, d))
        n = hodge_complement(W)
        assert np.allclose(W @ n, 0, atol=1e-12)
        # length is the (d-1)-volume of the parallelotope
        assert np.linalg.norm(n) == pytest.approx(math.sqrt(np.linalg.det(W @ W.T)))


def test_square_volume_and_partition(square):
    assert square.volume == pytest.approx(2.0)
    part = partition(square)
    assert np.allclose(part.base_point, 0, atol=1e-15)
    assert np.allclose(volume_vector(part).values, 0.5)


def test_partition_volumes_sum(rng):
    for fam, d in [("simplex", 3), ("quadrilateral", 2), ("pyramid_quad", 3), ("bipyramid_tri", 3)]:
        for k in range(20):
            P = sample_polytope(fam, d, rng)
            assert volume_vector(partition(P)).values.sum() == pytest.approx(P.volume, rel=1e-10)


def test_simplex_partition_needs_origin():
    V = np.array([[1.0, 0.0], [0.0, 1.0], [math.sqrt(0.5), math.sqrt(0.5)]])
    T = make_polytope("simplex", vertices=V)
    assert not origin_is_interior(V)
    with pytest.raises(ContainmentError):
        partition(T)


def test_origin_simplex_volumes_cauchy_binet(rng):
    # sum of squares of the origin simplex volumes is det(V^T V) / d!^2
    V = rng.standard_normal((5, 3))
    vols = origin_simplex_volumes(V)
    assert len(vols) == 10
    assert np.sum(vols**2) == pytest.approx(np.linalg.det(V.T @ V) / 36)


def test_pyramid_volume_formula():
    for z0 in (-0.5, -1 / 3, 0.2):
        P = make_polytope("pyramid_quad", z0=z0)
        assert P.volume == pytest.approx(2 * (1 - z0**2) * (1 - z0) / 3)
        assert P.on_sphere


def test_bipyramid_flags():
    B = make_polytope("bipyramid_tri", R=1, h=1)
    assert B.on_sphere
    assert B.volume == pytest.approx(2 * (3 * math.sqrt(3) / 4) / 3)
    assert not make_polytope("bipyramid_tri", R=0.5, h=0.7).on_sphere


@pytest.mark.parametrize("kwargs, exc", [
    (dict(family="quadrilateral", angles=[0, 2, 1, 3]), OrderingError),
    (dict(family="quadrilateral", angles=[0, 1, 2]), ArityError),
    (dict(family="pyramid_quad", z0=1.2), ParameterError),
    (dict(family="bipyramid_tri", R=1, h=-1), ParameterError),
    (dict(family="simplex", vertices=[[0, 0], [1, 0], [2, 0]]), DegeneracyError),
    (dict(family="quadrilateral", vertices=np.eye(4)), DimensionError),
])
def test_constructor_errors(kwargs, exc):
    with pytest.raises(exc):
        make_polytope(**kwargs)


def test_family_parse():
    assert Family.parse("PYRAMID_QUAD") is Family.PYRAMID_QUAD
    assert Family.parse(Family.SIMPLEX) is Family.SIMPLEX
    with pytest.raises(ValueError):
        Family.parse("cube")


def test_norm_properties():
    assert norm([3, 4]) == 5
    assert norm([1, 1, 1], p=1) == 3
    assert norm([1, 1], weights=[4, 4]) == pytest.approx(2 * math.sqrt(2))
    with pytest.raises(ParameterError):
        norm([1], p=0.5)


@settings(max_examples=50, deadline=None)
@given(st.integers(0, 10_000), st.sampled_from([2, 3, 4]))
def test_sampled_simplex_contains_origin(seed, d):
    T = sample_polytope("simplex", d, seed)
    assert origin_is_interior(T.vertices)
    assert simplex_volume(T.vertices) > 1e-6
    assert T.on_sphere


@settings(max_examples=50, deadline=None)
@given(st.integers(0, 10_000))
def test_lp_norm_monotone(seed):
    v = np.random.default_rng(seed).random(6)
    assert norm(v, 1) >= norm(v, 1.5) >= norm(v, 2) - 1e-15
