import math

import numpy as np
import pytest

from polyframe.errors import ApplicabilityError, ContainmentError
from polyframe.geometry import make_polytope, make_regular_simplex
from polyframe.inequalities import (
    BIPYR_Z,
    QUAD_Z,
    InequalityId,
    applicable_ids,
    evaluate,
    make_report,
    run_suite,
    z_form,
    z_spectral_properties,
)
from polyframe.search import sample_polytope

from .conftest import perturbed

SHARP_AT_REGULAR = (
    InequalityId.VERTEX_SIMPLEX,
    InequalityId.VOLUME_BOUND,
    InequalityId.EDGE_SIMPLEX,
    InequalityId.ISOPERIMETRIC,
    InequalityId.NORMAL_SIMPLEX_VERTEX,
    InequalityId.NORMAL_EDGE,
)


@pytest.mark.parametrize("d", range(2, 7))
@pytest.mark.parametrize("ident", SHARP_AT_REGULAR)
def test_equality_at_regular_simplex(ident, d):
    r = evaluate(ident, make_regular_simplex(d))
    assert r.equality and r.holds


@pytest.mark.parametrize("d", range(2, 7))
@pytest.mark.parametrize("ident", SHARP_AT_REGULAR)
def test_strict_after_perturbation(ident, d):
    r = evaluate(ident, perturbed(make_regular_simplex(d)))
    assert r.holds and r.relative_gap > 1e-4


def test_frozen_values_tetrahedron(tetra):
    assert evaluate("VOLUME_BOUND", tetra).lhs == pytest.approx(8 / (9 * math.sqrt(3)))
    iso = evaluate("ISOPERIMETRIC", tetra)
    assert iso.lhs == pytest.approx(math.sqrt(4) * 36 * 3**1.5 / 8)
    # the uncorrected constant exceeds the regular tetrahedron's ratio
    assert iso.metadata["printed_constant"] == pytest.approx(374.1229744348775)
    assert not iso.metadata["printed_form_holds"]
    nv = evaluate("NORMAL_SIMPLEX_VOLUME", tetra)
    assert nv.lhs == pytest.approx(24 * tetra.volume**2)


def test_identity_gap_convention(tetra):
    r = make_report(InequalityId.LOCAL_NORMAL_IDENTITY, 1.0, 1.1)
    assert r.gap < 0 and not r.holds
    r = make_report(InequalityId.LOCAL_NORMAL_IDENTITY, 1.2, 1.1)
    assert r.gap < 0 and not r.holds
    r = make_report(InequalityId.EDGE_SIMPLEX, 1.0, 1.1)
    assert r.gap == pytest.approx(0.1) and r.holds and not r.equality


@pytest.mark.parametrize("d", (2, 3, 4))
def test_identities_on_random_simplices(d, rng):
    for _ in range(20):
        T = sample_polytope("simplex", d, rng)
        for ident in ("LOCAL_NORMAL_IDENTITY", "NORMAL_SIMPLEX_VOLUME", "NORMAL_CONE_VOLUME"):
            assert abs(evaluate(ident, T).relative_gap) < 1e-8


def test_lp_variants_on_triangle():
    T = make_regular_simplex(2)
    assert evaluate("LP_INTERP", T, p=1).equality
    bad = evaluate("LP_INTERP_AS_STATED", T, p=1)
    assert not bad.holds and not bad.asserted
    assert bad.rhs == pytest.approx(math.sqrt(3) / 4)
    with pytest.raises(ApplicabilityError):
        evaluate("LP_INTERP", T, p=3)


def test_lp_interpolates_endpoints(rng):
    T = sample_polytope("simplex", 3, rng)
    assert evaluate("LP_INTERP", T, p=2).rhs == pytest.approx(evaluate("VERTEX_SIMPLEX", T).rhs)
    assert evaluate("LP_INTERP", T, p=1).rhs == pytest.approx(evaluate("EDGE_SIMPLEX", T).rhs)


def test_square_cases(square):
    rep = {r.id: r for r in run_suite(square)}
    for ident in (InequalityId.QUAD_INEQ1, InequalityId.QUAD_INEQ2, InequalityId.QUAD_VOLUME_MAX):
        assert rep[ident].equality


def test_rectangle_is_not_an_equality_case():
    a = 0.6
    R = make_polytope("quadrilateral", angles=[a, np.pi - a, np.pi + a, 2 * np.pi - a])
    r = evaluate("QUAD_INEQ2", R)
    assert r.holds and r.relative_gap > 1e-3


def test_bipyramid_ineq2_equality():
    B = make_polytope("bipyramid_tri", R=1, h=math.sqrt(3) / 2)
    assert evaluate("BIPYR_INEQ2", B).equality
    assert evaluate("CONJECTURE_D23", B).equality


def test_applicability(square, tetra):
    with pytest.raises(ApplicabilityError):
        evaluate("QUAD_INEQ1", tetra)
    with pytest.raises(ApplicabilityError):
        evaluate("VERTEX_SIMPLEX", square)
    V = np.array([[1.0, 0.0], [0.0, 1.0], [math.sqrt(0.5), math.sqrt(0.5)]])
    T = make_polytope("simplex", vertices=V)
    with pytest.raises(ContainmentError):
        evaluate("VERTEX_SIMPLEX", T)
    assert InequalityId.QUAD_INEQ1 in applicable_ids(square)
    # run_suite skips rather than raises
    assert all(r.id is not InequalityId.VERTEX_SIMPLEX for r in run_suite(T))
    with pytest.raises(ContainmentError):
        run_suite(T, on_inapplicable="raise")


def test_ball_requirement():
    B = make_polytope("bipyramid_tri", R=1, h=1.2)
    with pytest.raises(ApplicabilityError):
        evaluate("BIPYR_INEQ1", B)
    assert evaluate("BIPYR_INEQ2", B).holds


def test_report_serializable(tetra):
    import json

    for r in run_suite(tetra):
        json.dumps(r.to_dict())


def test_z_form_square(square):
    z = z_form(square)
    # T = (1/2, 1/2, 1/2, 1/2) and the entries of Z sum to 16
    assert z.value == pytest.approx(4.0)
    assert z.det_edge_frame == pytest.approx(16 * z.value)


def test_z_form_random(rng):
    for fam in ("quadrilateral", "pyramid_quad", "bipyramid_tri"):
        for _ in range(30):
            P = sample_polytope(fam, 2 if fam == "quadrilateral" else 3, rng)
            assert z_form(P).relative_error < 1e-8


@pytest.mark.parametrize("Z", [QUAD_Z, BIPYR_Z])
def test_z_spectral_lemma(Z):
    s = z_spectral_properties(Z)
    assert s.all_pass
    assert s.alpha == 2
    assert s.unique_positive_eigenvector


def test_z_spectrum_values():
    assert np.allclose(z_spectral_properties(QUAD_Z).eigenvalues, [0, 2, 2, 4], atol=1e-10)
    assert np.allclose(z_spectral_properties(BIPYR_Z).eigenvalues, [0, 0, 2, 2, 3, 5], atol=1e-10)


def test_z_spectral_negative_control():
    s = z_spectral_properties(2 * np.eye(4, dtype=int))
    assert not s.all_pass
    assert not s.unique_positive_eigenvector
    with pytest.raises(ValueError):
        z_spectral_properties(np.eye(3) * 0.5)
