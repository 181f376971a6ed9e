import math

import numpy as np
import pytest

from polyframe.errors import ApplicabilityError, ParameterError
from polyframe.geometry import quad_center
from polyframe.inequalities import InequalityId
from polyframe.search import (
    expand_checks,
    falsification_campaign,
    pyramid_volume_maximum,
    sample_polytope,
    tightness_search,
    verify_known_tight_configs,
)


def test_sample_determinism():
    a = sample_polytope("simplex", 2, 42)
    b = sample_polytope("simplex", 2, 42)
    assert np.array_equal(a.vertices, b.vertices)


def test_quadrilateral_diagonals_cross():
    for seed in range(50):
        Q = sample_polytope("quadrilateral", 2, seed)
        quad_center(Q.vertices)  # raises when the diagonals miss


def test_bipyramid_samples_in_ball():
    for seed in range(50):
        B = sample_polytope("bipyramid_tri", 3, seed)
        assert np.all(np.linalg.norm(B.vertices, axis=1) <= 1 + 1e-12)


def test_sample_dimension_check():
    with pytest.raises(ParameterError):
        sample_polytope("pyramid_quad", 2, 0)


def test_expand_checks():
    checks = expand_checks(["LP_INTERP", "EDGE_SIMPLEX", "LP_INTERP_AS_STATED(p=1)"], lp_values=(1, 2))
    assert checks == [(InequalityId.LP_INTERP, 1.0), (InequalityId.LP_INTERP, 2.0),
                      (InequalityId.EDGE_SIMPLEX, None), (InequalityId.LP_INTERP_AS_STATED, 1.0)]


def test_campaign_counts():
    c = falsification_campaign(["VERTEX_SIMPLEX", "LP_INTERP_AS_STATED(p=1)"], "simplex", 2, 100, seed=3)
    good, bad = c.results
    assert good.violations == 0 and good.min_relative_gap >= 0
    assert bad.violations > 0 and not bad.asserted
    assert c.total_violations == 0
    assert len(c.rows) == 200
    assert bad.violations == sum(1 for r in c.rows if r[1] == bad.id and r[7] < -1e-9)


def test_campaign_worker_independent():
    args = (["QUAD_INEQ2", "QUAD_INEQ1"], "quadrilateral", 2, 120, 5)
    a = falsification_campaign(*args, workers=1, chunk_size=25)
    b = falsification_campaign(*args, workers=2, chunk_size=25)
    assert a.csv() == b.csv()
    assert [r.min_relative_gap for r in a.results] == [r.min_relative_gap for r in b.results]


def test_campaign_rejects_wrong_family():
    with pytest.raises(ApplicabilityError):
        falsification_campaign(["QUAD_INEQ1"], "simplex", 2, 10)
    with pytest.raises(ParameterError):
        falsification_campaign(["QUAD_INEQ1"], "quadrilateral", 2, 0)


def test_known_tight_configs():
    rows = verify_known_tight_configs(include_extra=True)
    assert all(r["pass"] for r in rows)
    constants = {r["config"]: r["constant"] for r in rows}
    assert constants["pyramid z0=1/sqrt(6), vertex frame"] == pytest.approx(5 / 3)
    assert constants["bipyramid h/R=sqrt(3)/2, augmented edge frame"] == pytest.approx(7.5)
    assert constants["bipyramid R/h=2/sqrt(5), edge frame without apex segment"] == pytest.approx(6.0)


@pytest.mark.parametrize("family, frame, target", [
    ("pyramid_quad", "augmented_edge", -3 / 7),
    ("pyramid_quad", "augmented_edge_no_synthetic", -1 / 5),
    ("bipyramid_tri", "augmented_edge", math.sqrt(3) / 2),
    ("bipyramid_tri", "augmented_edge_no_synthetic", math.sqrt(5) / 2),
])
def test_tightness_search(family, frame, target):
    res = tightness_search(family, frame, seed=1)
    assert res.value <= 1e-9
    assert res.value <= res.initial_value
    assert abs(res.optima[0]["x"] - target) < 1e-6 if len(res.optima) == 1 else True
    assert any(abs(o["x"] - target) < 1e-6 for o in res.optima)


def test_pyramid_vertex_frame_has_two_optima():
    res = tightness_search("pyramid_quad", "vertex", seed=0)
    xs = sorted(o["x"] for o in res.optima)
    assert len(xs) == 2
    assert xs[0] == pytest.approx(-1 / math.sqrt(6), abs=1e-6)
    assert xs[1] == pytest.approx(1 / math.sqrt(6), abs=1e-6)


def test_pyramid_volume_maximum():
    r = pyramid_volume_maximum()
    assert r["z0"] == pytest.approx(-1 / 3, abs=1e-6)
    assert r["volume"] == pytest.approx(64 / 81)
