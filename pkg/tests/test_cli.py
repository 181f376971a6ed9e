import json

import numpy as np
import pytest

from polyframe.cli import main
from polyframe.io import load_polytope, polytope_from_dict, polytope_to_dict
from polyframe.errors import PolytopeFormatError
from polyframe.search import sample_polytope


def test_verify_simplex(tmp_path):
    out = tmp_path / "r.json"
    assert main(["verify", "--family", "simplex", "--dim", "3", "--seed", "7", "--out", str(out)]) == 0
    doc = json.loads(out.read_text())
    assert len(doc["results"]) >= 9
    assert doc["config"]["seed"] == 7 and doc["config"]["tol"] == 1e-9


def test_verify_square(tmp_path):
    sq = tmp_path / "square.json"
    sq.write_text(json.dumps({"family": "quadrilateral", "vertices": [[1, 0], [0, 1], [-1, 0], [0, -1]]}))
    out = tmp_path / "r.json"
    assert main(["verify", "--input", str(sq), "--out", str(out)]) == 0
    res = {r["id"]: r for r in json.loads(out.read_text())["results"]}
    assert res["QUAD_INEQ1"]["equality"]


def test_verify_malformed(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    assert main(["verify", "--input", str(bad)]) == 2
    bad.write_text(json.dumps({"family": "quadrilateral", "vertices": [[1, 0], [0, 1]]}))
    assert main(["verify", "--input", str(bad)]) == 2


def test_verify_not_applicable(tmp_path):
    p = tmp_path / "t.json"
    p.write_text(json.dumps({"family": "simplex", "vertices": [[1, 0], [0, 1], [0.6, 0.8]]}))
    assert main(["verify", "--input", str(p), "--out", str(tmp_path / "o.json")]) == 3


def test_emit_polytope_round_trip(tmp_path):
    poly = tmp_path / "p.json"
    assert main(["verify", "--family", "pyramid_quad", "--seed", "4", "--emit-polytope", str(poly),
                 "--out", str(tmp_path / "r.json")]) == 0
    P = load_polytope(poly)
    assert np.array_equal(P.vertices, sample_polytope("pyramid_quad", 3, 4).vertices)


def test_dict_round_trip_bits():
    P = sample_polytope("simplex", 4, 11)
    Q = polytope_from_dict(json.loads(json.dumps(polytope_to_dict(P))))
    assert np.array_equal(P.vertices, Q.vertices)
    with pytest.raises(PolytopeFormatError):
        polytope_from_dict({"vertices": [[0, 1]]})


def test_sample_deterministic(tmp_path, capsys):
    a, b = tmp_path / "a.csv", tmp_path / "b.csv"
    assert main(["sample", "--family", "bipyramid_tri", "--n", "100", "--seed", "1", "--out", str(a)]) == 0
    assert main(["sample", "--family", "bipyramid_tri", "--n", "100", "--seed", "1", "--out", str(b)]) == 0
    assert a.read_bytes() == b.read_bytes()
    assert b"\r\n" not in a.read_bytes()
    assert "0 violations" in capsys.readouterr().out


def test_sample_simplex_min_gap(tmp_path):
    out = tmp_path / "s.csv"
    assert main(["sample", "--family", "simplex", "--dim", "2", "--n", "100", "--out", str(out)]) == 0
    lines = out.read_text().splitlines()
    assert lines[0] == "sample_id,ineq_id,family,d,lhs,rhs,gap,relative_gap,holds"
    gaps = [float(l.split(",")[7]) for l in lines[1:] if "AS_STATED" not in l]
    assert min(gaps) >= -1e-9


def test_search_cli(capsys):
    assert main(["search", "--family", "pyramid_quad", "--frame", "augmented_edge"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["params"]["z0"] == pytest.approx(-0.428571, abs=1e-6)
    assert main(["search"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert len(doc["known_tight"]) == 5


def test_oracle_cli(capsys):
    assert main(["oracle", "--cayley", "--dim", "4"]) == 0
    assert capsys.readouterr().out.strip() == "125"
    assert main(["oracle", "--trees", "--dim", "3"]) == 0
    assert capsys.readouterr().out.strip() == "50"


def test_report_cli(tmp_path):
    out = tmp_path / "r.csv"
    assert main(["report", "--family", "quadrilateral", "--n", "50", "--format", "csv", "--out", str(out)]) == 0
    assert out.read_text().splitlines()[0].startswith("id,family,d,n,seed,min_relative_gap")


def test_bad_arguments():
    with pytest.raises(SystemExit) as exc:
        main(["verify", "--family", "cube"])
    assert exc.value.code == 2
