"""Command line front end: ``polyframe {verify,sample,search,oracle,report}``.

Exit status: 0 all asserted checks pass, 1 a check failed, 2 bad input,
3 a requested check does not apply to the polytope.
"""

from __future__ import annotations

import argparse
import math
import sys
from dataclasses import asdict, dataclass

import numpy as np

from . import __version__
from .builders import augmented_edge_frame, centroid_frame, edge_frame, vertex_frame
from .errors import ApplicabilityError, ContainmentError, PolyframeError, PolytopeFormatError
from .frames import cauchy_binet, frame_operator
from .geometry import Family, InscribedPolytope
from .inequalities import EQ_TOL, TOL, Z_MATRIX, InequalityId, applicable_ids, run_suite, z_form
from .io import atomic_write, dump_json, load_polytope, polytope_to_dict, rows_to_csv, save_polytope
from .oracles import cayley_constant, cayley_formula, conjecture_constant, spanning_tree_count
from .search import (
    FRAME_KINDS,
    falsification_campaign,
    pyramid_volume_maximum,
    resolve_workers,
    sample_polytope,
    tightness_search,
    verify_known_tight_configs,
)

EXIT_OK, EXIT_FAIL, EXIT_PARSE, EXIT_APPLICABILITY = 0, 1, 2, 3
SUMMARY_COLUMNS = ("id", "family", "d", "n", "seed", "min_relative_gap", "argmin_sample",
                   "violations", "skipped", "equalities", "asserted")


@dataclass
class RunConfig:
    command: str
    family: str | None = None
    dim: int | None = None
    n_samples: int = 1000
    seed: int = 0
    tol: float = TOL
    eq_tol: float = EQ_TOL
    input: str | None = None
    out: str | None = None
    format: str = "json"
    frame: str | None = None
    cayley: bool = False
    trees: bool = False
    emit_polytope: str | None = None
    workers: int = 1


def _default_dim(family: str | None) -> int:
    if family is None:
        return 3
    fixed = Family.parse(family).fixed_dim
    return fixed if fixed is not None else 3


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="polyframe", description=__doc__.split("\n")[0])
    ap.add_argument("--version", action="version", version=__version__)
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p, n_default=1000):
        p.add_argument("--family", choices=[f.value for f in Family])
        p.add_argument("--dim", type=int)
        p.add_argument("--n", dest="n_samples", type=int, default=n_default)
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("--tol", type=float, default=TOL)
        p.add_argument("--eq-tol", dest="eq_tol", type=float, default=EQ_TOL)
        p.add_argument("--out")
        p.add_argument("--format", choices=("json", "csv"), default=None)

    p = sub.add_parser("verify", help="run the inequality suite on one polytope")
    common(p)
    p.add_argument("--input", help="polytope JSON file")
    p.add_argument("--emit-polytope", dest="emit_polytope", help="write the polytope as JSON")

    p = sub.add_parser("sample", help="falsification campaign over a family")
    common(p)

    p = sub.add_parser("search", help="tight-frame search or the named tight configurations")
    common(p)
    p.add_argument("--frame", choices=FRAME_KINDS)

    p = sub.add_parser("oracle", help="combinatorial constants and Cauchy-Binet spot checks")
    common(p)
    p.add_argument("--cayley", action="store_true")
    p.add_argument("--trees", action="store_true")

    p = sub.add_parser("report", help="per-inequality campaign summary table")
    common(p)
    return ap


def resolve(args) -> RunConfig:
    cfg = RunConfig(command=args.command)
    for k in asdict(cfg):
        if hasattr(args, k) and getattr(args, k) is not None:
            setattr(cfg, k, getattr(args, k))
    if cfg.command in ("sample", "report", "verify") and cfg.family is None and cfg.input is None:
        cfg.family = "simplex"
    if cfg.dim is None:
        cfg.dim = _default_dim(cfg.family)
    if getattr(args, "format", None) is None:
        cfg.format = "csv" if cfg.command == "sample" else "json"
    cfg.workers = resolve_workers()
    return cfg


def _emit(cfg: RunConfig, text: str) -> None:
    if cfg.out:
        atomic_write(cfg.out, text)
    else:
        sys.stdout.write(text)


def _config_dict(cfg: RunConfig) -> dict:
    d = asdict(cfg)
    d.pop("workers")  # never part of a result
    return d


# ---------------------------------------------------------------------------
# verify
# ---------------------------------------------------------------------------

def geometry_checks(P: InscribedPolytope, tol: float) -> list[dict]:
    """Frame identities that hold for every polytope of the family."""
    out = []

    def add(name, lhs, rhs, rtol=1e-8):
        rel = abs(lhs - rhs) / max(abs(rhs), 1e-300)
        out.append({"id": name, "kind": "identity", "lhs": float(lhs), "rhs": float(rhs),
                    "relative_error": rel, "holds": bool(rel <= rtol), "asserted": True})

    for name, build in (("vertex", vertex_frame), ("edge", edge_frame)):
        f = build(P)
        s = frame_operator(f)
        add(f"CAUCHY_BINET_{name.upper()}", cauchy_binet(f), s.determinant)
        out.append({"id": f"TRACE_DET_{name.upper()}", "kind": "inequality",
                    "lhs": s.determinant, "rhs": s.tight_constant ** s.dim,
                    "tightness_deviation": s.tightness_deviation,
                    "holds": bool(s.determinant <= s.tight_constant ** s.dim * (1 + tol)),
                    "asserted": True})
    if P.family is Family.SIMPLEX:
        d = P.dim
        add("EDGE_FRAME_CAYLEY", frame_operator(edge_frame(P)).determinant,
            cayley_formula(d) * (math.factorial(d) * P.volume) ** 2)
        V = P.vertices
        s = V.sum(axis=0)
        S_c = frame_operator(centroid_frame(P)).operator
        expected = (V.T @ V + (d - 1) * np.outer(s, s)) / d**2
        err = float(np.linalg.norm(S_c - expected) / np.linalg.norm(expected))
        out.append({"id": "CENTROID_FRAME_OPERATOR", "kind": "identity", "relative_error": err,
                    "holds": bool(err <= 1e-10), "asserted": True})
    elif P.family in Z_MATRIX:
        z = z_form(P, rtol=math.inf)
        out.append({"id": "Z_FORM", "kind": "identity", "lhs": z.det_edge_frame,
                    "rhs": z.scale * z.value, "relative_error": z.relative_error,
                    "holds": bool(z.relative_error <= 1e-8), "asserted": True})
        aug = augmented_edge_frame(P).frame
        add("CAUCHY_BINET_AUGMENTED_EDGE", cauchy_binet(aug), frame_operator(aug).determinant)
    return out


def cmd_verify(cfg: RunConfig) -> int:
    if cfg.input:
        P = load_polytope(cfg.input)
        cfg.family, cfg.dim = P.family.value, P.dim
    else:
        P = sample_polytope(cfg.family, cfg.dim, cfg.seed)
    if cfg.emit_polytope:
        save_polytope(P, cfg.emit_polytope)
    reports = run_suite(P, cfg.tol, cfg.eq_tol, on_inapplicable="raise")
    geo = geometry_checks(P, cfg.tol)
    results = [r.to_dict() for r in reports] + geo
    failed = [r["id"] for r in results if r["asserted"] and not r["holds"]]
    doc = {
        "config": _config_dict(cfg),
        "polytope": polytope_to_dict(P),
        "passed": not failed,
        "failed": failed,
        "results": results,
    }
    _emit(cfg, dump_json(doc))
    return EXIT_FAIL if failed else EXIT_OK


# ---------------------------------------------------------------------------
# sample / report
# ---------------------------------------------------------------------------

def _campaign(cfg: RunConfig):
    P_family = Family.parse(cfg.family)
    ids = [i for i in InequalityId if P_family in i.families]
    if P_family is not Family.SIMPLEX and cfg.dim not in (2, 3):
        raise ApplicabilityError(f"{P_family.value} has no dimension {cfg.dim}")
    if cfg.n_samples < 1:
        raise ApplicabilityError("--n must be at least 1")
    return falsification_campaign(ids, P_family, cfg.dim, cfg.n_samples, cfg.seed,
                                  tol=cfg.tol, workers=cfg.workers)


def _summary_rows(camp):
    return [tuple(getattr(r, c) for c in SUMMARY_COLUMNS) for r in camp.results]


def cmd_sample(cfg: RunConfig) -> int:
    camp = _campaign(cfg)
    if cfg.format == "csv":
        _emit(cfg, camp.csv())
    else:
        _emit(cfg, dump_json({"config": _config_dict(cfg),
                              "results": [r.to_dict() for r in camp.results]}))
    gaps = [r.min_relative_gap for r in camp.results if r.asserted]
    line = (f"{cfg.family} d={cfg.dim} n={cfg.n_samples} seed={cfg.seed}: "
            f"{camp.total_violations} violations of asserted inequalities, "
            f"min relative gap {min(gaps):.3e}")
    # keep stdout clean for the data when no --out is given
    print(line, file=sys.stdout if cfg.out else sys.stderr)
    return EXIT_FAIL if camp.total_violations else EXIT_OK


def cmd_report(cfg: RunConfig) -> int:
    camp = _campaign(cfg)
    if cfg.format == "csv":
        _emit(cfg, rows_to_csv(SUMMARY_COLUMNS, _summary_rows(camp)))
    else:
        _emit(cfg, dump_json({"config": _config_dict(cfg),
                              "results": [r.to_dict() for r in camp.results],
                              "total_violations": camp.total_violations}))
    return EXIT_FAIL if camp.total_violations else EXIT_OK


# ---------------------------------------------------------------------------
# search / oracle
# ---------------------------------------------------------------------------

def cmd_search(cfg: RunConfig) -> int:
    if cfg.frame is None:
        configs = verify_known_tight_configs()
        doc = {"config": _config_dict(cfg), "known_tight": configs,
               "pyramid_volume_maximum": pyramid_volume_maximum()}
        ok = all(c["pass"] for c in configs)
    else:
        if cfg.family not in ("pyramid_quad", "bipyramid_tri"):
            raise ApplicabilityError("search needs --family pyramid_quad or bipyramid_tri")
        res = tightness_search(cfg.family, cfg.frame, seed=cfg.seed)
        doc = {"config": _config_dict(cfg), **res.to_dict()}
        ok = res.value <= cfg.tol
    _emit(cfg, dump_json(doc))
    return EXIT_OK if ok else EXIT_FAIL


def cmd_oracle(cfg: RunConfig) -> int:
    doc = {"config": _config_dict(cfg)}
    ok = True
    everything = not (cfg.cayley or cfg.trees)
    if cfg.cayley or everything:
        dims = [cfg.dim] if cfg.cayley else range(2, 6)
        rows = []
        for d in dims:
            v = cayley_constant(d, seed=cfg.seed)
            rows.append({"d": d, "value": v, "expected": cayley_formula(d)})
            ok &= v == cayley_formula(d)
        doc["cayley_constant"] = rows
    if cfg.trees or everything:
        dims = [cfg.dim] if cfg.trees else range(2, 9)
        rows = []
        for d in dims:
            v = spanning_tree_count(d + 2, contract_edge=True)
            rows.append({"d": d, "value": v, "expected": conjecture_constant(d),
                         "edge_deleted": spanning_tree_count(d + 2, remove_edge=True)})
            ok &= v == conjecture_constant(d)
        doc["spanning_trees"] = rows
    if everything:
        rng = np.random.default_rng(cfg.seed)
        spots = []
        for _ in range(10):
            d = int(rng.integers(1, 6))
            n = int(rng.integers(d, 11))
            V = rng.standard_normal((n, d))
            cb, det = cauchy_binet(V), float(np.linalg.det(V.T @ V))
            spots.append({"d": d, "n": n, "cauchy_binet": cb, "det_S": det,
                          "abs_error": abs(cb - det)})
            ok &= abs(cb - det) <= 1e-9 * max(1.0, det)
        doc["cauchy_binet"] = spots
    if cfg.cayley and not cfg.trees and not cfg.out:
        print(doc["cayley_constant"][0]["value"])
    elif cfg.trees and not cfg.cayley and not cfg.out:
        print(doc["spanning_trees"][0]["value"])
    else:
        _emit(cfg, dump_json(doc))
    return EXIT_OK if ok else EXIT_FAIL


COMMANDS = {
    "verify": cmd_verify,
    "sample": cmd_sample,
    "search": cmd_search,
    "oracle": cmd_oracle,
    "report": cmd_report,
}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        cfg = resolve(args)
        return COMMANDS[cfg.command](cfg)
    except PolytopeFormatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (ApplicabilityError, ContainmentError) as exc:
        print(f"not applicable: {exc}", file=sys.stderr)
        return EXIT_APPLICABILITY
    except PolyframeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE


if __name__ == "__main__":
    sys.exit(main())
