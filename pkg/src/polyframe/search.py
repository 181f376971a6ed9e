"""Seeded falsification campaigns and searches for tight configurations."""

from __future__ import annotations

import math
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

import numpy as np
from scipy.optimize import minimize, minimize_scalar

from .builders import augmented_edge_frame, edge_frame, vertex_frame
from .errors import (
    ApplicabilityError,
    ContainmentError,
    DegeneracyError,
    OrderingError,
    ParameterError,
    SamplingError,
)
from .frames import Frame, frame_operator
from .geometry import Family, InscribedPolytope, make_polytope, origin_is_interior, simplex_volume
from .inequalities import LP_VALUES, TOL, InequalityId, evaluate
from .io import rows_to_csv

RESAMPLE_BUDGET = 10_000
MIN_SIMPLEX_VOLUME = 1e-6
CSV_COLUMNS = ("sample_id", "ineq_id", "family", "d", "lhs", "rhs", "gap", "relative_gap", "holds")
FRAME_KINDS = ("vertex", "edge", "augmented_edge", "augmented_edge_no_synthetic")
SEARCH_FAMILIES = (Family.PYRAMID_QUAD, Family.BIPYRAMID_TRI)
_LP_IDS = (InequalityId.LP_INTERP, InequalityId.LP_INTERP_AS_STATED)


# ---------------------------------------------------------------------------
# sampling
# ---------------------------------------------------------------------------

def sample_rng(seed: int, index: int) -> np.random.Generator:
    """Independent stream for sample ``index`` of a campaign seeded with ``seed``."""
    return np.random.default_rng([int(seed), int(index)])


def _cyclic_gaps_ok(angles) -> bool:
    gaps = np.diff(np.concatenate([angles, [angles[0] + 2 * np.pi]]))
    return bool(np.all(gaps < np.pi) and np.all(gaps > 1e-9))


def _sorted_angles(rng, k):
    for _ in range(RESAMPLE_BUDGET):
        a = np.sort(rng.uniform(0.0, 2 * np.pi, k))
        if _cyclic_gaps_ok(a):
            return a
    raise SamplingError(f"no admissible {k}-gon within {RESAMPLE_BUDGET} draws")


def _draw(family: Family, d: int, rng) -> InscribedPolytope:
    if family is Family.SIMPLEX:
        for _ in range(RESAMPLE_BUDGET):
            X = rng.standard_normal((d + 1, d))
            V = X / np.linalg.norm(X, axis=1)[:, None]
            if simplex_volume(V) > MIN_SIMPLEX_VOLUME and origin_is_interior(V):
                return make_polytope(family, vertices=V)
        raise SamplingError("simplex resample budget exhausted")
    if family is Family.QUADRILATERAL:
        return make_polytope(family, angles=_sorted_angles(rng, 4))
    if family is Family.PYRAMID_QUAD:
        z0 = rng.uniform(-0.95, 0.5)
        base = _sorted_angles(rng, 4)
        # a uniform rotation of a uniform angle set is again uniform; keep it in [0, 2pi)
        base = np.sort(np.mod(base + rng.uniform(0, 2 * np.pi), 2 * np.pi))
        return make_polytope(family, z0=z0, base_angles=base)
    R = 1.0 - 0.8 * rng.random()
    h = 1.0 - 0.8 * rng.random()
    h_lower = 1.0 - 0.8 * rng.random()
    # acute triangle so that the apex axis through the circumcenter pierces it
    return make_polytope(family, R=R, h=h, h_lower=h_lower, angles=_sorted_angles(rng, 3))


def sample_polytope(family, d: int, rng_seed) -> InscribedPolytope:
    """Random member of a family.

    ``rng_seed`` is an int or a numpy Generator.  Simplices have vertices
    uniform on the sphere with the origin inside; quadrilaterals and pyramid
    bases are random cyclic polygons; bipyramids lie in the closed unit ball.
    """
    family = Family.parse(family)
    fixed = family.fixed_dim
    if fixed is not None and d != fixed:
        raise ParameterError(f"{family.value} requires d={fixed}, got {d}")
    if family is Family.SIMPLEX and d < 2:
        raise ParameterError("simplex needs d >= 2")
    rng = rng_seed if isinstance(rng_seed, np.random.Generator) else np.random.default_rng(rng_seed)
    for _ in range(RESAMPLE_BUDGET):
        try:
            return _draw(family, d, rng)
        except (DegeneracyError, OrderingError, ContainmentError):
            continue
    raise SamplingError(f"{family.value} resample budget exhausted")


def _sample_params(P: InscribedPolytope) -> dict:
    if P.family is Family.SIMPLEX:
        return {"vertices": P.vertices.tolist()}
    return dict(P.params)


# ---------------------------------------------------------------------------
# campaigns
# ---------------------------------------------------------------------------

@dataclass
class CampaignResult:
    id: str
    family: str
    d: int
    n: int
    seed: int
    min_relative_gap: float
    argmin_sample: int | None
    argmin_params: dict | None
    violations: int
    skipped: int
    asserted: bool
    wall_clock: float = 0.0
    equalities: int = 0

    def to_dict(self) -> dict:
        return dict(self.__dict__)


@dataclass
class Campaign:
    results: list
    rows: list = field(repr=False)
    wall_clock: float = 0.0

    def csv(self) -> str:
        return rows_to_csv(CSV_COLUMNS, self.rows)

    @property
    def total_violations(self) -> int:
        return sum(r.violations for r in self.results if r.asserted)


def expand_checks(ids, lp_values=LP_VALUES) -> list[tuple[InequalityId, float | None]]:
    """(id, p) pairs; LP ids fan out over ``lp_values`` unless a p is given."""
    out = []
    for ident in ids:
        if isinstance(ident, tuple):
            out.append((InequalityId.parse(ident[0]), ident[1]))
            continue
        if isinstance(ident, str) and "p=" in ident:
            p = float(ident.split("p=")[1].rstrip(")"))
            out.append((InequalityId.parse(ident), p))
            continue
        ident = InequalityId.parse(ident)
        if ident in _LP_IDS:
            out.extend((ident, float(p)) for p in lp_values)
        else:
            out.append((ident, None))
    return out


def _label(ident, p):
    return ident.name if p is None else f"{ident.name}(p={p:g})"


def _run_chunk(args):
    checks, family, d, seed, start, stop, tol = args
    rows, skipped, params = [], [], {}
    for i in range(start, stop):
        P = sample_polytope(family, d, sample_rng(seed, i))
        for k, (ident, p) in enumerate(checks):
            kw = {} if p is None else {"p": p}
            try:
                r = evaluate(ident, P, tol=tol, **kw)
            except (ApplicabilityError, ContainmentError):
                skipped.append(k)
                continue
            rows.append((i, _label(ident, p), family.value, d, r.lhs, r.rhs, r.gap,
                         r.relative_gap, r.holds, r.equality, k))
        params[i] = _sample_params(P)
    return rows, skipped, params


def resolve_workers(workers: int | None = None) -> int:
    if workers is None:
        workers = int(os.environ.get("POLYFRAME_THREADS", "0") or 0)
    if workers <= 0:
        workers = os.cpu_count() or 1
    return max(1, int(workers))


def falsification_campaign(ids, family, d: int, n: int, seed: int = 0, tol: float = TOL,
                           workers: int | None = None, lp_values=LP_VALUES,
                           chunk_size: int = 250) -> Campaign:
    """Evaluate each id on n sampled polytopes and reduce per id.

    Sample i uses the stream ``default_rng([seed, i])``, so rows, minima and
    counts do not depend on the worker count or on scheduling.
    """
    if n < 1:
        raise ParameterError("n must be >= 1")
    family = Family.parse(family)
    checks = expand_checks(ids, lp_values)
    for ident, _ in checks:
        if family not in ident.families:
            raise ApplicabilityError(f"{ident.name} does not apply to {family.value}")
    workers = resolve_workers(workers)
    bounds = [(s, min(s + chunk_size, n)) for s in range(0, n, chunk_size)]
    jobs = [(checks, family, d, seed, a, b, tol) for a, b in bounds]
    t0 = time.perf_counter()
    if workers == 1 or len(jobs) == 1:
        parts = [_run_chunk(j) for j in jobs]
    else:
        with ProcessPoolExecutor(max_workers=min(workers, len(jobs))) as ex:
            parts = list(ex.map(_run_chunk, jobs))
    elapsed = time.perf_counter() - t0

    rows, skipped, params = [], [0] * len(checks), {}
    for r, s, prm in parts:
        rows.extend(r)
        for k in s:
            skipped[k] += 1
        params.update(prm)

    results = []
    for k, (ident, p) in enumerate(checks):
        mine = [r for r in rows if r[10] == k]
        best = min(mine, key=lambda r: (r[7], r[0]), default=None)
        results.append(CampaignResult(
            id=_label(ident, p),
            family=family.value,
            d=d,
            n=n,
            seed=seed,
            min_relative_gap=best[7] if best else math.nan,
            argmin_sample=best[0] if best else None,
            argmin_params=params[best[0]] if best else None,
            violations=sum(1 for r in mine if r[7] < -tol),
            skipped=skipped[k],
            asserted=ident.asserted,
            wall_clock=elapsed,
            equalities=sum(1 for r in mine if r[9]),
        ))
    return Campaign(results, [r[:9] for r in rows], elapsed)


# ---------------------------------------------------------------------------
# tightness search
# ---------------------------------------------------------------------------

@dataclass
class SearchResult:
    objective: str
    family: str
    frame: str
    params: dict
    value: float
    iters: int
    converged: bool
    initial_value: float
    optima: list = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "objective": self.objective,
            "family": self.family,
            "frame": self.frame,
            "params": self.params,
            "value": self.value,
            "iters": self.iters,
            "converged": self.converged,
            "initial_value": self.initial_value,
            "optima": self.optima,
        }


def family_frame(P: InscribedPolytope, kind: str) -> Frame:
    if kind == "vertex":
        return vertex_frame(P)
    if kind == "edge":
        return edge_frame(P)
    if kind == "augmented_edge":
        return augmented_edge_frame(P, include_synthetic=True).frame
    if kind == "augmented_edge_no_synthetic":
        return augmented_edge_frame(P, include_synthetic=False).frame
    raise ParameterError(f"frame kind must be one of {FRAME_KINDS}")


def pyramid(z0: float) -> InscribedPolytope:
    return make_polytope(Family.PYRAMID_QUAD, z0=z0)


def bipyramid(ratio: float) -> InscribedPolytope:
    """Equilateral bipyramid with h/R = ratio, scaled to touch the unit sphere."""
    R = min(1.0, 1.0 / ratio)
    return make_polytope(Family.BIPYRAMID_TRI, R=R, h=ratio * R)


# one scalar parameter per family: pyramid z0, bipyramid t = h/R
_PARAM = {
    Family.PYRAMID_QUAD: ("z0", (-0.95, 0.95), pyramid),
    Family.BIPYRAMID_TRI: ("h_over_R", (0.2, 3.0), bipyramid),
}


def _params_of(family: Family, x: float) -> dict:
    name, _, build = _PARAM[family]
    out = {name: x}
    if family is Family.BIPYRAMID_TRI:
        P = build(x)
        out.update(R=P.params["R"], h=P.params["h"])
    return out


def tightness_objective(family, kind: str):
    family = Family.parse(family)
    _, (lo, hi), build = _PARAM[family]

    def f(x):
        x = float(np.atleast_1d(x)[0])
        if not lo <= x <= hi:
            return 1e3 + abs(x)
        return frame_operator(family_frame(build(x), kind)).tightness_deviation

    return f


def tightness_search(family, frame_kind: str, seed: int = 0, restarts: int = 5,
                     xatol: float = 1e-10, maxiter: int = 500, opt_tol: float = 1e-9) -> SearchResult:
    """Nelder-Mead on the tightness deviation over the family's parameter.

    Starts are drawn one per stratum of the parameter range so that mirror
    optima are not missed; every distinct restart optimum below ``opt_tol``
    is listed in ``optima``.  The returned parameter is the best one.
    """
    family = Family.parse(family)
    if family not in _PARAM:
        raise ParameterError(f"tightness_search supports {[f.value for f in _PARAM]}")
    if frame_kind not in FRAME_KINDS:
        raise ParameterError(f"frame kind must be one of {FRAME_KINDS}")
    f = tightness_objective(family, frame_kind)
    _, (lo, hi), _ = _PARAM[family]
    rng = np.random.default_rng(seed)
    edges = np.linspace(lo, hi, restarts + 1)
    runs = []
    for k in range(restarts):
        x0 = rng.uniform(edges[k], edges[k + 1])
        res = minimize(f, [x0], method="Nelder-Mead",
                       options={"xatol": xatol, "fatol": 1e-15, "maxiter": maxiter,
                                "initial_simplex": [[x0], [x0 + 0.05 * (hi - lo)]]})
        runs.append((float(res.fun), float(res.x[0]), int(res.nit), f(x0), bool(res.success)))
    best = min(runs, key=lambda r: (r[0], r[1]))
    optima = []
    for val, x, *_ in sorted(runs, key=lambda r: r[1]):
        if val <= opt_tol and not any(abs(x - o["x"]) < 1e-6 for o in optima):
            optima.append({"x": x, "value": val, "params": _params_of(family, x)})
    return SearchResult(
        objective="tightness_deviation",
        family=family.value,
        frame=frame_kind,
        params=_params_of(family, best[1]),
        value=best[0],
        iters=best[2],
        converged=best[4],
        initial_value=best[3],
        optima=optima,
    )


# ---------------------------------------------------------------------------
# named configurations
# ---------------------------------------------------------------------------

KNOWN_TIGHT = (
    ("pyramid z0=1/sqrt(6), vertex frame", Family.PYRAMID_QUAD, "vertex", 1 / math.sqrt(6)),
    ("pyramid z0=-3/7, augmented edge frame", Family.PYRAMID_QUAD, "augmented_edge", -3 / 7),
    ("pyramid z0=-1/5, edge frame without diagonals", Family.PYRAMID_QUAD,
     "augmented_edge_no_synthetic", -1 / 5),
    ("bipyramid h/R=sqrt(3)/2, augmented edge frame", Family.BIPYRAMID_TRI, "augmented_edge",
     math.sqrt(3) / 2),
    ("bipyramid R/h=2/sqrt(5), edge frame without apex segment", Family.BIPYRAMID_TRI,
     "augmented_edge_no_synthetic", math.sqrt(5) / 2),
)
EXTRA_TIGHT = (
    ("pyramid z0=-1/sqrt(6), vertex frame (mirror)", Family.PYRAMID_QUAD, "vertex", -1 / math.sqrt(6)),
    ("bipyramid h/R=sqrt(3)/2, vertex frame", Family.BIPYRAMID_TRI, "vertex", math.sqrt(3) / 2),
)


def verify_known_tight_configs(tol: float = 1e-9, include_extra: bool = False) -> list[dict]:
    """Build each named configuration exactly and measure its tightness.

    Records the proportionality constant tr(S)/d of each operator.
    """
    out = []
    for name, family, kind, x in KNOWN_TIGHT + (EXTRA_TIGHT if include_extra else ()):
        P = _PARAM[family][2](x)
        s = frame_operator(family_frame(P, kind))
        out.append({
            "config": name,
            "family": family.value,
            "frame": kind,
            "params": _params_of(family, x),
            "deviation": s.tightness_deviation,
            "constant": s.tight_constant,
            "pass": bool(s.tightness_deviation <= tol),
        })
    return out


def pyramid_volume_maximum(xtol: float = 1e-10) -> dict:
    """Golden-section search for the base height that maximizes pyramid volume."""
    res = minimize_scalar(lambda z: -pyramid(z).volume, bracket=(-0.9, -0.2, 0.9),
                          method="golden", options={"xtol": xtol})
    return {"z0": float(res.x), "volume": float(-res.fun), "iters": int(res.nit)}
