"""Polytope and report serialization; atomic file output."""

from __future__ import annotations

import csv
import io
import json
import os
import tempfile
from pathlib import Path

import numpy as np

from .errors import PolyframeError, PolytopeFormatError
from .geometry import Family, InscribedPolytope, make_polytope

FORMAT_VERSION = 1


def atomic_write(path, data: str | bytes) -> None:
    """Write to a temp file in the target directory, then rename over path."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    mode = "wb" if isinstance(data, bytes) else "w"
    fd, tmp = tempfile.mkstemp(prefix=f".{path.name}.", dir=path.parent)
    try:
        kw = {} if mode == "wb" else {"encoding": "utf-8", "newline": ""}
        with os.fdopen(fd, mode, **kw) as fh:
            fh.write(data)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def polytope_to_dict(P: InscribedPolytope) -> dict:
    # floats go through json's repr, which round-trips exactly
    return {
        "format": FORMAT_VERSION,
        "family": P.family.value,
        "dim": P.dim,
        "vertices": P.vertices.tolist(),
        "on_sphere": P.on_sphere,
        "params": _plain(P.params),
    }


def polytope_from_dict(data) -> InscribedPolytope:
    if not isinstance(data, dict):
        raise PolytopeFormatError("polytope JSON must be an object")
    try:
        family = Family.parse(data["family"])
        V = np.array(data["vertices"], dtype=float)
    except (KeyError, ValueError, TypeError) as exc:
        raise PolytopeFormatError(f"bad polytope JSON: {exc}") from exc
    if V.ndim != 2 or not np.all(np.isfinite(V)):
        raise PolytopeFormatError("vertices must be a finite 2-d array")
    if "dim" in data and data["dim"] != V.shape[1]:
        raise PolytopeFormatError(f"dim {data['dim']} does not match vertices of width {V.shape[1]}")
    params = data.get("params") or {}
    if not isinstance(params, dict):
        raise PolytopeFormatError("params must be an object")
    params = {k: v for k, v in params.items() if k != "vertices"}
    return make_polytope(family, params, vertices=V)


def load_polytope(path) -> InscribedPolytope:
    try:
        text = Path(path).read_text(encoding="utf-8")
        data = json.loads(text)
    except (OSError, UnicodeDecodeError, json.JSONDecodeError) as exc:
        raise PolytopeFormatError(f"cannot read polytope from {path}: {exc}") from exc
    try:
        return polytope_from_dict(data)
    except PolytopeFormatError:
        raise
    except PolyframeError as exc:
        # geometry validation failures in a file are format errors from the caller's view
        raise PolytopeFormatError(f"invalid polytope in {path}: {exc}") from exc


def save_polytope(P: InscribedPolytope, path) -> None:
    atomic_write(path, json.dumps(polytope_to_dict(P), indent=2) + "\n")


def dump_json(obj) -> str:
    return json.dumps(_plain(obj), indent=2, sort_keys=False) + "\n"


def rows_to_csv(header, rows) -> str:
    """CSV text with LF line endings; floats written by repr (shortest round trip)."""
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    for row in rows:
        w.writerow([_cell(x) for x in row])
    return buf.getvalue()


def _cell(x):
    if isinstance(x, (bool, np.bool_)):
        return "true" if x else "false"
    if isinstance(x, (float, np.floating)):
        return repr(float(x))
    return x


def _plain(x):
    if isinstance(x, dict):
        return {str(k): _plain(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_plain(v) for v in x]
    if isinstance(x, np.ndarray):
        return _plain(x.tolist())
    if isinstance(x, (np.bool_, np.integer, np.floating)):
        return x.item()
    if isinstance(x, Family):
        return x.value
    if isinstance(x, Path):
        return str(x)
    if hasattr(x, "value") and hasattr(x, "name"):  # other enums
        return x.name
    return x
