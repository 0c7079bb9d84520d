"""JSON interchange: representation documents, matrices and points.

Matrices are row-major 2x2 arrays; a generator may carry an explicit
``theta`` (absent means the base lift); angles are radians throughout.
"""

from __future__ import annotations

import json
import math
from typing import Any

from .cover import LiftedIsometry, lift
from .halfplane import INFINITY, Isometry, Point
from .surface import SurfaceRep


class DocumentError(ValueError):
    """Malformed input document or flag value."""


def matrix_from_rows(rows: Any) -> Isometry:
    try:
        (a, b), (c, d) = rows
        a, b, c, d = float(a), float(b), float(c), float(d)
    except (TypeError, ValueError) as exc:
        raise DocumentError(f"matrix must be a 2x2 array of reals: {rows!r}") from exc
    det = a * d - b * c
    if abs(det - 1.0) > 1e-6:
        raise DocumentError(f"matrix determinant {det} is not 1 within 1e-6")
    return Isometry(a, b, c, d)


def matrix_rows(m: Isometry) -> list[list[float]]:
    return [[m.a, m.b], [m.c, m.d]]


def parse_matrix_flag(text: str) -> Isometry:
    """Matrix from a comma-separated row-major flag value ``a,b,c,d``."""
    parts = text.split(",")
    if len(parts) != 4:
        raise DocumentError(f"expected four comma-separated entries, got {text!r}")
    try:
        a, b, c, d = (float(s) for s in parts)
    except ValueError as exc:
        raise DocumentError(f"non-numeric matrix entry in {text!r}") from exc
    return matrix_from_rows([[a, b], [c, d]])


def parse_point_flag(text: str) -> Point:
    """Point from ``x,y``, ``ideal:B`` or ``ideal:inf``."""
    if text.startswith("ideal:"):
        tail = text[len("ideal:"):]
        if tail in ("inf", "+inf", "oo"):
            return INFINITY
        try:
            return Point.ideal(float(tail))
        except ValueError as exc:
            raise DocumentError(f"bad ideal coordinate {tail!r}") from exc
    parts = text.split(",")
    if len(parts) != 2:
        raise DocumentError(f"expected 'x,y' or 'ideal:b', got {text!r}")
    try:
        x, y = float(parts[0]), float(parts[1])
    except ValueError as exc:
        raise DocumentError(f"non-numeric point coordinate in {text!r}") from exc
    if y <= 0:
        raise DocumentError(f"finite point needs y > 0, got {text!r}")
    return Point.finite(x, y)


def point_obj(p: Point) -> Any:
    if p.is_infinity:
        return {"ideal": "inf"}
    if p.is_ideal:
        return {"ideal": p.x}
    return [p.x, p.y]


def point_from_obj(obj: Any) -> Point:
    if isinstance(obj, dict) and "ideal" in obj:
        b = obj["ideal"]
        return INFINITY if b == "inf" else Point.ideal(float(b))
    try:
        x, y = obj
        return Point.finite(float(x), float(y))
    except (TypeError, ValueError) as exc:
        raise DocumentError(f"bad point object {obj!r}") from exc


def generator_to_obj(g: LiftedIsometry) -> dict:
    return {"mat": matrix_rows(g.mat), "theta": g.theta}


def generator_from_obj(obj: Any) -> LiftedIsometry:
    if not isinstance(obj, dict) or "mat" not in obj:
        raise DocumentError(f"generator must be an object with a 'mat' field: {obj!r}")
    mat = matrix_from_rows(obj["mat"])
    theta = obj.get("theta")
    if theta is None:
        return lift(mat, 0)
    try:
        return LiftedIsometry(mat, float(theta))
    except ValueError as exc:
        raise DocumentError(str(exc)) from exc


def rep_to_dict(rep: SurfaceRep) -> dict:
    return {
        "genus": rep.genus,
        "boundary_count": rep.boundary_count,
        "basepoint": [rep.basepoint.x, rep.basepoint.y],
        "alphas": [generator_to_obj(g) for g in rep.alphas],
        "betas": [generator_to_obj(g) for g in rep.betas],
        "gammas": [generator_to_obj(g) for g in rep.gammas],
    }


def rep_from_dict(doc: Any) -> SurfaceRep:
    if not isinstance(doc, dict):
        raise DocumentError("representation document must be a JSON object")
    try:
        genus = int(doc["genus"])
        boundary = int(doc["boundary_count"])
    except (KeyError, TypeError, ValueError) as exc:
        raise DocumentError("document needs integer genus and boundary_count") from exc
    bp = doc.get("basepoint", [0.0, 1.0])
    try:
        basepoint = Point.finite(float(bp[0]), float(bp[1]))
    except (TypeError, ValueError, IndexError) as exc:
        raise DocumentError(f"bad basepoint {bp!r}") from exc
    alphas = tuple(generator_from_obj(o) for o in doc.get("alphas", []))
    betas = tuple(generator_from_obj(o) for o in doc.get("betas", []))
    gammas = tuple(generator_from_obj(o) for o in doc.get("gammas", []))
    try:
        return SurfaceRep(genus, boundary, alphas, betas, gammas, basepoint)
    except ValueError as exc:
        raise DocumentError(str(exc)) from exc


def load_rep(path: str) -> SurfaceRep:
    try:
        with open(path) as fh:
            doc = json.load(fh)
    except OSError as exc:
        raise DocumentError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise DocumentError(f"invalid JSON in {path}: {exc}") from exc
    return rep_from_dict(doc)


def dump_json(obj: Any) -> str:
    """Deterministic JSON used for all machine output."""
    return json.dumps(obj, sort_keys=True, indent=2)
