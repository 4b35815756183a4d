"""Exact rectangle dissections with side ratios in Q[sqrt(p)]."""

import json as _json

from ._core import (
    Field,
    Quad,
    QuadtileError,
    area_additivity,
    certify,
    check_certificate,
    decide,
    plan,
    render_svg,
    search,
    tile,
    verify,
)

__all__ = [
    "Field",
    "Quad",
    "QuadtileError",
    "area_additivity",
    "certify",
    "check_certificate",
    "decide",
    "plan",
    "problem",
    "render_svg",
    "search",
    "tile",
    "verify",
]


def _quad(v):
    if isinstance(v, Quad):
        return {"e": v.e, "f": v.f}
    e, f = v
    return {"e": str(e), "f": str(f)}


def problem(p, shapes, target):
    """Problem document text; values are Quads or (e, f) pairs."""
    return _json.dumps({"p": str(p), "shapes": [_quad(s) for s in shapes], "target": _quad(target)})
