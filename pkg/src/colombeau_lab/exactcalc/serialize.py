"""Structured-text (JSON) form of piecewise polynomials.

Rationals are written as canonical ``"n/d"`` strings. A coefficient with a
nonzero lam-part becomes the pair ``["a", "b"]`` meaning ``a + b*lam``; the
relation constant ``r`` appears once per document.
"""
from __future__ import annotations

import json
import math

from .piecewise import SMOOTH, PiecewisePolynomial
from .polynomial import Polynomial
from .rational import as_rational, to_string
from .scalar import Scalar

FORMAT = "colombeau-lab/piecewise-polynomial/1"


def _poly_to_obj(p: Polynomial | None):
    if p is None:
        return None
    out = []
    for c in p.coeffs:
        out.append(to_string(c.a) if not c.b else [to_string(c.a), to_string(c.b)])
    return out


def _poly_from_obj(obj, r):
    if obj is None:
        return None
    coeffs = []
    for c in obj:
        if isinstance(c, list):
            if r is None:
                raise ValueError("lam-coefficients present but no relation constant recorded")
            coeffs.append(Scalar(as_rational(c[0]), as_rational(c[1]), r))
        else:
            coeffs.append(Scalar(as_rational(c)))
    return Polynomial(coeffs, r if any(isinstance(c, list) for c in obj) else None)


def to_dict(p: PiecewisePolynomial) -> dict:
    return {
        "format": FORMAT,
        "relation": None if p.r is None else to_string(p.r),
        "smoothness": "inf" if p.smoothness == SMOOTH else int(p.smoothness),
        "breaks": [to_string(b) for b in p.breaks],
        "head": _poly_to_obj(p.polys[0]),
        "pieces": [_poly_to_obj(q) for q in p.pieces],
        "tail": _poly_to_obj(p.polys[-1]),
    }


def from_dict(d: dict) -> PiecewisePolynomial:
    if d.get("format", FORMAT) != FORMAT:
        raise ValueError(f"unsupported format {d.get('format')!r}")
    r = None if d.get("relation") is None else as_rational(d["relation"])
    k = d.get("smoothness", -1)
    k = SMOOTH if k == "inf" else int(k)
    return PiecewisePolynomial(
        d["breaks"],
        [_poly_from_obj(q, r) for q in d["pieces"]],
        head=_poly_from_obj(d.get("head"), r),
        tail=_poly_from_obj(d.get("tail"), r),
        smoothness=k,
    )


def dumps(p: PiecewisePolynomial, **kw) -> str:
    kw.setdefault("indent", 2)
    return json.dumps(to_dict(p), **kw)


def loads(text: str) -> PiecewisePolynomial:
    return from_dict(json.loads(text))


