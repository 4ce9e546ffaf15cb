"""Exact scalar rings and piecewise-polynomial calculus."""
from .kernels import BACKEND
from .piecewise import (
    SMOOTH,
    DiscontinuityError,
    DomainError,
    NotCompactError,
    PiecewisePolynomial,
    add,
    antiderivative,
    certify,
    convolve,
    differentiate,
    evaluate,
    extend_by_zero,
    integrate,
    linear_combination,
    multiply,
    reflect,
    restrict,
    scale,
    scale_net,
    smoothness_check,
    translate,
)
from .polynomial import Polynomial
from .rational import ONE, ZERO, Q, as_rational, to_string
from .scalar import IncompatibleRelationError, Scalar

__all__ = [
    "BACKEND",
    "DiscontinuityError",
    "DomainError",
    "IncompatibleRelationError",
    "NotCompactError",
    "ONE",
    "PiecewisePolynomial",
    "Polynomial",
    "Q",
    "SMOOTH",
    "Scalar",
    "ZERO",
    "add",
    "antiderivative",
    "as_rational",
    "certify",
    "convolve",
    "differentiate",
    "evaluate",
    "extend_by_zero",
    "integrate",
    "linear_combination",
    "multiply",
    "reflect",
    "restrict",
    "scale",
    "scale_net",
    "smoothness_check",
    "to_string",
    "translate",
]
