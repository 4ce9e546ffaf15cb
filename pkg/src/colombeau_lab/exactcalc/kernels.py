"""Backend selection for the polynomial kernels.

The compiled module ``_ckernels`` works directly on GMP rationals. It is used
when it imports cleanly and gmpy2 is the active rational type; otherwise the
pure-Python kernels take over. Setting ``COLOMBEAU_PURE_PYTHON=1`` forces the
fallback (the benchmark and the backend-parity tests rely on this).
"""
from __future__ import annotations

import os

from . import _pykernels
from .rational import HAVE_GMPY2

_impl = _pykernels
BACKEND = "python"

if HAVE_GMPY2 and not os.environ.get("COLOMBEAU_PURE_PYTHON"):
    try:
        from . import _ckernels as _impl  # type: ignore[no-redef]

        BACKEND = "cython"
    except ImportError:
        _impl = _pykernels

trim = _impl.trim
add = _impl.add
sub = _impl.sub
scale = _impl.scale
mul = _impl.mul
deriv = _impl.deriv
antideriv = _impl.antideriv
horner = _impl.horner
taylor_shift = _impl.taylor_shift
dilate = _impl.dilate

__all__ = [
    "BACKEND",
    "add",
    "antideriv",
    "deriv",
    "dilate",
    "horner",
    "mul",
    "scale",
    "sub",
    "taylor_shift",
    "trim",
]
