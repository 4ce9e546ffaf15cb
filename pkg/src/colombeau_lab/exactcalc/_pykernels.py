"""Pure-Python polynomial kernels over exact rationals.

Coefficient sequences are ordered low to high degree. Every function returns
a trimmed tuple (no trailing zeros; the zero polynomial is ``()``).
"""
from __future__ import annotations

from .rational import Q, ZERO


def trim(a):
    n = len(a)
    while n and not a[n - 1]:
        n -= 1
    return tuple(a[:n])


def add(a, b):
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] = out[i] + c
    return trim(out)


def sub(a, b):
    n = max(len(a), len(b))
    out = [ZERO] * n
    for i, c in enumerate(a):
        out[i] = c
    for i, c in enumerate(b):
        out[i] = out[i] - c
    return trim(out)


def scale(a, s):
    if not s:
        return ()
    return trim([c * s for c in a])


def mul(a, b):
    if not a or not b:
        return ()
    out = [ZERO] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if not x:
            continue
        for j, y in enumerate(b):
            out[i + j] += x * y
    return trim(out)


def deriv(a):
    return trim([a[i] * i for i in range(1, len(a))])


def antideriv(a):
    if not a:
        return ()
    return trim([ZERO] + [c / (i + 1) for i, c in enumerate(a)])


def horner(a, x):
    acc = ZERO
    for c in reversed(a):
        acc = acc * x + c
    return acc


def taylor_shift(a, c):
    """Coefficients of ``a(x + c)``."""
    if not a or not c:
        return tuple(a)
    out = list(a)
    n = len(out)
    # repeated synthetic division
    for i in range(n - 1):
        for j in range(n - 2, i - 1, -1):
            out[j] = out[j] + c * out[j + 1]
    return trim(out)


def dilate(a, c):
    """Coefficients of ``a(c * x)``."""
    out = []
    p = Q(1)
    for coeff in a:
        out.append(coeff * p)
        p = p * c
    return trim(out)
