"""Compiled and pure-Python kernels must agree exactly."""
from __future__ import annotations

import os
import subprocess
import sys

import pytest
from hypothesis import given
from hypothesis import strategies as st

from colombeau_lab.exactcalc import _pykernels, kernels

from strategies import rationals

ck = pytest.importorskip("colombeau_lab.exactcalc._ckernels")

coeffs = st.lists(rationals, max_size=9).map(tuple)


def test_compiled_backend_is_selected():
    assert kernels.BACKEND == "cython"


def test_env_var_forces_fallback():
    env = dict(os.environ, COLOMBEAU_PURE_PYTHON="1")
    out = subprocess.run(
        [sys.executable, "-c", "from colombeau_lab.exactcalc import BACKEND; print(BACKEND)"],
        env=env, capture_output=True, text=True, check=True,
    )
    assert out.stdout.strip() == "python"


@given(coeffs, coeffs)
def test_binary_kernels(a, b):
    for name in ("add", "sub", "mul"):
        assert getattr(ck, name)(a, b) == getattr(_pykernels, name)(a, b)


@given(coeffs, rationals)
def test_scalar_kernels(a, c):
    for name in ("scale", "horner", "taylor_shift", "dilate"):
        assert getattr(ck, name)(a, c) == getattr(_pykernels, name)(a, c)


@given(coeffs)
def test_unary_kernels(a):
    for name in ("deriv", "antideriv", "trim"):
        assert getattr(ck, name)(a) == getattr(_pykernels, name)(a)


def test_outputs_are_trimmed_mpq():
    from gmpy2 import mpq

    assert ck.add((mpq(1), mpq(2)), (mpq(-1), mpq(-2))) == ()
    out = ck.scale((1, 2), 3)
    assert out == (3, 6) and all(type(x) is mpq for x in out)
    assert ck.horner((), mpq(5)) == 0


def test_pipeline_agrees_across_backends():
    script = (
        "from colombeau_lab.mollifier import default_mollifier\n"
        "from colombeau_lab.models import nu_plus\n"
        "from colombeau_lab.association import extract\n"
        "e = extract(nu_plus(1), default_mollifier(), 2)\n"
        "print([[str(v) for v in row] for row in e.exact])\n"
    )
    outs = []
    for pure in (False, True):
        env = dict(os.environ)
        env.pop("COLOMBEAU_PURE_PYTHON", None)
        if pure:
            env["COLOMBEAU_PURE_PYTHON"] = "1"
        outs.append(subprocess.run([sys.executable, "-c", script], env=env, capture_output=True, text=True, check=True).stdout)
    assert outs[0] == outs[1]
