"""Sigma -> 0 extraction of associated distributions from exact pairings.

For every sigma in a schedule the pairings ``I_j = <G_sigma, psi_j>`` are
computed exactly and converted to delta-coefficients by inverting the jet
matrix ``A[j][i] = (-1)^i psi_j^(i)(0)`` exactly. Only then are the values
embedded into complex floats and fitted linearly in sigma; the intercept is
the association coefficient.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..exactcalc import Q, integrate, scale_net, to_string
from ..exactcalc.linalg import solve
from ..mollifier import BumpSpec, Mollifier, build_bump, scaled_instance
from ..models import PiecewiseModel, model
from .pairing import pair, product_net
from .testfunctions import DEFAULT_SCHEDULE, SigmaSchedule, TestFunction, plateau_test

IMAG_FLOOR = 1e-12
"""Absolute slack for float round-off when testing imaginary decay."""

IMAG_SLACK = 0.1
"""Relative headroom on the estimate of ``C`` in ``|Im| <= C sigma``."""


class ScheduleError(ValueError):
    """Schedule too short, or sigma too large for the test-function geometry."""


@dataclass
class AssociationEstimate:
    order: int
    coefficients: tuple
    intercepts: tuple
    slopes: tuple
    sigmas: tuple
    per_sigma: tuple
    exact: tuple
    residuals: tuple
    imag_residue: tuple
    label: str = ""
    expected: tuple | None = None

    @property
    def max_imag(self) -> float:
        return max(self.imag_residue)

    def errors(self, expected=None) -> list[float]:
        expected = self.expected if expected is None else expected
        if expected is None:
            raise ValueError("no expected coefficients to compare against")
        n = max(len(expected), len(self.coefficients))
        got = list(self.coefficients) + [0.0] * (n - len(self.coefficients))
        want = [float(e) for e in expected] + [0.0] * (n - len(expected))
        return [abs(g - w) for g, w in zip(got, want)]

    def matches(self, expected, tol: float) -> bool:
        return all(e <= tol for e in self.errors(expected))

    def imag_decay_constant(self, slack: float = IMAG_SLACK) -> float:
        """``C`` for ``|Im c(sigma)| <= C sigma``.

        The ratio ``|Im| / sigma`` tends to a limit with an O(sigma) correction,
        often from below, so the first-point ratio alone undershoots. ``C`` is
        the larger of that ratio and the linear extrapolation of the ratio to
        sigma = 0, plus ``slack`` relative headroom.
        """
        ratios = [im / float(s) for im, s in zip(self.imag_residue, self.sigmas)]
        limit, _, _ = linear_fit(self.sigmas, ratios)
        return (1 + slack) * max(ratios[0], limit.real)

    def imag_decay_ok(self, floor: float = IMAG_FLOOR, slack: float = IMAG_SLACK) -> bool:
        """``|Im c(sigma_i)| <= C sigma_i`` along the schedule."""
        C = self.imag_decay_constant(slack)
        return all(im <= C * float(s) + floor for im, s in zip(self.imag_residue, self.sigmas))

    def imag_decay_first_point(self, floor: float = IMAG_FLOOR) -> bool:
        """The bare check with ``C = |Im c(sigma_0)| / sigma_0``."""
        C = self.imag_residue[0] / float(self.sigmas[0])
        return all(im <= C * float(s) + floor for im, s in zip(self.imag_residue, self.sigmas))

    def to_record(self) -> dict:
        return {
            "label": self.label,
            "order": self.order,
            "sigmas": [to_string(s) for s in self.sigmas],
            "coefficients": [round(c, 12) for c in self.coefficients],
            "intercept_imag": [round(z.imag, 12) for z in self.intercepts],
            "slopes": [[round(z.real, 12), round(z.imag, 12)] for z in self.slopes],
            "residuals": [float(f"{r:.6e}") for r in self.residuals],
            "imag_residue": [float(f"{r:.6e}") for r in self.imag_residue],
            "exact": [[str(v) for v in row] for row in self.exact],
        }


def linear_fit(sigmas, values):
    """Least-squares ``value = a + b sigma`` on complex data; returns (a, b, rms)."""
    x = np.array([float(s) for s in sigmas])
    y = np.array(values, dtype=complex)
    X = np.column_stack([np.ones_like(x), x]).astype(complex)
    (a, b), *_ = np.linalg.lstsq(X, y, rcond=None)
    rms = float(np.sqrt(np.mean(np.abs(X @ np.array([a, b]) - y) ** 2)))
    return complex(a), complex(b), rms


def _estimate(sigmas, coeff_rows, exact_rows, label, expected=None) -> AssociationEstimate:
    per_sigma = tuple(tuple(c.to_complex() for c in row) for row in coeff_rows)
    J = len(per_sigma[0]) - 1
    intercepts, slopes, residuals = [], [], []
    for j in range(J + 1):
        a, b, rms = linear_fit(sigmas, [row[j] for row in per_sigma])
        intercepts.append(a)
        slopes.append(b)
        residuals.append(rms)
    imag = tuple(max(abs(z.imag) for z in row) for row in per_sigma)
    return AssociationEstimate(
        order=J,
        coefficients=tuple(a.real for a in intercepts),
        intercepts=tuple(intercepts),
        slopes=tuple(slopes),
        sigmas=tuple(sigmas),
        per_sigma=per_sigma,
        exact=tuple(tuple(row) for row in exact_rows),
        residuals=tuple(residuals),
        imag_residue=imag,
        label=label,
        expected=expected,
    )


def jet_matrix(tests) -> list[list[Q]]:
    """``A[j][i] = (-1)^i psi_j^(i)(0)``, so that ``I = A c``."""
    J = len(tests) - 1
    return [[(-1) ** i * t.derivative_at_zero(i) for i in range(J + 1)] for t in tests]


def _check_schedule(schedule: SigmaSchedule, m: Mollifier, tests):
    if len(schedule) < 3:
        raise ScheduleError("schedule must have at least 3 sigmas")
    reach = schedule.sigma_max * m.radius
    for t in tests:
        if t.core is not None and not (t.core[0] < -reach and reach < t.core[1]):
            raise ScheduleError(
                f"sigma_max * l = {to_string(reach)} leaves the plateau core of {t.label}"
            )


def extract(
    f: PiecewiseModel,
    m: Mollifier,
    p: int,
    schedule: SigmaSchedule = DEFAULT_SCHEDULE,
    J: int | None = None,
    tests=None,
    expected=None,
) -> AssociationEstimate:
    """Estimate ``c_0..c_J`` in ``F . D^(p) ~ sum_j c_j delta^(j)``."""
    J = p if J is None else J
    tests = [plateau_test(j) for j in range(J + 1)] if tests is None else list(tests)
    if len(tests) != J + 1:
        raise ValueError(f"need exactly J + 1 = {J + 1} test functions")
    _check_schedule(schedule, m, tests)
    A = jet_matrix(tests)
    coeff_rows, exact_rows = [], []
    for sigma in schedule:
        G = product_net(f, m, p, sigma)
        I = [pair(G, t) for t in tests]
        exact_rows.append(I)
        coeff_rows.append(solve(A, I))
    label = f"{f.name or 'f'} . D^({p})"
    return _estimate(schedule.sigmas, coeff_rows, exact_rows, label, expected)


def association_check(
    kind: str,
    m: Mollifier,
    psi: TestFunction,
    schedule: SigmaSchedule = DEFAULT_SCHEDULE,
    f: PiecewiseModel | None = None,
) -> AssociationEstimate:
    """``delta``: <D_sigma, psi> -> psi(0); ``delta_sq``: <D_sigma^2, psi> -> psi(0);
    ``model``: <F_sigma, psi> -> <f, psi>."""
    if kind in ("delta", "delta_sq"):
        _check_schedule(schedule, m, [psi])
        expected = psi.derivative_at_zero(0)
    elif kind == "model":
        if f is None:
            raise ValueError("model association needs a PiecewiseModel")
        expected = pair(f.function, psi).rational()
    else:
        raise ValueError(f"unknown association kind {kind!r}")
    rows, exact = [], []
    lo, hi = psi.psi.support()
    W = max(abs(lo), abs(hi))
    for sigma in schedule:
        if kind == "model":
            G = model(f, m, sigma, W).F
        else:
            D = scaled_instance(m, sigma)
            G = D if kind == "delta" else D * D
        v = pair(G, psi)
        rows.append([v])
        exact.append([v])
    label = f"{kind} vs {psi.label or 'psi'}"
    return _estimate(schedule.sigmas, rows, exact, label, (expected,))


@dataclass
class DivergenceReport:
    q: int
    integral_phi_sq: Q
    psi_at_zero: Q
    epsilons: tuple
    pairings: tuple
    scaled: tuple
    exact_limit_hits: tuple
    in_core: tuple
    ratios: tuple
    fitted_limit: float

    @property
    def expected_limit(self) -> Q:
        return self.psi_at_zero * self.integral_phi_sq

    def to_record(self) -> dict:
        return {
            "q": self.q,
            "integral_phi_sq": to_string(self.integral_phi_sq),
            "expected_limit": to_string(self.expected_limit),
            "epsilons": [to_string(e) for e in self.epsilons],
            "pairings": [to_string(v) for v in self.pairings],
            "eps_times_pairing": [to_string(v) for v in self.scaled],
            "exact_limit_hits": list(self.exact_limit_hits),
            "in_core": list(self.in_core),
            "ratios": [round(r, 12) for r in self.ratios],
            "fitted_limit": round(self.fitted_limit, 12),
        }


def embedding_divergence(
    q: int,
    schedule: SigmaSchedule = DEFAULT_SCHEDULE,
    psi: TestFunction | None = None,
    k: int = 4,
) -> DivergenceReport:
    """Growth of ``<phi_eps^2, psi>`` for an A_q bump ``phi`` on ``[-1, 1]``.

    ``eps * <phi_eps^2, psi>`` tends to ``psi(0) int phi^2`` (nonzero), so the
    pairing itself blows up like ``1/eps``. When ``psi`` is constant on
    ``supp phi_eps`` the scaled value equals the limit exactly.
    """
    phi = build_bump(BumpSpec((-1, 1), k, tuple((j, 1 if j == 0 else 0) for j in range(q + 1))))
    psi = plateau_test(0) if psi is None else psi
    phi_sq = integrate(phi * phi).rational()
    psi0 = psi.derivative_at_zero(0)
    values, scaled, hits, cores = [], [], [], []
    for eps in schedule:
        ph = scale_net(phi, eps)
        v = pair(ph * ph, psi).rational()
        values.append(v)
        scaled.append(eps * v)
        inside = bool(psi.core is not None and psi.core[0] <= -eps and eps <= psi.core[1])
        cores.append(inside)
        hits.append(inside and psi_constant_on_core(psi) and eps * v == psi0 * phi_sq)
    ratios = tuple(float(values[i + 1] / values[i]) for i in range(len(values) - 1))
    a, _, _ = linear_fit(schedule.sigmas, [complex(float(s)) for s in scaled])
    return DivergenceReport(
        q=q,
        integral_phi_sq=phi_sq,
        psi_at_zero=psi0,
        epsilons=schedule.sigmas,
        pairings=tuple(values),
        scaled=tuple(scaled),
        exact_limit_hits=tuple(hits),
        in_core=tuple(cores),
        ratios=ratios,
        fitted_limit=a.real,
    )


def psi_constant_on_core(psi: TestFunction) -> bool:
    if psi.core is None:
        return False
    lo, hi = psi.core
    return all(
        p.degree <= 0
        for a, b, p in psi.psi.segments()
        if a is not None and b is not None and a >= lo and b <= hi
    )
