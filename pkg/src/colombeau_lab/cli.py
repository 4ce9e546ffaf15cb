"""Batch front-end: ``colombeau-lab {verify-mollifier,associate,table,divergence}``.

Every command builds a :class:`Report` of records ``(name, expected, observed,
verdict)`` and writes it as JSON or CSV. Exit status: 0 when no record fails,
1 when any does, 2 on invalid input.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import time
from dataclasses import dataclass, field, replace

from .association import (
    DEFAULT_SCHEDULE,
    OracleInapplicable,
    ScheduleError,
    SigmaSchedule,
    embedding_divergence,
    extract,
    identity_suite,
    oracle_classical,
    oracle_prior,
    oracle_thm1,
    oracle_thm2,
)
from .exactcalc import as_rational, to_string
from .mollifier import (
    MollifierError,
    alternative_mollifier,
    default_mollifier,
    from_description,
    instantiate,
    verify_conditions,
)
from .models import FAMILIES, ModelSpecError, abs_nu, abs_nu_sgn, heaviside, nu_plus, parse_model

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2
DEFAULT_TOLERANCE = 1e-2
FLOAT_DIGITS = 10


class ConfigError(ValueError):
    """Unusable configuration; maps to exit status 2."""


@dataclass
class RunConfig:
    mollifier: object = "default"
    model: object = "heaviside"
    p: int = 1
    order: int | None = None
    sigmas: tuple = DEFAULT_SCHEDULE.sigmas
    tolerance: float = DEFAULT_TOLERANCE
    q: int = 2
    format: str = "json"
    out: str | None = None
    timing: bool = False

    def validate(self) -> "RunConfig":
        if not self.tolerance > 0:
            raise ConfigError("tolerance must be positive")
        if self.p < 0:
            raise ConfigError("p must be nonnegative")
        if self.order is not None and self.order < 0:
            raise ConfigError("order must be nonnegative")
        if self.q < 0:
            raise ConfigError("q must be nonnegative")
        if self.format not in ("json", "csv"):
            raise ConfigError("format must be json or csv")
        try:
            SigmaSchedule(tuple(self.sigmas))
        except (ValueError, TypeError) as exc:
            raise ConfigError(f"bad sigma schedule: {exc}") from exc
        return self

    @property
    def schedule(self) -> SigmaSchedule:
        return SigmaSchedule(tuple(self.sigmas))

    def echo(self) -> dict:
        return {
            "mollifier": self.mollifier if isinstance(self.mollifier, str) else "inline",
            "model": self.model if isinstance(self.model, str) else "inline",
            "p": self.p,
            "order": self.p if self.order is None else self.order,
            "sigmas": [to_string(s) for s in self.sigmas],
            "tolerance": self.tolerance,
            "q": self.q,
        }


@dataclass
class Report:
    command: str
    config: dict
    records: list = field(default_factory=list)
    diagnostics: list = field(default_factory=list)
    wall_time: float | None = None

    def add(self, name, expected, observed, verdict, detail=""):
        self.records.append(
            {"name": name, "expected": expected, "observed": observed, "verdict": verdict, "detail": detail}
        )

    @property
    def summary(self) -> dict:
        counts = {"pass": 0, "fail": 0, "note": 0}
        for r in self.records:
            counts[r["verdict"]] += 1
        return counts

    @property
    def exit_code(self) -> int:
        return EXIT_FAIL if self.summary["fail"] else EXIT_OK

    def to_dict(self) -> dict:
        out = {
            "command": self.command,
            "config": self.config,
            "records": self.records,
            "summary": self.summary,
        }
        if self.diagnostics:
            out["diagnostics"] = self.diagnostics
        if self.wall_time is not None:
            out["wall_time_s"] = round(self.wall_time, 3)
        return out

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True) + "\n"

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["name", "expected", "observed", "verdict", "detail"])
        for r in self.records:
            w.writerow([r["name"], _cell(r["expected"]), _cell(r["observed"]), r["verdict"], r["detail"]])
        return buf.getvalue()


def _cell(v) -> str:
    if isinstance(v, (list, tuple)):
        return ";".join(_cell(x) for x in v)
    if isinstance(v, float):
        return f"{v:.{FLOAT_DIGITS}f}"
    return str(v)


def _fixed(x: float) -> float:
    return round(x, FLOAT_DIGITS) + 0.0


# ---------------------------------------------------------------------------
# config resolution
# ---------------------------------------------------------------------------
def resolve_mollifier(spec):
    if isinstance(spec, dict):
        return from_description(spec)
    if spec == "default":
        return default_mollifier()
    if spec == "alternative":
        return alternative_mollifier()
    try:
        with open(spec) as fh:
            return from_description(json.load(fh))
    except OSError as exc:
        raise ConfigError(f"cannot read mollifier description {spec!r}: {exc}") from exc


def parse_sigmas(text: str) -> tuple:
    try:
        return tuple(as_rational(s) for s in text.split(",") if s.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ConfigError(f"bad sigma list {text!r}: {exc}") from exc


def build_config(args) -> RunConfig:
    cfg = RunConfig()
    if args.config:
        try:
            with open(args.config) as fh:
                data = json.load(fh)
        except (OSError, json.JSONDecodeError) as exc:
            raise ConfigError(f"cannot read config {args.config!r}: {exc}") from exc
        if not isinstance(data, dict):
            raise ConfigError("config must be a JSON object")
        unknown = set(data) - {f for f in RunConfig.__dataclass_fields__}
        if unknown:
            raise ConfigError(f"unknown config keys: {sorted(unknown)}")
        if "sigmas" in data:
            try:
                data["sigmas"] = tuple(as_rational(s) for s in data["sigmas"])
            except (TypeError, ValueError) as exc:
                raise ConfigError(f"bad sigmas in config: {exc}") from exc
        cfg = replace(cfg, **data)
    overrides = {
        "mollifier": args.mollifier,
        "model": getattr(args, "model", None),
        "p": getattr(args, "p", None),
        "order": getattr(args, "order", None),
        "q": getattr(args, "q", None),
        "tolerance": args.tolerance,
        "format": args.format,
        "out": args.out,
    }
    cfg = replace(cfg, **{k: v for k, v in overrides.items() if v is not None})
    if args.sigma:
        cfg = replace(cfg, sigmas=parse_sigmas(args.sigma))
    if args.timing:
        cfg = replace(cfg, timing=True)
    return cfg.validate()


# ---------------------------------------------------------------------------
# commands
# ---------------------------------------------------------------------------
def _compare(report, name, expected, est, tol, detail=""):
    errs = est.errors(expected)
    verdict = "pass" if max(errs) <= tol else "fail"
    report.add(
        name,
        [to_string(e) for e in expected],
        [_fixed(c) for c in est.coefficients],
        verdict,
        detail or f"max abs error {max(errs):.3e}",
    )
    return verdict


def cmd_verify_mollifier(cfg: RunConfig) -> Report:
    m = resolve_mollifier(cfg.mollifier)
    rep = Report("verify-mollifier", cfg.echo())
    for s in cfg.sigmas:
        inst = instantiate(m, s)
        tag = f"s={to_string(s)}"
        for key, (expected, observed, ok) in verify_conditions(inst).checks.items():
            rep.add(f"condition {key} {tag}", expected, observed, "pass" if ok else "fail",
                    "degenerate instance D = f" if inst.degenerate else "")
        for name, expected, observed, ok in identity_suite(m, s).rows():
            rep.add(f"identity {name} {tag}", expected, observed, "pass" if ok else "fail")
    return rep


def _oracle_for(f, p):
    if p == 1:
        return oracle_thm1(f)
    if p == 2:
        return oracle_thm2(f)
    return oracle_classical(f, p)


def cmd_associate(cfg: RunConfig) -> Report:
    m = resolve_mollifier(cfg.mollifier)
    try:
        f = parse_model(cfg.model)
    except ModelSpecError as exc:
        raise ConfigError(str(exc)) from exc
    J = cfg.p if cfg.order is None else cfg.order
    rep = Report("associate", cfg.echo())
    est = extract(f, m, cfg.p, cfg.schedule, J=J)
    rep.diagnostics.append(est.to_record())
    try:
        oracle = _oracle_for(f, cfg.p)
    except OracleInapplicable as exc:
        rep.add(f"{est.label} oracle", None, [_fixed(c) for c in est.coefficients], "note", str(exc))
    else:
        _compare(rep, f"{est.label} vs {oracle.label}", oracle.padded(J + 1), est, cfg.tolerance)
    rep.add(
        f"{est.label} imaginary decay",
        "|Im| <= C sigma",
        [float(f"{x:.6e}") for x in est.imag_residue],
        "pass" if est.imag_decay_ok() else "note",
        f"C = {est.imag_decay_constant():.6f}",
    )
    if f.name == "abs_nu_sgn:1" and cfg.p == 2:
        rep.add(*_printed_minus_two_delta_note(est))
    return rep


def _printed_minus_two_delta_note(est):
    return (
        "x.D'' published value",
        ["-2", "0", "0"],
        [_fixed(c) for c in est.coefficients],
        "note",
        "a printed value of -2*delta for |x|sgn(x).D'' contradicts the D'' mean/jump formula "
        "and the classical rule x.delta'' = -2*delta'; it is not used as an oracle",
    )


EXAMPLES = (
    ("H.D'", heaviside, 1),
    ("H.D''", heaviside, 2),
    ("X+.D''", lambda: nu_plus(1), 2),
    ("|X|.D''", lambda: abs_nu(1), 2),
    ("|X|sgn(x).D''", lambda: abs_nu_sgn(1), 2),
)


def prior_grid(pmax: int = 2):
    """``(family, p, order)`` triples covered by the normed-power formulas."""
    rows = []
    for fam in ("plus", "minus"):
        for p in range(pmax + 1):
            rows += [(fam, p, p + 1), (fam, p, p + 2)]
    for p in range(pmax + 1):
        if p % 2 == 1:
            rows += [("abs", p, p + 1), ("abs", p, p + 2)]
        if p % 2 == 0 and p >= 2:
            rows += [("abs_sgn", p, p + 1), ("abs_sgn", p, p + 2)]
    return rows


def cmd_table(cfg: RunConfig) -> Report:
    m = resolve_mollifier(cfg.mollifier)
    rep = Report("table", cfg.echo())
    for name, build, p in EXAMPLES:
        f = build()
        oracle = _oracle_for(f, p)
        est = extract(f, m, p, cfg.schedule)
        _compare(rep, f"{name} vs {oracle.label}", oracle.padded(p + 1), est, cfg.tolerance)
        if f.name == "abs_nu_sgn:1":
            rep.add(*_printed_minus_two_delta_note(est))
    for fam, p, order in prior_grid():
        oracle = oracle_prior(p, fam, order)
        est = extract(FAMILIES[fam](p), m, order, cfg.schedule)
        _compare(rep, f"{fam}^{p}.D^({order}) vs prior", oracle.coeffs, est, cfg.tolerance)
    return rep


def cmd_divergence(cfg: RunConfig) -> Report:
    rep = Report("divergence", cfg.echo())
    d = embedding_divergence(cfg.q, cfg.schedule)
    rep.diagnostics.append(d.to_record())
    limit = to_string(d.expected_limit)
    for eps, v, hit, inside in zip(d.epsilons, d.scaled, d.exact_limit_hits, d.in_core):
        verdict = "pass" if hit else ("fail" if inside else "note")
        detail = "" if inside else "support of phi_eps leaves the plateau core; exact equality not expected"
        rep.add(f"eps*<phi_eps^2,psi> eps={to_string(eps)}", limit, to_string(v), verdict, detail)
    for i, r in enumerate(d.ratios):
        ok = abs(r - 2) <= cfg.tolerance
        rep.add(f"pairing ratio step {i + 1}", "2", _fixed(r), "pass" if ok else "fail")
    ok = abs(d.fitted_limit - float(d.expected_limit)) <= cfg.tolerance
    rep.add("fitted limit", limit, _fixed(d.fitted_limit), "pass" if ok else "fail",
            f"int phi^2 = {to_string(d.integral_phi_sq)}")
    return rep


COMMANDS = {
    "verify-mollifier": cmd_verify_mollifier,
    "associate": cmd_associate,
    "table": cmd_table,
    "divergence": cmd_divergence,
}


# ---------------------------------------------------------------------------
# entry point
# ---------------------------------------------------------------------------
def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", help="JSON file with RunConfig fields")
    common.add_argument("--mollifier", help="default, alternative, or a description JSON path")
    common.add_argument("--sigma", help="comma-separated rationals, e.g. 1/8,1/16,1/32")
    common.add_argument("--tolerance", type=float, help=f"absolute tolerance (default {DEFAULT_TOLERANCE})")
    common.add_argument("--format", choices=("json", "csv"))
    common.add_argument("--out", help="write the report here instead of stdout")
    common.add_argument("--timing", action="store_true", help="include wall time in the report")

    ap = argparse.ArgumentParser(prog="colombeau-lab", description="Exact verification of singular products.")
    sub = ap.add_subparsers(dest="command", required=True)
    sub.add_parser("verify-mollifier", parents=[common], help="exact mollifier conditions and identities")
    a = sub.add_parser("associate", parents=[common], help="extract F.D^(p) and compare with an oracle")
    a.add_argument("--model", help="e.g. heaviside, nu_plus:1, abs_nu:1, const:1/2, poly:1,0,3")
    a.add_argument("--p", type=int, help="derivative order of D")
    a.add_argument("--order", type=int, help="highest delta derivative J (default p)")
    sub.add_parser("table", parents=[common], help="worked examples and normed-power grid")
    d = sub.add_parser("divergence", parents=[common], help="1/eps growth of a squared delta net")
    d.add_argument("--q", type=int, help="number of vanishing moments of the bump")
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        cfg = build_config(args)
        t0 = time.perf_counter()
        report = COMMANDS[args.command](cfg)
    except (ConfigError, ModelSpecError, ScheduleError, MollifierError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (ValueError, TypeError, KeyError) as exc:
        print(f"error: invalid input: {exc}", file=sys.stderr)
        return EXIT_INPUT
    if cfg.timing:
        report.wall_time = time.perf_counter() - t0
    text = report.to_json() if cfg.format == "json" else report.to_csv()
    if cfg.out:
        with open(cfg.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    s = report.summary
    print(f"{args.command}: {s['pass']} pass, {s['fail']} fail, {s['note']} note", file=sys.stderr)
    return report.exit_code


if __name__ == "__main__":
    sys.exit(main())
