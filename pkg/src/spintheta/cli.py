"""Command-line front end.

Subcommands: theta, jet, quartic, szego, degeneration, picard, verify-all.
Every command can emit a human-readable text report or JSON (--format json);
JSON output is deterministic for fixed inputs and seed, rationals are printed
in lowest terms as "p/q", and the exit code is 0 exactly when every check in
the report passed.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations_with_replacement
from typing import Any

import numpy as np

from . import degenerations as dg
from . import picard as pc
from .errors import SpinThetaError
from .jets import scorza_quartic, theta_jet
from .szego import SzegoContext, on_scorza_locus, szego
from .theta import PeriodMatrix, ThetaCharacteristic, Tolerance, parity, theta, theta_deriv
from .verify import DEFAULT_SEED, CheckResult, run_all

__all__ = ["RunConfig", "Report", "run", "main"]


@dataclass(frozen=True)
class RunConfig:
    command: str
    args: argparse.Namespace
    fmt: str
    tolerance: Tolerance
    seed: int


@dataclass
class Report:
    command: str
    seed: int
    results: dict[str, Any] = field(default_factory=dict)
    checks: list[CheckResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def to_json(self) -> str:
        payload = {
            "command": self.command,
            "seed": self.seed,
            "results": self.results,
            "checks": [
                {"name": c.name, "passed": c.passed, "detail": c.detail} for c in self.checks
            ],
            "passed": self.passed,
        }
        return json.dumps(payload, sort_keys=True, indent=2)

    @classmethod
    def from_json(cls, text: str) -> "Report":
        data = json.loads(text)
        report = cls(data["command"], data["seed"], data["results"])
        report.checks = [
            CheckResult(c["name"], c["passed"], c["detail"]) for c in data["checks"]
        ]
        return report

    def render_text(self) -> str:
        lines = [f"command: {self.command}  (seed {self.seed})"]
        lines.extend(_render_value(self.results, indent=2))
        for check in self.checks:
            lines.append(check.line())
        if self.checks:
            lines.append("ALL CHECKS PASS" if self.passed else "CHECKS FAILED")
        return "\n".join(lines)


def _render_value(value: Any, indent: int = 0, key: str | None = None) -> list[str]:
    pad = " " * indent
    label = f"{key}: " if key else ""
    if isinstance(value, dict):
        lines = [f"{pad}{key}:"] if key else []
        for k, v in value.items():
            lines.extend(_render_value(v, indent + 2, str(k)))
        return lines
    if isinstance(value, list) and value and isinstance(value[0], (dict, list)):
        lines = [f"{pad}{key}:"] if key else []
        for v in value:
            lines.append(f"{pad}  -")
            lines.extend(_render_value(v, indent + 4))
        return lines
    return [f"{pad}{label}{value}"]


def _parse_point(text: str, g: int) -> np.ndarray:
    coords = []
    for part in text.split(";"):
        re_s, im_s = part.split(",")
        coords.append(complex(float(re_s), float(im_s)))
    if len(coords) != g:
        raise SpinThetaError(f"point has {len(coords)} coordinates, expected {g}")
    return np.array(coords, dtype=complex)


def _load_period(path: str) -> PeriodMatrix:
    with open(path, encoding="utf-8") as handle:
        return PeriodMatrix.from_json(json.load(handle))


def _complex_pair(value: complex) -> list[float]:
    return [float(value.real), float(value.imag)]


def _frac(value) -> str:
    return str(Fraction(value)) if not isinstance(value, str) else value


# ---------------------------------------------------------------------------
# command handlers


def _cmd_theta(cfg: RunConfig) -> Report:
    pm = _load_period(cfg.args.period)
    char = ThetaCharacteristic.parse(cfg.args.char)
    z = _parse_point(cfg.args.point, pm.g)
    report = Report("theta", cfg.seed)
    if cfg.args.deriv:
        mu = tuple(int(v) for v in cfg.args.deriv.split(","))
        value = theta_deriv(pm, z, char, mu, cfg.tolerance)
        report.results = {"deriv": list(mu), "value": _complex_pair(value)}
    else:
        value = theta(pm, z, char, cfg.tolerance)
        report.results = {"value": _complex_pair(value), "parity": parity(char)}
    return report


def _cmd_jet(cfg: RunConfig) -> Report:
    pm = _load_period(cfg.args.period)
    char = ThetaCharacteristic.parse(cfg.args.char)
    jet = theta_jet(pm, char, cfg.tolerance)
    report = Report("jet", cfg.seed)
    report.results = {
        "theta0": _complex_pair(jet.theta0),
        "theta2": [[_complex_pair(v) for v in row] for row in jet.theta2],
        "theta4": [
            {"idx": list(idx), "re": val.real, "im": val.imag}
            for idx, val in _tensor_entries(jet.theta4)
        ],
    }
    return report


def _tensor_entries(tensor: np.ndarray):
    g = tensor.shape[0]
    for idx in combinations_with_replacement(range(g), 4):
        yield idx, complex(tensor[idx])


def _cmd_quartic(cfg: RunConfig) -> Report:
    pm = _load_period(cfg.args.period)
    char = ThetaCharacteristic.parse(cfg.args.char)
    quartic = scorza_quartic(theta_jet(pm, char, cfg.tolerance))
    report = Report("quartic", cfg.seed)
    report.results = quartic.to_json()
    return report


def _cmd_szego(cfg: RunConfig) -> Report:
    pm = _load_period(cfg.args.period)
    char = ThetaCharacteristic.parse(cfg.args.char)
    ctx = SzegoContext(pm, char, cfg.tolerance)
    u = _parse_point(cfg.args.point, pm.g)
    value = szego(ctx, u, cfg.tolerance)
    report = Report("szego", cfg.seed)
    report.results = {
        "value": _complex_pair(value),
        "on_locus": bool(on_scorza_locus(ctx, u, cfg.tolerance)),
    }
    return report


_DIVISOR_BUILDERS = {
    "thetanull": lambda g, i: dg.limit_model_thetanull(g),
    "T-thetanull": lambda g, i: dg.limit_model_T_thetanull(g),
    "A0": lambda g, i: dg.limit_model_A0(g),
    "B0": lambda g, i: dg.limit_model_B0(g),
    "Ai": lambda g, i: dg.limit_model_Ai(g, i),
    "Bi": lambda g, i: dg.limit_model_Bi(g, i),
}


def _cmd_degeneration(cfg: RunConfig) -> Report:
    g = cfg.args.g
    divisor = cfg.args.divisor
    if divisor in ("Ai", "Bi") and cfg.args.i is None:
        raise SpinThetaError(f"divisor {divisor} needs --i")
    model = _DIVISOR_BUILDERS[divisor](g, cfg.args.i)
    p_a = dg.arithmetic_genus(model)
    target = 1 + 3 * g * (g - 1) if divisor != "T-thetanull" else 1 + 3 * g * (g - 1) // 2
    report = Report("degeneration", cfg.seed)
    report.results = {"divisor": divisor, "g": g, "model": model.to_json(), "p_a": p_a}
    report.checks.append(
        CheckResult("arithmetic-genus", p_a == target, f"p_a = {p_a}, expected {target}")
    )
    return report


def _class_json(cls: pc.SpinDivisorClass) -> dict:
    return cls.to_json()


def _cmd_picard(cfg: RunConfig) -> Report:
    g = cfg.args.g
    action = cfg.args.action
    report = Report(f"picard {action}", cfg.seed)
    if action == "szego-hodge":
        report.results = _class_json(pc.szego_hodge_class(g))
    elif action == "slope":
        value = pc.slope(pc.szego_hodge_class(g))
        bound = pc.moving_slope_bound(g)
        report.results = {"slope": _frac(value), "closed_form": _frac(bound)}
        report.checks.append(
            CheckResult("slope-identity", value == bound, f"{value} == {bound}")
        )
    elif action == "pullback-delta0":
        report.results = _class_json(pc.pullback_delta0_prime(g))
    elif action == "ledger":
        weight, ledger = pc.chern_weight(g)
        report.results = {
            "weight": _frac(weight),
            "entries": [
                {
                    "name": e.name,
                    "value": _frac(e.value),
                    "constant": _frac(e.constant),
                    "terms": [[dep, _frac(c)] for dep, c in e.terms],
                    "note": e.note,
                }
                for e in ledger.entries
            ],
        }
        report.checks.append(
            CheckResult("ledger-replay", ledger.consistent(), "rules reproduce stored values")
        )
    else:  # pragma: no cover - argparse restricts choices
        raise SpinThetaError(f"unknown picard action {action!r}")
    return report


def _cmd_verify_all(cfg: RunConfig) -> Report:
    report = Report("verify-all", cfg.seed)
    report.checks = run_all(quick=cfg.args.quick, seed=cfg.seed)
    report.results = {"quick": bool(cfg.args.quick), "n_checks": len(report.checks)}
    return report


_HANDLERS = {
    "theta": _cmd_theta,
    "jet": _cmd_jet,
    "quartic": _cmd_quartic,
    "szego": _cmd_szego,
    "degeneration": _cmd_degeneration,
    "picard": _cmd_picard,
    "verify-all": _cmd_verify_all,
}


def run(cfg: RunConfig) -> Report:
    return _HANDLERS[cfg.command](cfg)


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="spintheta",
        description="Theta functions, quartic forms and divisor-class "
        "arithmetic for even spin curves",
    )
    parser.add_argument("--format", choices=("text", "json"), default="text")
    parser.add_argument("--eps-trunc", type=float, default=None)
    parser.add_argument("--eps-zero", type=float, default=None)
    parser.add_argument("--seed", type=int, default=DEFAULT_SEED)
    sub = parser.add_subparsers(dest="command", required=True)

    p_theta = sub.add_parser("theta", help="evaluate theta or a derivative")
    theta_sub = p_theta.add_subparsers(dest="action", required=True)
    p_theta_eval = theta_sub.add_parser("eval")
    p_theta_eval.add_argument("--period", required=True)
    p_theta_eval.add_argument("--char", required=True)
    p_theta_eval.add_argument("--point", required=True)
    p_theta_eval.add_argument("--deriv", default=None, help="comma-separated indices")

    p_jet = sub.add_parser("jet", help="Taylor jet at the origin")
    p_jet.add_argument("--period", required=True)
    p_jet.add_argument("--char", required=True)

    p_quartic = sub.add_parser("quartic", help="quartic form of the jet")
    p_quartic.add_argument("--period", required=True)
    p_quartic.add_argument("--char", required=True)

    p_szego = sub.add_parser("szego", help="normalized kernel")
    szego_sub = p_szego.add_subparsers(dest="action", required=True)
    p_szego_eval = szego_sub.add_parser("eval")
    p_szego_eval.add_argument("--period", required=True)
    p_szego_eval.add_argument("--char", required=True)
    p_szego_eval.add_argument("--point", required=True)

    p_deg = sub.add_parser("degeneration", help="limit stable-curve model")
    p_deg.add_argument("--divisor", choices=sorted(_DIVISOR_BUILDERS), required=True)
    p_deg.add_argument("--g", type=int, required=True)
    p_deg.add_argument("--i", type=int, default=None)

    p_pic = sub.add_parser("picard", help="divisor-class arithmetic")
    p_pic.add_argument("action", choices=("szego-hodge", "slope", "pullback-delta0", "ledger"))
    p_pic.add_argument("--g", type=int, required=True)

    p_verify = sub.add_parser("verify-all", help="run the acceptance suite")
    p_verify.add_argument("--quick", action="store_true")
    return parser


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    tol_kwargs = {}
    if args.eps_trunc is not None:
        tol_kwargs["eps_trunc"] = args.eps_trunc
    if args.eps_zero is not None:
        tol_kwargs["eps_zero"] = args.eps_zero
    cfg = RunConfig(
        command=args.command,
        args=args,
        fmt=args.format,
        tolerance=Tolerance(**tol_kwargs),
        seed=args.seed,
    )
    try:
        report = run(cfg)
    except (SpinThetaError, ValueError, KeyError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    print(report.to_json() if cfg.fmt == "json" else report.render_text())
    return 0 if report.passed else 1


if __name__ == "__main__":
    sys.exit(main())
