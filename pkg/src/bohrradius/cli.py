"""Command-line front end.

Exit codes: 0 success, 1 a certified claim failed, 2 usage or configuration error.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from dataclasses import dataclass
from typing import Any, Sequence

import numpy as np

from . import extremal, verify
from .exceptions import ConfigurationError, DomainError, PreconditionError, SolverError
from .harmonic import (HarmonicCoeffs, kernel_K_coeffs, p_bohr_radius_search, p_bohr_sum,
                       th3_bound, th4_bound)
from .radii import (closed_form_rpm, extremal_parameter_a, harmonic_r0, harmonic_rp_a0,
                    odd_harmonic_rho, pair_counterexample_radius, solve_rpm, threshold_A,
                    threshold_A_upper)
from .series import PowerSeries, majorant_sum

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2
COMMANDS = ("radius", "extremal", "harmonic", "verify", "table")
FORMATS = ("json", "csv", "text")
CURVE_POINTS = 101
TABLE_P_MAX = 6


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


@dataclass
class RunConfig:
    """Validated options shared by every command."""

    command: str
    target: str | None = None
    p: int | None = None
    m: int | None = None
    exponent_p: float | None = None
    a0: float | None = None
    r: float | None = None
    mu: float = math.pi / 2.0
    a: float | None = None
    alpha: float = 0.0
    beta: float = 0.0
    lam_re: float = 0.0
    lam_im: float = 0.0
    order: int = 256
    r_override: float | None = None
    p_max: int = 8
    delta: float = 0.01
    seed: int = 42
    samples: int = 500
    tol: float = verify.INEQUALITY_TOL
    jobs: int = 1
    experimental: bool = False
    format: str = "text"
    output_path: str | None = None

    def __post_init__(self):
        if self.command not in COMMANDS:
            raise UsageError(f"unknown command {self.command!r}")
        if self.format not in FORMATS:
            raise UsageError(f"unknown format {self.format!r}")
        if not self.tol > 0.0:
            raise UsageError("--tol must be positive")
        if self.samples < 0 or self.jobs < 1 or self.order < 1:
            raise UsageError("--samples must be >= 0, --jobs and --order >= 1")

    @property
    def q(self) -> float:
        """The l^p exponent, 1 unless given."""
        return 1.0 if self.exponent_p is None else self.exponent_p

    def need(self, *names: str):
        missing = [n for n in names if getattr(self, n) is None]
        if missing:
            flags = ", ".join("--" + n.replace("_", "-") for n in missing)
            raise UsageError(f"{self.command} {self.target} requires {flags}")


# --------------------------------------------------------------------------
# output

def _jsonable(x):
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    if isinstance(x, (np.floating, np.integer, np.bool_)):
        return x.item()
    if isinstance(x, float) and not math.isfinite(x):
        return str(x)
    return x


def _fmt(v) -> str:
    if isinstance(v, float):
        return f"{v:.9g}"
    return str(v)


def render(payload: dict[str, Any], fmt: str) -> str:
    """Serialise ``payload``; CSV and text use its ``rows`` table if present."""
    if fmt == "json":
        return json.dumps(_jsonable(payload), indent=2)
    rows = payload.get("rows")
    if rows is None:
        rows = [{k: v for k, v in payload.items() if not isinstance(v, (dict, list))}]
    header = list(dict.fromkeys(k for row in rows for k in row))
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(header)
        for row in rows:
            w.writerow([_fmt(row.get(k, "")) for k in header])
        return buf.getvalue().rstrip("\n")
    lines = [payload["title"]] if "title" in payload else []
    for row in rows:
        lines.append("  ".join(f"{k}={_fmt(row[k])}" for k in header if k in row))
    if "summary" in payload:
        lines.append(payload["summary"])
    return "\n".join(lines)


def _radius_payload(name: str, res) -> dict[str, Any]:
    out = {"target": name}
    out.update(res.to_dict())
    out["rows"] = [{"target": name, "value": res.value, "bracket_lo": res.bracket_lo,
                    "bracket_hi": res.bracket_hi, "residual": res.residual, "method": res.method}]
    return out


def _curve(fun, r_hi: float) -> list[dict[str, float]]:
    return [{"r": float(r), "M": float(fun(float(r)))}
            for r in np.linspace(0.0, r_hi, CURVE_POINTS)]


def _crossing(fun, curve) -> float | None:
    """Radius where the curve first exceeds one, refined by bisection on ``fun``."""
    for left, right in zip(curve, curve[1:]):
        if left["M"] <= 1.0 < right["M"]:
            lo, hi = left["r"], right["r"]
            for _ in range(60):
                mid = 0.5 * (lo + hi)
                lo, hi = (mid, hi) if fun(mid) <= 1.0 else (lo, mid)
            return lo
    return None


# --------------------------------------------------------------------------
# commands

RADIUS_TARGETS = ("rpm", "harmonic-r0", "rp-a0", "rho", "A", "A-upper")


def cmd_radius(cfg: RunConfig) -> tuple[dict, int]:
    t = cfg.target
    if t == "rpm":
        cfg.need("p", "m")
        res = solve_rpm((cfg.p, cfg.m))
        payload = _radius_payload("rpm", res)
        cf = closed_form_rpm((cfg.p, cfg.m))
        if cf is not None:
            payload["closed_form"] = cf.value
            payload["rows"][0]["closed_form"] = cf.value
        return payload, EXIT_OK
    if t == "harmonic-r0":
        return _radius_payload(t, harmonic_r0()), EXIT_OK
    if t == "rp-a0":
        cfg.need("a0")
        return _radius_payload(t, harmonic_rp_a0(cfg.q, cfg.a0)), EXIT_OK
    if t == "rho":
        return _radius_payload(t, odd_harmonic_rho(cfg.q)), EXIT_OK
    if t in ("A", "A-upper"):
        fun = threshold_A if t == "A" else threshold_A_upper
        value = fun(cfg.q)
        return {"target": t, "exponent_p": cfg.q, "value": value,
                "rows": [{"target": t, "exponent_p": cfg.q, "value": value}]}, EXIT_OK
    raise UsageError(f"unknown radius target {t!r}; choose from {', '.join(RADIUS_TARGETS)}")


EXTREMAL_TARGETS = ("analytic", "abu", "pair", "f0", "mobius", "phi")


def _series_payload(name: str, s: PowerSeries, curve, extra: dict) -> dict[str, Any]:
    out = {"target": name, **extra, "series": s.to_dict(), "curve": curve}
    out["rows"] = curve
    out["title"] = " ".join(f"{k}={_fmt(v)}" for k, v in extra.items())
    return out


def _harmonic_payload(name: str, hc: HarmonicCoeffs, curve, extra: dict) -> dict[str, Any]:
    out = {"target": name, **extra, "coeffs": hc.to_dict(), "curve": curve, "rows": curve}
    out["title"] = " ".join(f"{k}={_fmt(v)}" for k, v in extra.items())
    return out


def cmd_extremal(cfg: RunConfig) -> tuple[dict, int]:
    t, N = cfg.target, cfg.order
    if t == "analytic":
        cfg.need("p", "m")
        c = (cfg.p, cfg.m)
        s = extremal.analytic_extremal(c, N)
        a = extremal_parameter_a(c)
        fun = lambda r: extremal.closed_form_majorant(c, a, r)
        curve = _curve(fun, 0.999)
        extra = {"p": cfg.p, "m": cfg.m, "a": a, "r_pm": solve_rpm(c).value,
                 "crossing": _crossing(fun, curve)}
        return _series_payload(t, s, curve, extra), EXIT_OK
    if t == "mobius":
        cfg.need("a0")
        s = extremal.mobius_a0_series(cfg.a0, N, r_max=0.999)
        fun = lambda r: majorant_sum(s, r)
        curve = _curve(fun, 0.999)
        return _series_payload(t, s, curve, {"a0": cfg.a0, "crossing": _crossing(fun, curve)}), EXIT_OK
    if t == "phi":
        cfg.need("p")
        s = extremal.phi_alpha(cfg.p, N)
        fun = lambda r: majorant_sum(s, r)
        curve = _curve(fun, 0.999)
        extra = {"p": cfg.p, "alpha": s.coeffs[cfg.p].real, "sharp_radius": 2.0 ** (-0.5 / cfg.p),
                 "crossing": _crossing(fun, curve)}
        return _series_payload(t, s, curve, extra), EXIT_OK
    if t in ("abu", "f0"):
        if t == "abu":
            hc = extremal.abu_example(cfg.mu, N)
            extra = {"mu": cfg.mu, "a_1": abs(hc.a[1])}
        else:
            hc = extremal.harmonic_sharp_f0(cfg.alpha, cfg.beta, N)
            extra = {"alpha": cfg.alpha, "beta": cfg.beta, "a_1": abs(hc.a[1])}
        fun = lambda r: p_bohr_sum(hc, cfg.q, r)
        curve = _curve(fun, hc.r_max)
        extra.update(exponent_p=cfg.q, crossing=_crossing(fun, curve))
        return _harmonic_payload(t, hc, curve, extra), EXIT_OK
    if t == "pair":
        cfg.need("a")
        hc = extremal.pair_counterexample_coeffs(cfg.a)
        fun = lambda r: p_bohr_sum(hc, 1.0, r)
        curve = _curve(fun, 0.999)
        extra = {"a": cfg.a, "r0": pair_counterexample_radius(cfg.a), "crossing": _crossing(fun, curve)}
        return _harmonic_payload(t, hc, curve, extra), EXIT_OK
    raise UsageError(f"unknown extremal target {t!r}; choose from {', '.join(EXTREMAL_TARGETS)}")


HARMONIC_TARGETS = ("sum", "radius", "th3", "th4", "kernel", "explore-odd")


def _named_harmonic(cfg: RunConfig) -> HarmonicCoeffs:
    if cfg.a is not None:
        return extremal.pair_counterexample_coeffs(cfg.a)
    return extremal.abu_example(cfg.mu, cfg.order)


def cmd_harmonic(cfg: RunConfig) -> tuple[dict, int]:
    t = cfg.target
    if t == "sum":
        cfg.need("r")
        value = p_bohr_sum(_named_harmonic(cfg), cfg.q, cfg.r)
        row = {"exponent_p": cfg.q, "r": cfg.r, "sum": value}
        return {**row, "rows": [row]}, EXIT_OK
    if t == "radius":
        return _radius_payload(t, p_bohr_radius_search(_named_harmonic(cfg), cfg.q)), EXIT_OK
    if t in ("th3", "th4"):
        cfg.need("r")
        if t == "th3":
            cfg.need("a0")
            value = th3_bound(cfg.q, cfg.a0, cfg.r)
        else:
            value = th4_bound(cfg.q, cfg.r)
        row = {"exponent_p": cfg.q, "r": cfg.r, "bound": value}
        return {**row, "rows": [row]}, EXIT_OK
    if t == "kernel":
        s = kernel_K_coeffs(complex(cfg.lam_re, cfg.lam_im), cfg.order)
        rows = [{"k": k, "re": float(c.real), "im": float(c.imag)} for k, c in enumerate(s.coeffs)]
        return {"series": s.to_dict(), "rows": rows}, EXIT_OK
    if t == "explore-odd":
        res = verify.explore_odd_radius(cfg.samples, cfg.seed, cfg.q)
        row = res.to_dict()
        return {**row, "rows": [row]}, EXIT_OK
    raise UsageError(f"unknown harmonic target {t!r}; choose from {', '.join(HARMONIC_TARGETS)}")


VERIFY_TARGETS = ("all", "analytic", "harmonic", "odd", "pairs", "lemmas", "wiener",
                  "lemma-c", "sharpness", "oracle")


def _verify_reports(cfg: RunConfig) -> list[verify.VerificationReport]:
    t, kw = cfg.target, dict(n_jobs=cfg.jobs, tol=cfg.tol)
    if t in ("analytic", "sharpness") and (cfg.p is None) != (cfg.m is None):
        raise UsageError("--p and --m go together")
    if t == "analytic" and cfg.p is not None:
        return [verify.certify_analytic_class((cfg.p, cfg.m), cfg.samples, cfg.seed,
                                              r=cfg.r_override, **kw)]
    if t == "analytic" and cfg.r_override is not None:
        raise UsageError("--r-override needs --p and --m")
    if t == "sharpness":
        cfg.need("p", "m")
        return [verify.sharpness_probe((cfg.p, cfg.m), cfg.delta)]
    if t == "harmonic":
        exps = verify.HARMONIC_EXPONENTS if cfg.exponent_p is None else [cfg.exponent_p]
        return [verify.certify_harmonic(q, cfg.samples, cfg.seed, **kw) for q in exps]
    if t == "odd":
        exps = verify.ODD_EXPONENTS if cfg.exponent_p is None else [cfg.exponent_p]
        return ([verify.certify_harmonic(q, cfg.samples, cfg.seed, odd_only=True, **kw) for q in exps]
                + [verify.odd_radius_witness()])
    if t == "pairs":
        return ([verify.certify_pairs(cfg.samples, cfg.seed, experimental=cfg.experimental, **kw)]
                + [verify.pair_counterexample_probe(a) for a in (1.0, 5.0, 10.0)])
    if t == "lemmas":
        return [verify.lemma_grid_check(cfg.p_max)]
    if t == "wiener":
        return [verify.certify_wiener(cfg.samples, cfg.seed, **kw)]
    if t == "lemma-c":
        return [verify.certify_lemma_c(cfg.samples, cfg.seed, **kw)]
    if t in ("all", "oracle"):
        return verify.run_suite(t, cfg.samples, cfg.seed, cfg.tol, cfg.jobs, cfg.p_max)
    raise UsageError(f"unknown verify target {t!r}; choose from {', '.join(VERIFY_TARGETS)}")


def cmd_verify(cfg: RunConfig) -> tuple[dict, int]:
    reports = _verify_reports(cfg)
    n_pass = sum(r.passed for r in reports)
    summary = f"{n_pass} passed, {len(reports) - n_pass} failed"
    rows = [{"claim_id": r.claim_id, "kind": r.kind, "passed": r.passed, "samples": r.samples,
             "worst_slack": r.worst_slack, "tolerance": r.tolerance} for r in reports]
    payload = {"reports": [r.to_dict() for r in reports], "passed": n_pass,
               "failed": len(reports) - n_pass, "summary": summary, "rows": rows}
    for r in reports:
        if r.counterexample is not None:
            payload.setdefault("counterexamples", []).append(
                {"claim_id": r.claim_id, "sample": r.counterexample["sample"],
                 "subclaim": r.counterexample["subclaim"]})
    return payload, EXIT_OK if n_pass == len(reports) else EXIT_FAIL


def cmd_table(cfg: RunConfig) -> tuple[dict, int]:
    rows = []
    for p in range(1, TABLE_P_MAX + 1):
        for m in range(p + 1):
            cf = closed_form_rpm((p, m))
            rows.append({"block": "rpm", "name": f"r_{p},{m}", "p": p, "m": m,
                         "solved": solve_rpm((p, m)).value,
                         "closed_form": "" if cf is None else cf.value})
    constants = [
        ("classical", 1.0 / 3.0),
        ("harmonic_r0", harmonic_r0().value),
        ("rho_1", odd_harmonic_rho(1.0).value),
        ("rho_2", odd_harmonic_rho(2.0).value),
        ("A_1", threshold_A(1.0)),
        ("A_2", threshold_A(2.0)),
        ("A_1_upper", threshold_A_upper(1.0)),
        ("A_2_upper", threshold_A_upper(2.0)),
    ]
    for name, value in constants:
        rows.append({"block": "constants", "name": name, "solved": value})
    return {"rows": rows}, EXIT_OK


DISPATCH = {"radius": cmd_radius, "extremal": cmd_extremal, "harmonic": cmd_harmonic,
            "verify": cmd_verify, "table": cmd_table}
TARGETS = {"radius": RADIUS_TARGETS, "extremal": EXTREMAL_TARGETS,
           "harmonic": HARMONIC_TARGETS, "verify": VERIFY_TARGETS}


# --------------------------------------------------------------------------
# parsing

def _common(p: argparse.ArgumentParser):
    p.add_argument("--format", choices=FORMATS, default="text")
    p.add_argument("--output", dest="output_path", metavar="PATH")
    p.add_argument("--seed", type=int, default=42)
    p.add_argument("--samples", type=int, default=500)
    p.add_argument("--tol", type=float, default=verify.INEQUALITY_TOL)
    p.add_argument("--jobs", type=int, default=1)


def _exponent(text: str) -> float:
    return math.inf if text.lower() in ("inf", "infinity") else float(text)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="bohrradius", description="Generalised Bohr radii and their certification.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    for name in COMMANDS:
        sp = sub.add_parser(name)
        if name in TARGETS:
            sp.add_argument("target", help="one of: " + ", ".join(TARGETS[name]))
        sp.add_argument("--p", type=int)
        sp.add_argument("--m", type=int)
        sp.add_argument("--exponent-p", type=_exponent)
        sp.add_argument("--a0", type=float)
        sp.add_argument("--r", type=float)
        sp.add_argument("--mu", type=float, default=math.pi / 2.0)
        sp.add_argument("--a", type=float)
        sp.add_argument("--alpha", type=float, default=0.0)
        sp.add_argument("--beta", type=float, default=0.0)
        sp.add_argument("--lam-re", type=float, default=0.0)
        sp.add_argument("--lam-im", type=float, default=0.0)
        sp.add_argument("--order", type=int, default=256)
        sp.add_argument("--r-override", type=float)
        sp.add_argument("--p-max", type=int, default=8)
        sp.add_argument("--delta", type=float, default=0.01)
        sp.add_argument("--experimental", action="store_true")
        _common(sp)
    return parser


def parse_config(argv: Sequence[str] | None) -> RunConfig:
    ns = vars(build_parser().parse_args(argv))
    return RunConfig(**ns)


def main(argv: Sequence[str] | None = None) -> int:
    try:
        cfg = parse_config(argv)
        payload, code = DISPATCH[cfg.command](cfg)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (ConfigurationError, DomainError, PreconditionError, SolverError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    text = render(payload, cfg.format)
    if cfg.output_path:
        with open(cfg.output_path, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
