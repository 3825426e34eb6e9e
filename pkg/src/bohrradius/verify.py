"""Randomised certification of the Bohr-type inequalities.

Unit-bounded test functions are finite Blaschke products, which are bounded
by one on the disk by construction.  Symmetric, harmonic, odd and paired
samples are all assembled from them.  Every sample is drawn from its own
Philox stream keyed by ``(seed, index)``; results are therefore identical
whatever the number of worker threads.

Each check reports a *slack*, ``lhs - rhs``.  Since every checked claim is a
theorem, a slack above tolerance means a defect in this code or in its
tolerances, not a mathematical discovery.
"""
from __future__ import annotations

import math
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Any, Callable

import numpy as np

from . import extremal
from .exceptions import ConfigurationError
from .harmonic import (HarmonicCoeffs, cauchy_schwarz_tail, l2_combined_sum,
                       l2_squared_constant_sum, p_bohr_radius_search, p_bohr_sum,
                       pair_l1_sum, subordination_l1_bound, subordination_l2_bound,
                       th3_bound, th4_bound)
from .radii import (SymmetryClass, _as_class, closed_form_rpm, bohr_equation,
                    harmonic_r0, harmonic_rp_a0, odd_harmonic_rho,
                    pair_counterexample_radius, solve_rpm, threshold_A)
from .series import (DEFAULT_ORDER, PowerSeries, extract_coeffs, majorant_sum,
                     mobius_symmetric_expand, weighted_coeff_l2, weighted_coeff_l2_bound)

INEQUALITY_TOL = 1e-9
IDENTITY_TOL = 1e-8
ZERO_RADIUS = 0.95
MAX_DEGREE = 8
HARMONIC_DEGREE = 6
SAMPLE_R_MAX = 0.999
THETA_SWEEP = 64
_MASK64 = (1 << 64) - 1

DEFECT_NOTE = ("every checked claim is a theorem: positive slack signals a defect "
               "in the implementation or its tolerances")


def make_rng(seed: int, index: int = 0) -> np.random.Generator:
    """Counter-based generator for sample ``index`` of run ``seed``."""
    return np.random.Generator(np.random.Philox(key=[seed & _MASK64, index & _MASK64]))


# --------------------------------------------------------------------------
# test functions

class Blaschke:
    """``exp(i phase) prod_j (z - z_j)/(1 - conj(z_j) z)``."""

    def __init__(self, zeros=(), phase: float = 0.0):
        self.zeros = np.asarray(zeros, dtype=complex).ravel()
        if np.any(np.abs(self.zeros) >= 1.0):
            raise ConfigurationError("Blaschke zeros must lie in the open unit disk")
        self.phase = float(phase)

    @property
    def degree(self) -> int:
        return self.zeros.size

    def __call__(self, z):
        z = np.asarray(z, dtype=complex)
        out = np.full(z.shape, np.exp(1j * self.phase), dtype=complex)
        for w in self.zeros:
            out = out * (z - w) / (1.0 - np.conj(w) * z)
        return out

    def coeffs(self, N: int) -> np.ndarray:
        """Exact Taylor coefficients through ``z**N`` by convolving the factors."""
        out = np.zeros(N + 1, dtype=complex)
        out[0] = np.exp(1j * self.phase)
        k = np.arange(N + 1)
        for w in self.zeros:
            factor = np.empty(N + 1, dtype=complex)
            factor[0] = -w
            factor[1:] = (1.0 - abs(w) ** 2) * np.conj(w) ** (k[1:] - 1)
            out = np.convolve(out, factor)[: N + 1]
        return out

    def series(self, N: int = DEFAULT_ORDER, r_max: float = SAMPLE_R_MAX) -> PowerSeries:
        # every coefficient of a unit-bounded function has modulus <= 1
        if r_max >= 1.0:
            return PowerSeries(self.coeffs(N))
        return PowerSeries(self.coeffs(N), tail_bound=r_max ** (N + 1) / (1.0 - r_max), r_max=r_max)

    def to_dict(self) -> dict[str, Any]:
        return {"zeros": [[float(w.real), float(w.imag)] for w in self.zeros], "phase": self.phase}


def random_blaschke(degree: int, seed: int | np.random.Generator, index: int = 0,
                    zero_radius: float = ZERO_RADIUS) -> Blaschke:
    """Blaschke product with zeros uniform (by area) in ``|z| < zero_radius``."""
    if not 0 <= degree <= MAX_DEGREE:
        raise ConfigurationError(f"degree must lie in [0, {MAX_DEGREE}]")
    rng = seed if isinstance(seed, np.random.Generator) else make_rng(seed, index)
    rad = zero_radius * np.sqrt(rng.random(degree))
    ang = 2.0 * np.pi * rng.random(degree)
    phase = 2.0 * np.pi * rng.random()
    return Blaschke(rad * np.exp(1j * ang), phase)


class Symmetrized:
    """``z**m g(z**p)`` for an analytic handle ``g``."""

    def __init__(self, g, p: int, m: int):
        SymmetryClass(p, m)
        self.g, self.p, self.m = g, p, m

    def __call__(self, z):
        z = np.asarray(z, dtype=complex)
        return z ** self.m * self.g(z ** self.p)

    def base_coeffs(self, N: int) -> np.ndarray:
        if hasattr(self.g, "coeffs") and callable(self.g.coeffs):
            return self.g.coeffs(N)
        return extract_coeffs(self.g, N).coeffs

    def series(self, N: int = DEFAULT_ORDER, r_max: float = SAMPLE_R_MAX) -> PowerSeries:
        """Coefficients of ``g`` through ``z**N`` placed at indices ``p k + m``."""
        b = self.base_coeffs(N)
        out = np.zeros(self.p * N + self.m + 1, dtype=complex)
        out[self.m::self.p] = b
        if r_max < 1.0:
            tail = r_max ** (self.p * (N + 1) + self.m) / (1.0 - r_max ** self.p)
        else:
            tail = 0.0
        return PowerSeries(out, tail_bound=tail, r_max=min(r_max, 1.0))


def symmetrize(g, p: int, m: int) -> Symmetrized:
    return Symmetrized(g, p, m)


def _shift(c: np.ndarray) -> np.ndarray:
    return np.concatenate([[0.0], c[:-1]])


def random_bounded_harmonic(seed: int, index: int = 0, N: int = DEFAULT_ORDER,
                            zero_constant: bool = False, t: float | None = None,
                            r_max: float = SAMPLE_R_MAX) -> HarmonicCoeffs:
    """Harmonic ``f = t B1 + conj((1 - t) z B2)`` with ``|f| <= |h| + |g| <= 1``.

    With ``zero_constant`` the analytic part is ``t z B1`` so that ``f(0) = 0``.
    """
    rng = make_rng(seed, index)
    t = rng.random() if t is None else float(t)
    b1 = random_blaschke(int(rng.integers(0, HARMONIC_DEGREE + 1)), rng)
    b2 = random_blaschke(int(rng.integers(0, HARMONIC_DEGREE + 1)), rng)
    a = t * b1.coeffs(N)
    if zero_constant:
        a = _shift(a)
    b = (1.0 - t) * _shift(b2.coeffs(N))
    return HarmonicCoeffs(a, b, tail_bound=cauchy_schwarz_tail(N, r_max), r_max=r_max)


def random_pair(seed: int, force_g0_zero: bool, index: int = 0, N: int = DEFAULT_ORDER,
                t: float | None = None, r_max: float = SAMPLE_R_MAX) -> HarmonicCoeffs:
    """Analytic pair ``h = t B1``, ``g = (1 - t) B2`` (times ``z`` if forced)."""
    rng = make_rng(seed, index)
    t = rng.random() if t is None else float(t)
    b1 = random_blaschke(int(rng.integers(0, HARMONIC_DEGREE + 1)), rng)
    b2 = random_blaschke(int(rng.integers(0, HARMONIC_DEGREE + 1)), rng)
    b = (1.0 - t) * b2.coeffs(N)
    if force_g0_zero:
        b = _shift(b)
    return HarmonicCoeffs(t * b1.coeffs(N), b, pair_mode=True,
                          tail_bound=r_max ** (N + 1) / (1.0 - r_max), r_max=r_max)


def odd_symmetrize(hc: HarmonicCoeffs) -> HarmonicCoeffs:
    """``z h(z^2) + conj(z g(z^2))``, odd and bounded by ``|h| + |g|``.

    The unit bound is preserved only when ``|h| + |g| <= 1``, which holds for
    every sample produced by :func:`random_bounded_harmonic`.
    """
    n = 2 * hc.a.size
    a = np.zeros(n, dtype=complex)
    b = np.zeros(n, dtype=complex)
    a[1::2] = hc.a
    b[1::2] = hc.b
    r_max = math.sqrt(hc.r_max)
    return HarmonicCoeffs(a, b, tail_bound=r_max * hc.tail_bound, r_max=r_max,
                          coeff_error=hc.coeff_error)


# --------------------------------------------------------------------------
# reports

@dataclass
class VerificationReport:
    """Outcome of one certified claim.

    ``kind="inequality"`` passes when ``worst_slack <= tolerance``;
    ``kind="sharpness"`` passes when the witness overshoots, ``worst_slack > 0``.
    """

    claim_id: str
    samples: int
    worst_slack: float
    tolerance: float = INEQUALITY_TOL
    seed: int | None = None
    elapsed: float = 0.0
    counterexample: dict[str, Any] | None = None
    details: dict[str, Any] = field(default_factory=dict)
    kind: str = "inequality"

    @property
    def passed(self) -> bool:
        if self.kind == "sharpness":
            return self.worst_slack > 0.0
        return self.worst_slack <= self.tolerance

    def to_dict(self, with_timing: bool = True) -> dict[str, Any]:
        out = {"claim_id": self.claim_id, "kind": self.kind, "passed": self.passed,
               "samples": self.samples, "worst_slack": self.worst_slack,
               "tolerance": self.tolerance, "seed": self.seed,
               "counterexample": self.counterexample, "details": self.details}
        if with_timing:
            out["elapsed"] = self.elapsed
        if not self.passed and self.kind == "inequality":
            out["note"] = DEFECT_NOTE
        return out

    def summary(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return (f"{status} {self.claim_id}: samples={self.samples} "
                f"worst_slack={self.worst_slack:.3e} tol={self.tolerance:.1e}")


def _run(claim_id: str, n: int, seed: int | None, check: Callable[[int], tuple[dict, Any]],
         tol: float, n_jobs: int = 1, members: Callable[[], list] | None = None,
         details: dict | None = None) -> VerificationReport:
    """Evaluate ``check`` on every index and reduce in index order.

    ``check(i)`` returns ``({subclaim: slack}, sample)``; ``members`` yields
    extra ``(label, {subclaim: slack}, sample)`` triples for fixed functions.
    """
    start = time.perf_counter()
    if n_jobs > 1:
        with ThreadPoolExecutor(n_jobs) as pool:
            results = list(pool.map(check, range(n)))
    else:
        results = [check(i) for i in range(n)]
    labelled = [(i, sl, smp) for i, (sl, smp) in enumerate(results)]
    if members is not None:
        labelled += list(members())

    per_claim: dict[str, float] = {}
    worst, worst_at = -math.inf, None
    for label, slacks, sample in labelled:
        for name, value in slacks.items():
            if value > per_claim.get(name, -math.inf):
                per_claim[name] = value
            if value > worst:
                worst, worst_at = value, (label, name, sample)
    if worst == -math.inf:
        worst = 0.0
    counterexample = None
    if worst > tol and worst_at is not None:
        label, name, sample = worst_at
        counterexample = {"sample": label, "subclaim": name,
                          "input": sample.to_dict() if hasattr(sample, "to_dict") else sample}
    info = {"worst_by_subclaim": per_claim}
    if details:
        info.update(details)
    return VerificationReport(claim_id, len(labelled), float(worst), tol, seed,
                              time.perf_counter() - start, counterexample, info)


# --------------------------------------------------------------------------
# analytic claims

def _series_of(handle, N: int) -> PowerSeries:
    if isinstance(handle, PowerSeries):
        return handle
    if hasattr(handle, "series"):
        return handle.series(N, r_max=1.0)
    return extract_coeffs(handle, N)


def wiener_check(s: PowerSeries, tol: float = INEQUALITY_TOL) -> VerificationReport:
    """``|a_n| <= 1 - |a_0|^2`` for every retained ``n >= 1``."""
    start = time.perf_counter()
    slack = float(np.max(np.abs(s.coeffs[1:]), initial=0.0) - (1.0 - abs(s.coeffs[0]) ** 2))
    cx = s.to_dict() if slack > tol else None
    return VerificationReport("wiener", 1, slack, tol, None, time.perf_counter() - start, cx)


def certify_wiener(n_samples: int = 500, seed: int = 42, N: int = DEFAULT_ORDER,
                   tol: float = INEQUALITY_TOL, n_jobs: int = 1) -> VerificationReport:
    def check(i):
        rng = make_rng(seed, i)
        g = random_blaschke(int(rng.integers(0, MAX_DEGREE + 1)), rng)
        c = g.coeffs(N)
        return {"wiener": float(np.max(np.abs(c[1:])) - (1.0 - abs(c[0]) ** 2))}, g
    return _run("wiener", n_samples, seed, check, tol, n_jobs)


LEMMA_C_R_GRID = (0.2, 0.4, 0.6, 0.8, 1.0)
LEMMA_C_P_GRID = (1, 2, 3, 4)
LEMMA_C_ORDER = 1024


def _lemma_c_slack(b: np.ndarray, R: float, p: int, truncated: bool = True) -> float:
    lhs = weighted_coeff_l2(PowerSeries(b), R, p)
    if truncated:
        lhs += lemma_c_tail(b, R, p)
    return float(lhs - weighted_coeff_l2_bound(b[0], R, p))


def lemma_c_tail(b: np.ndarray, R: float, p: int) -> float:
    """Bound on ``sum_{k>N} |b_k|^2 R^(pk)`` for a unit-bounded function.

    Parseval gives ``sum_k |b_k|^2 <= 1``, so the dropped energy is at most
    ``1 - sum_{k<=N} |b_k|^2``, each term weighted by at most ``R^(p(N+1))``.
    """
    rest = max(0.0, 1.0 - float(np.sum(np.abs(b) ** 2)))
    return rest * R ** (p * b.size)


def lemma_c_check(g, R: float, p: int, N: int = LEMMA_C_ORDER,
                  tol: float = INEQUALITY_TOL) -> VerificationReport:
    """Weighted coefficient energy of ``g`` against its sharp bound.

    ``g`` is a function handle, expanded through ``z**N``, or a
    :class:`PowerSeries`, taken as exact unless it declares a tail.
    """
    start = time.perf_counter()
    if isinstance(g, PowerSeries):
        b, truncated = g.coeffs, g.tail_bound > 0.0 or g.coeff_error > 0.0
    else:
        b, truncated = _series_of(g, N).coeffs, True
    slack = _lemma_c_slack(b, R, p, truncated)
    cx = {"R": R, "p": p} if slack > tol else None
    return VerificationReport(f"lemma_c[R={R},p={p}]", 1, slack, tol, None,
                              time.perf_counter() - start, cx)


def certify_lemma_c(n_samples: int = 500, seed: int = 42, R_grid=LEMMA_C_R_GRID,
                    p_grid=LEMMA_C_P_GRID, N: int = LEMMA_C_ORDER,
                    tol: float = INEQUALITY_TOL, n_jobs: int = 1) -> VerificationReport:
    grid = [(R, p) for R in R_grid for p in p_grid]

    def check(i):
        rng = make_rng(seed, i)
        g = random_blaschke(int(rng.integers(0, MAX_DEGREE + 1)), rng)
        b = g.coeffs(N)
        return {f"R={R},p={p}": _lemma_c_slack(b, R, p) for R, p in grid}, g

    def members():
        b = mobius_symmetric_expand(0.5, 1, 0, N).coeffs
        yield "mobius(0.5)", {f"R={R},p={p}": _lemma_c_slack(b, R, p) for R, p in grid}, None

    rep = _run("lemma_c", n_samples, seed, check, tol, n_jobs, members)
    b = mobius_symmetric_expand(0.5, 1, 0, N).coeffs
    rep.details["mobius_equality_slack"] = _lemma_c_slack(b, 1.0, 1)
    return rep


def _clamp(r: float, top: float = 0.999) -> float:
    return min(r, top)


def certify_analytic_class(c, n_samples: int = 500, seed: int = 42, r: float | None = None,
                           N: int = DEFAULT_ORDER, tol: float = INEQUALITY_TOL,
                           n_jobs: int = 1) -> VerificationReport:
    """Majorant of symmetrised Blaschke samples at the class radius.

    Besides the random samples, the extremal function and the best member of
    the symmetric Mobius family at ``r`` are always checked.  Passing a radius
    above ``r_{p,m}`` turns the run into a negative control.
    """
    c = _as_class(c)
    radius = solve_rpm(c).value
    r = radius if r is None else float(r)
    if not 0.0 < r < 1.0:
        raise ConfigurationError("certification radius must lie in (0, 1)")

    def check(i):
        rng = make_rng(seed, i)
        g = random_blaschke(int(rng.integers(0, MAX_DEGREE + 1)), rng)
        s = symmetrize(g, c.p, c.m).series(N, r_max=r)
        maj = majorant_sum(s, r)
        slacks = {"majorant": maj - 1.0,
                  "case_bound": float(maj - extremal.majorant_case_bound(c, abs(s.coeffs[c.m]), r)
                                      - s.tail_at(r))}
        return slacks, g

    def members():
        ext = extremal.analytic_extremal(c, N)
        best = extremal.best_mobius_member(c, r, N)
        yield "extremal", {"majorant": majorant_sum(ext, r) - 1.0}, ext
        yield "best_mobius", {"majorant": majorant_sum(best, r) - 1.0}, best

    ext = extremal.analytic_extremal(c, N)
    details = {"p": c.p, "m": c.m, "radius": r, "r_pm": radius,
               "extremal_slack": majorant_sum(ext, r) - 1.0}
    return _run(f"analytic[p={c.p},m={c.m}]", n_samples, seed, check, tol, n_jobs, members, details)


def sharpness_probe(c, delta: float, N: int = DEFAULT_ORDER) -> VerificationReport:
    """Excess over 1 of the extremal majorant at ``r_{p,m} + delta``.

    When the extremal degenerates (``m = 0``, parameter 1) the witness is the
    best symmetric Mobius map at the probe radius.
    """
    c = _as_class(c)
    start = time.perf_counter()
    r = solve_rpm(c).value + delta
    if not (delta > 0 and r < 1.0):
        raise ConfigurationError("probe radius must lie in (r_pm, 1)")
    ext = extremal.analytic_extremal(c, N)
    if c.m == 0:
        ext = extremal.best_mobius_member(c, r, N)
        witness = "best_mobius"
    else:
        witness = "extremal"
    excess = majorant_sum(ext, r) - 1.0
    return VerificationReport(f"sharpness[p={c.p},m={c.m},delta={delta}]", 1, excess, 0.0, None,
                              time.perf_counter() - start, None,
                              {"radius": r, "witness": witness}, kind="sharpness")


def lemma_grid_check(p_max: int = 8, tol: float = IDENTITY_TOL) -> VerificationReport:
    """Radius lemmas over every ``1 <= p <= p_max``, ``0 <= m <= p``.

    ``2 r^(p+m) <= 1`` is reported as ``2 r^(p+m) - 1``; the identity
    ``(3 - 2 sqrt(2) sqrt(1 - r^(2p))) / r^(p-m) = 1`` as its absolute deviation.
    """
    if not 1 <= p_max <= 16:
        raise ConfigurationError("p_max must lie in [1, 16]")
    start = time.perf_counter()
    worst_power = worst_ident = worst_closed = -math.inf
    maximal = monotone = True
    grid = np.linspace(0.0, 1.0, 4097)[1:]
    for p in range(1, p_max + 1):
        prev = 0.0
        for m in range(p + 1):
            res = solve_rpm((p, m))
            r = res.value
            worst_power = max(worst_power, 2.0 * r ** (p + m) - 1.0)
            ident = (3.0 - 2.0 * math.sqrt(2.0) * math.sqrt(1.0 - r ** (2 * p))) / r ** (p - m)
            worst_ident = max(worst_ident, abs(ident - 1.0))
            cf = closed_form_rpm((p, m))
            if cf is not None:
                worst_closed = max(worst_closed, abs(cf.value - r))
            above = grid[grid > r + 1e-6]
            if bohr_equation(r + 1e-6, p, m) <= 0 or np.any(bohr_equation(above, p, m) <= 0):
                maximal = False
            monotone &= r >= prev
            prev = r
    worst = max(worst_power, worst_ident)
    details = {"power_bound": worst_power, "radius_identity": worst_ident, "closed_form_gap": worst_closed,
               "maximal_root": maximal, "nondecreasing_in_m": monotone}
    n = sum(p + 1 for p in range(1, p_max + 1))
    return VerificationReport(f"lemmas[p_max={p_max}]", n, worst, tol, None,
                              time.perf_counter() - start, None, details)


# --------------------------------------------------------------------------
# harmonic claims

HARMONIC_RADII = tuple(0.09 * k for k in range(1, 11))


def _theta_sweep(hc: HarmonicCoeffs, r: float, n_theta: int = THETA_SWEEP) -> float:
    theta = 2.0 * np.pi * np.arange(n_theta) / n_theta
    w = np.power(r, np.arange(hc.a.size))
    diffs = np.abs(hc.a[None, :] - np.exp(-2j * theta)[:, None] * hc.b[None, :])
    return float(np.max(diffs @ w)) + hc.tail_at(r)


def _disk_sum_max(hc: HarmonicCoeffs, r: float, n_points: int = 64) -> float:
    z = r * np.exp(2j * np.pi * np.arange(n_points) / n_points)
    return float(np.max(np.abs(hc.h(z)) + np.abs(hc.g(z)))) + hc.tail_at(r)


def _harmonic_slacks(hc: HarmonicCoeffs, hz: HarmonicCoeffs, exponent_p: float) -> dict:
    a0 = abs(hc.a[0])
    out = {"parseval": hc.parseval_budget() - 1.0}
    out["coefficient_bound"] = max(p_bohr_sum(hc, exponent_p, r, start=1) - th3_bound(exponent_p, a0, r)
                             for r in HARMONIC_RADII)
    out["a0_radius"] = p_bohr_sum(hc, exponent_p, harmonic_rp_a0(exponent_p, a0).value) - 1.0
    if exponent_p <= 2.0 and a0 <= threshold_A(exponent_p):
        out["threshold_radius"] = p_bohr_sum(hc, exponent_p, 1.0 / 3.0) - 1.0
    if hz is not None:
        out["parseval_zero"] = hz.parseval_budget() - 1.0
        if exponent_p >= 2.0:
            out["zero_constant_radius"] = p_bohr_sum(hz, exponent_p, 1.0 / math.sqrt(2.0)) - 1.0
        out["subordination_l1"] = max(_theta_sweep(hz, r) - subordination_l1_bound(r)
                                      for r in HARMONIC_RADII)
        out["subordination_l2"] = max(
            float(np.dot(np.abs(hz.a) ** 2 + np.abs(hz.b) ** 2, np.power(r * r, np.arange(hz.a.size))))
            + hz.tail_at(r) ** 2 - subordination_l2_bound(r) for r in HARMONIC_RADII)
        out["zero_constant_disk"] = _disk_sum_max(hz, harmonic_r0().value) - 1.0
    return out


def _odd_slacks(ho: HarmonicCoeffs, exponent_p: float) -> dict:
    rho = odd_harmonic_rho(exponent_p).value
    out = {"parseval": ho.parseval_budget() - 1.0}
    out["odd_bound"] = max(p_bohr_sum(ho, exponent_p, r) - th4_bound(exponent_p, r)
                              for r in (rho / 2.0, rho))
    out["odd_radius"] = p_bohr_sum(ho, exponent_p, rho) - 1.0
    return out


ABU_MUS = (math.pi / 2.0, math.pi / 3.0, math.pi / 6.0)


def certify_harmonic(exponent_p: float, n_samples: int = 500, seed: int = 42,
                     odd_only: bool = False, N: int = DEFAULT_ORDER,
                     tol: float = INEQUALITY_TOL, n_jobs: int = 1) -> VerificationReport:
    """Harmonic p-Bohr bounds on random bounded harmonic mappings.

    General samples are checked against the coefficient bound at ten radii,
    the radius formula in ``|a_0|``, the radius 1/3 below the ``|a_0|``
    threshold and, on samples with ``f(0) = 0``, the radius ``1/sqrt(2)``
    (``p >= 2``), the strip-map subordination bounds and ``|h| + |g| <= 1``
    at ``tanh(pi/4)``.  With ``odd_only`` the samples are odd and the odd
    bound is checked at ``rho_p / 2`` and ``rho_p``.
    """
    label = "inf" if math.isinf(exponent_p) else f"{exponent_p:g}"

    if odd_only:
        def check(i):
            ho = odd_symmetrize(random_bounded_harmonic(seed, i, N))
            return _odd_slacks(ho, exponent_p), ho

        def members():
            for mu in ABU_MUS:
                # dropping the constant i cos(mu) leaves an odd map bounded by sin(mu)
                hc = extremal.abu_example(mu, N)
                hc = HarmonicCoeffs(np.concatenate([[0.0], hc.a[1:]]), hc.b,
                                    tail_bound=hc.tail_bound, r_max=hc.r_max)
                yield f"abu(mu={mu:.4f})", _odd_slacks(hc, exponent_p), hc
            f0 = extremal.harmonic_sharp_f0(0.3, 1.1, N)
            yield "f0", _odd_slacks(f0, exponent_p), f0

        return _run(f"odd_harmonic[p={label}]", n_samples, seed, check, tol, n_jobs, members)

    def check(i):
        hc = random_bounded_harmonic(seed, i, N)
        hz = random_bounded_harmonic(seed, i, N, zero_constant=True)
        return _harmonic_slacks(hc, hz, exponent_p), hc

    def members():
        for mu in ABU_MUS:
            hc = extremal.abu_example(mu, N)
            yield f"abu(mu={mu:.4f})", _harmonic_slacks(hc, None, exponent_p), hc

    return _run(f"harmonic[p={label}]", n_samples, seed, check, tol, n_jobs, members)


def odd_radius_witness(N: int = DEFAULT_ORDER) -> VerificationReport:
    """p = 1 sum of the strip map at ``tanh(pi/4)``; equals one, so no odd radius exceeds it."""
    start = time.perf_counter()
    hc = extremal.abu_example(math.pi / 2.0, N)
    dev = abs(p_bohr_sum(hc, 1.0, harmonic_r0().value) - 1.0)
    return VerificationReport("odd_radius_witness", 1, dev, IDENTITY_TOL, None,
                              time.perf_counter() - start, None,
                              {"rho_1": odd_harmonic_rho(1.0).value, "r0": harmonic_r0().value})


def certify_pairs(n_samples: int = 500, seed: int = 42, N: int = DEFAULT_ORDER,
                  tol: float = INEQUALITY_TOL, n_jobs: int = 1,
                  experimental: bool = False) -> VerificationReport:
    """Pair sums at ``r = 1/3`` for ``|h| + |g| <= 1``.

    The l^1 sum needs ``g(0) = 0``; the l^2 sum does not.  ``experimental``
    adds the variant with a squared constant term at ``r = 1/2``.
    """
    def check(i):
        forced = random_pair(seed, True, i, N)
        free = random_pair(seed, False, i, N)
        out = {"pair_l1": pair_l1_sum(forced, 1.0 / 3.0) - 1.0,
               "pair_l2": l2_combined_sum(free, 1.0 / 3.0) - 1.0}
        if experimental:
            out["squared_constant_half"] = l2_squared_constant_sum(free, 0.5) - 1.0
        return out, free

    def members():
        for a in (0.5, 1.0, 5.0):
            hc = extremal.pair_counterexample_coeffs(a)
            yield f"pair({a})", {"pair_l2": l2_combined_sum(hc, 1.0 / 3.0) - 1.0}, hc

    return _run("pairs", n_samples, seed, check, tol, n_jobs, members)


def pair_counterexample_probe(a: float, eps: float = 1e-6) -> VerificationReport:
    """Unnormalised pair sum just above ``sqrt(1+a^2) - a`` exceeds one."""
    start = time.perf_counter()
    r = pair_counterexample_radius(a) + eps
    hc = extremal.pair_counterexample_coeffs(a)
    excess = p_bohr_sum(hc, 1.0, r) - 1.0
    bound = _disk_sum_max(hc, 1.0 - 1e-9, 1024)
    return VerificationReport(f"pair_counterexample[a={a:g}]", 1, excess, 0.0, None,
                              time.perf_counter() - start, None,
                              {"radius": r, "max_h_plus_g": bound}, kind="sharpness")


# --------------------------------------------------------------------------
# oracle fidelity and exploration

def dft_fidelity_check(N: int = 16, rho: float = 0.7, n_blaschke: int = 20,
                       seed: int = 42, tol: float = 1e-10) -> VerificationReport:
    """DFT-extracted coefficients against exact expansions through index ``N``."""
    start = time.perf_counter()
    mob = lambda z: (z + 0.5) / (1.0 + 0.5 * z)
    got = extract_coeffs(mob, N, rho).coeffs
    k = np.arange(1, N + 1)
    want = np.concatenate([[0.5], 0.75 * (-0.5) ** (k - 1)])
    worst = float(np.max(np.abs(got - want)))
    mob_err = worst
    for i in range(n_blaschke):
        rng = make_rng(seed, i)
        g = random_blaschke(int(rng.integers(0, MAX_DEGREE + 1)), rng)
        worst = max(worst, float(np.max(np.abs(extract_coeffs(g, N, rho).coeffs - g.coeffs(N)))))
    return VerificationReport("dft_fidelity", 1 + n_blaschke, worst, tol, seed,
                              time.perf_counter() - start, None, {"mobius_error": mob_err})


def oracle_soundness(n_samples: int = 100, seed: int = 42, radius: float = 0.999,
                     n_points: int = 512) -> VerificationReport:
    """Sampled modulus of random Blaschke products near the unit circle."""
    z = radius * np.exp(2j * np.pi * np.arange(n_points) / n_points)

    def check(i):
        rng = make_rng(seed, i)
        g = random_blaschke(int(rng.integers(0, MAX_DEGREE + 1)), rng)
        return {"modulus": float(np.max(np.abs(g(z)))) - 1.0}, g

    return _run("oracle_soundness", n_samples, seed, check, 1e-12)


@dataclass
class OddRadiusExploration:
    """Smallest per-sample odd p-Bohr radius found, against the known bracket."""

    exponent_p: float
    samples: int
    min_radius: float
    argmin: int | str
    rho_p: float
    r0: float

    def to_dict(self) -> dict[str, Any]:
        return dict(self.__dict__)


def explore_odd_radius(n_samples: int = 200, seed: int = 42, exponent_p: float = 1.0,
                       N: int = DEFAULT_ORDER) -> OddRadiusExploration:
    """Empirical upper bound on the odd-harmonic p-Bohr radius.

    The class radius is the infimum of per-function radii; every sample's
    radius therefore bounds it from above.  The strip map is included and
    attains ``tanh(pi/4)`` at ``p = 1``.  No claim is made beyond the numbers.
    """
    best = (p_bohr_radius_search(extremal.harmonic_sharp_f0(0.0, 0.0, N), exponent_p).value, "f0")
    for i in range(n_samples):
        ho = odd_symmetrize(random_bounded_harmonic(seed, i, N))
        r = p_bohr_radius_search(ho, exponent_p).value
        if r < best[0]:
            best = (r, i)
    return OddRadiusExploration(exponent_p, n_samples + 1, best[0], best[1],
                                odd_harmonic_rho(exponent_p).value, harmonic_r0().value)


# --------------------------------------------------------------------------
# batch

ANALYTIC_P_MAX = 4
HARMONIC_EXPONENTS = (1.0, 1.5, 2.0, 3.0, math.inf)
ODD_EXPONENTS = (1.0, 1.5, 2.0, 3.0)


def run_suite(name: str = "all", samples: int = 500, seed: int = 42,
              tol: float = INEQUALITY_TOL, n_jobs: int = 1, p_max: int = 8) -> list[VerificationReport]:
    """Run a named group of certifications: lemmas, analytic, harmonic, odd, pairs, oracle or all."""
    groups = {
        "lemmas": lambda: [lemma_grid_check(p_max),
                           certify_wiener(samples, seed, tol=tol, n_jobs=n_jobs),
                           certify_lemma_c(samples, seed, tol=tol, n_jobs=n_jobs)],
        "analytic": lambda: (
            [certify_analytic_class((p, m), samples, seed, tol=tol, n_jobs=n_jobs)
             for p in range(1, ANALYTIC_P_MAX + 1) for m in range(p + 1)]
            + [sharpness_probe((p, m), 0.01) for p in range(1, ANALYTIC_P_MAX + 1)
               for m in range(p + 1) if solve_rpm((p, m)).value + 0.01 < 1.0]),
        "harmonic": lambda: [certify_harmonic(q, samples, seed, tol=tol, n_jobs=n_jobs)
                             for q in HARMONIC_EXPONENTS],
        "odd": lambda: ([certify_harmonic(q, samples, seed, odd_only=True, tol=tol, n_jobs=n_jobs)
                         for q in ODD_EXPONENTS] + [odd_radius_witness()]),
        "pairs": lambda: ([certify_pairs(samples, seed, tol=tol, n_jobs=n_jobs)]
                          + [pair_counterexample_probe(a) for a in (1.0, 5.0, 10.0)]),
        "oracle": lambda: [dft_fidelity_check(seed=seed), oracle_soundness(seed=seed)],
    }
    if name == "all":
        return [rep for key in groups for rep in groups[key]()]
    if name not in groups:
        raise ConfigurationError(f"unknown suite {name!r}")
    return groups[name]()
