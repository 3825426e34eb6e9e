"""p-Bohr sums for bounded harmonic mappings ``f = h + conj(g)``.

A harmonic mapping is stored by the Taylor coefficients ``a_k`` of ``h`` and
``b_k`` of ``g``.  The same container also represents a pair of analytic
functions ``(h, g)`` with ``|h| + |g| <= 1`` (``pair_mode=True``); the only
difference is that a pair may have ``g(0) != 0``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Any

import numpy as np

from .exceptions import DomainError, PreconditionError
from .radii import RadiusResult, lp_prefactor
from .series import PowerSeries, powers

INF = math.inf


def _pad(x: np.ndarray, n: int) -> np.ndarray:
    out = np.zeros(n, dtype=complex)
    out[: x.size] = x
    return out


@dataclass(frozen=True, eq=False)
class HarmonicCoeffs:
    """Coefficients of ``h = sum a_k z^k`` and ``g = sum b_k z^k``.

    ``tail_bound`` bounds ``sum_{k>N} (|a_k| + |b_k|) r_max**k``; since the
    l^1 pair norm dominates every l^p pair norm it covers all exponents.
    ``coeff_error`` plays the same role as in :class:`PowerSeries`.
    """

    a: np.ndarray
    b: np.ndarray
    pair_mode: bool = False
    tail_bound: float = 0.0
    r_max: float = 1.0
    coeff_error: float = 0.0

    def __post_init__(self):
        a = np.array(self.a, dtype=complex).ravel()
        b = np.array(self.b, dtype=complex).ravel()
        n = max(a.size, b.size, 1)
        a, b = _pad(a, n), _pad(b, n)
        a.setflags(write=False)
        b.setflags(write=False)
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "pair_mode", bool(self.pair_mode))
        if not self.pair_mode and b[0] != 0:
            raise PreconditionError("a harmonic mapping is normalised with g(0) = 0")
        for name in ("tail_bound", "coeff_error"):
            val = float(getattr(self, name))
            if not (math.isfinite(val) and val >= 0.0):
                raise DomainError(f"{name} must be finite and nonnegative")
            object.__setattr__(self, name, val)
        if not 0.0 < float(self.r_max) <= 1.0:
            raise DomainError("r_max must lie in (0, 1]")
        object.__setattr__(self, "r_max", float(self.r_max))

    @classmethod
    def from_series(cls, h: PowerSeries, g: PowerSeries, pair_mode: bool = False) -> "HarmonicCoeffs":
        r_max = min(h.r_max, g.r_max)
        n = max(len(h), len(g))
        tail = 0.0
        for s in (h, g):
            if s.tail_bound and len(s) < n:
                raise DomainError("series with a nonzero tail must share the truncation order")
            tail += s.tail_bound * (r_max / s.r_max) ** len(s)
        return cls(_pad(h.coeffs, n), _pad(g.coeffs, n), pair_mode, tail, r_max,
                   h.coeff_error + g.coeff_error)

    @property
    def trunc_order(self) -> int:
        return self.a.size - 1

    def h(self, z):
        return np.polyval(self.a[::-1], np.asarray(z, dtype=complex))

    def g(self, z):
        return np.polyval(self.b[::-1], np.asarray(z, dtype=complex))

    def __call__(self, z):
        """Value of ``h + conj(g)``; for a pair, of ``|h| + |g|``."""
        if self.pair_mode:
            return np.abs(self.h(z)) + np.abs(self.g(z))
        return self.h(z) + np.conj(self.g(z))

    def parseval_budget(self) -> float:
        """``|a_0|^2 + |b_0|^2 + sum_{k>=1} (|a_k|^2 + |b_k|^2)``."""
        return float(np.sum(np.abs(self.a) ** 2) + np.sum(np.abs(self.b) ** 2))

    def tail_at(self, r: float) -> float:
        tail = 0.0
        if self.tail_bound:
            tail = self.tail_bound * (r / self.r_max) ** (self.trunc_order + 1)
        return tail + self.coeff_error

    def to_dict(self) -> dict[str, Any]:
        pairs = lambda x: [[float(c.real), float(c.imag)] for c in x]
        out = {"a": pairs(self.a), "b": pairs(self.b), "pair_mode": self.pair_mode,
               "trunc_order": self.trunc_order}
        if self.tail_bound or self.r_max != 1.0:
            out.update(tail_bound=self.tail_bound, r_max=self.r_max)
        if self.coeff_error:
            out["coeff_error"] = self.coeff_error
        return out

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> "HarmonicCoeffs":
        a = [complex(re, im) for re, im in data["a"]]
        b = [complex(re, im) for re, im in data["b"]]
        return cls(a, b, data.get("pair_mode", False), data.get("tail_bound", 0.0),
                   data.get("r_max", 1.0), data.get("coeff_error", 0.0))


def cauchy_schwarz_tail(N: int, r: float, budget: float = 1.0) -> float:
    """Bound on ``sum_{k>N} (|a_k| + |b_k|) r^k`` from the Parseval budget.

    ``sum (|a_k|+|b_k|) r^k <= sqrt(2 sum (|a_k|^2+|b_k|^2)) sqrt(sum r^(2k))``.
    """
    if r >= 1.0:
        raise DomainError("the Cauchy-Schwarz tail needs r < 1")
    return math.sqrt(2.0 * budget) * r ** (N + 1) / math.sqrt(1.0 - r * r)


def _check_p(exponent_p: float) -> float:
    exponent_p = float(exponent_p)
    if not exponent_p >= 1.0:
        raise DomainError(f"exponent p must be >= 1, got {exponent_p}")
    return exponent_p


def _check_r(hc: HarmonicCoeffs, r: float) -> float:
    r = float(r)
    exact = hc.tail_bound == 0.0 and hc.coeff_error == 0.0
    if not 0.0 <= r <= hc.r_max or (r >= 1.0 and not exact):
        raise DomainError(f"radius {r} outside [0, r_max={hc.r_max}]")
    return r


def combined_terms(hc: HarmonicCoeffs, exponent_p: float) -> np.ndarray:
    """``(|a_k|^p + |b_k|^p)^(1/p)`` for every k; ``p = inf`` gives the max."""
    exponent_p = _check_p(exponent_p)
    mags = np.vstack([np.abs(hc.a), np.abs(hc.b)])
    return np.linalg.norm(mags, ord=exponent_p, axis=0)


def p_bohr_sum(hc: HarmonicCoeffs, exponent_p: float, r: float, start: int = 0) -> float:
    """``sum_{k>=start} (|a_k|^p + |b_k|^p)^(1/p) r^k`` plus tail slack.

    Use ``start=1`` for the sum without the constant term.  ``exponent_p``
    may be ``math.inf``.
    """
    terms = combined_terms(hc, exponent_p)
    r = _check_r(hc, r)
    w = powers(r, terms.size)
    return float(np.dot(terms[start:], w[start:])) + hc.tail_at(r)


def l2_combined_sum(hc: HarmonicCoeffs, r: float) -> float:
    """``sqrt(|a_0|^2+|b_0|^2) + sum_{k>=1} sqrt(|a_k|^2+|b_k|^2) r^k``."""
    return p_bohr_sum(hc, 2.0, r)


def l2_squared_constant_sum(hc: HarmonicCoeffs, r: float) -> float:
    """Variant with ``|a_0|^2 + |b_0|^2`` as constant term (experimental check)."""
    terms = combined_terms(hc, 2.0)
    return float(terms[0] ** 2) + p_bohr_sum(hc, 2.0, r, start=1)


def pair_l1_sum(hc: HarmonicCoeffs, r: float) -> float:
    """``|a_0| + sum_{k>=1} (|a_k| + |b_k|) r^k``; requires ``g(0) = 0``.

    Raises
    ------
    PreconditionError
        If ``b_0 != 0``.  Without that hypothesis no positive radius exists.
    """
    if hc.b[0] != 0:
        raise PreconditionError("pair sum requires g(0) = 0")
    return p_bohr_sum(hc, 1.0, r)


def kernel_K_coeffs(lam: complex, N: int, r_max: float = 0.999) -> PowerSeries:
    """Coefficients of ``lam + (2/pi) log((1 + xi z)/(1 - z))``, ``xi = exp(-i pi Im lam)``.

    This maps the disk onto a strip-like convex domain containing the values of
    ``exp(i theta) h - exp(-i theta) g``.
    """
    lam = complex(lam)
    if abs(lam) >= 1.0:
        raise DomainError("kernel centre must lie in the unit disk")
    xi = np.exp(-1j * math.pi * lam.imag)
    k = np.arange(1, N + 1)
    coeffs = np.empty(N + 1, dtype=complex)
    coeffs[0] = lam
    coeffs[1:] = (2.0 / math.pi) * (1.0 - (-xi) ** k) / k
    tail = 4.0 / (math.pi * (N + 1)) * r_max ** (N + 1) / (1.0 - r_max)
    return PowerSeries(coeffs, tail_bound=tail, r_max=r_max)


def th3_bound(exponent_p: float, a0_abs: float, r: float) -> float:
    """``max(2^(1/p-1/2), 1) sqrt(1-|a_0|^2) r / sqrt(1-r^2)``."""
    a0_abs = float(a0_abs)
    if not 0.0 <= a0_abs <= 1.0:
        raise DomainError("|a_0| must lie in [0, 1]")
    return lp_prefactor(exponent_p) * math.sqrt(1.0 - a0_abs * a0_abs) * r / math.sqrt(1.0 - r * r)


def th4_bound(exponent_p: float, r: float) -> float:
    """Odd-mapping bound ``max(2^(1/p-1/2), 1) r / sqrt(1 - r^4)``."""
    return lp_prefactor(exponent_p) * r / math.sqrt(1.0 - r ** 4)


def subordination_l1_bound(r: float) -> float:
    """``sqrt(2) r / sqrt(1 - r^2)``, bounding ``sum |a_k - e^{-2i theta} b_k| r^k`` when ``h(0) = 0``."""
    return math.sqrt(2.0) * r / math.sqrt(1.0 - r * r)


def subordination_l2_bound(r: float) -> float:
    """``(16/pi^2) sum_k r^(2(2k-1)) / (2k-1)^2``: coefficient energy of the strip map."""
    x = float(r) ** 2
    if x == 0.0:
        return 0.0
    n = int(min(max(math.log(1e-18) / math.log(x), 1.0) // 2 + 2, 10 ** 6))
    odd = 2.0 * np.arange(1, n + 1) - 1.0
    return 16.0 / math.pi ** 2 * float(np.sum(x ** odd / odd ** 2))


def p_bohr_radius_search(hc: HarmonicCoeffs, exponent_p: float,
                         width: float = 1e-13) -> RadiusResult:
    """Largest ``r <= r_max`` with ``p_bohr_sum(hc, p, r) <= 1``, by bisection.

    The sum is nondecreasing in ``r``, so the set where it stays below one is
    an interval.  If the constant term alone exceeds one the radius is 0.
    """
    exponent_p = _check_p(exponent_p)
    fun = lambda r: p_bohr_sum(hc, exponent_p, r) - 1.0
    if fun(0.0) > 0.0:
        return RadiusResult.exact(0.0, "root_solve", fun(0.0))
    top = hc.r_max
    try:
        ftop = fun(top)
    except DomainError:
        top = math.nextafter(top, 0.0)
        ftop = fun(top)
    if ftop <= 0.0:
        return RadiusResult.exact(top, "root_solve", abs(ftop))
    lo, hi = 0.0, top
    while hi - lo > width:
        mid = 0.5 * (lo + hi)
        if fun(mid) <= 0.0:
            lo = mid
        else:
            hi = mid
    return RadiusResult(lo, lo, hi, abs(fun(lo)), "root_solve")
