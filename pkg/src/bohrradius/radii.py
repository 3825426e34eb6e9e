"""Bohr radii and thresholds.

The radius for functions ``sum_k a_{pk+m} z**(pk+m)`` bounded by one is the
largest root in ``(0, 1]`` of

    E(r) = -6 r**(p-m) + r**(2(p-m)) + 8 r**(2p) + 1.

Everything else here is a closed-form radius or threshold for bounded
harmonic mappings.  Two different exponents appear and are kept apart by
name: the integer symmetry order ``p`` of :class:`SymmetryClass`, and the
real ``exponent_p >= 1`` of the ``l^p`` combination ``(|a_k|^p+|b_k|^p)^(1/p)``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Any

import numpy as np

from .exceptions import DomainError, SolverError

SCAN_POINTS = 4096
BISECT_WIDTH = 0.0  # bisect until the bracket stops shrinking

METHODS = ("root_solve", "closed_form", "bound_formula")


@dataclass(frozen=True)
class SymmetryClass:
    """The pair ``(p, m)`` of the class ``f(z) = z**m g(z**p)``."""

    p: int
    m: int

    def __post_init__(self):
        if int(self.p) != self.p or int(self.m) != self.m:
            raise DomainError("p and m must be integers")
        if self.p < 1 or not 0 <= self.m <= self.p:
            raise DomainError(f"need p >= 1 and 0 <= m <= p, got ({self.p}, {self.m})")

    def __iter__(self):
        yield self.p
        yield self.m


def _as_class(c) -> SymmetryClass:
    return c if isinstance(c, SymmetryClass) else SymmetryClass(*c)


@dataclass(frozen=True)
class RadiusResult:
    """A radius with the metadata needed to quote its accuracy."""

    value: float
    bracket_lo: float
    bracket_hi: float
    residual: float = 0.0
    method: str = "closed_form"

    def __post_init__(self):
        if self.method not in METHODS:
            raise DomainError(f"unknown method tag {self.method!r}")
        if not self.bracket_lo <= self.value <= self.bracket_hi:
            raise DomainError("value must lie inside its bracket")

    def __float__(self):
        return float(self.value)

    @property
    def width(self) -> float:
        return self.bracket_hi - self.bracket_lo

    def to_dict(self) -> dict[str, Any]:
        return {"value": self.value, "bracket": [self.bracket_lo, self.bracket_hi],
                "residual": self.residual, "method": self.method}

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> "RadiusResult":
        lo, hi = data["bracket"]
        return cls(data["value"], lo, hi, data.get("residual", 0.0), data.get("method", "closed_form"))

    @classmethod
    def exact(cls, value: float, method: str = "closed_form", residual: float = 0.0) -> "RadiusResult":
        return cls(value, value, value, residual, method)


def bohr_equation(r, p: int, m: int):
    """Left side of the radius equation at ``r`` (scalar or array)."""
    r = np.asarray(r, dtype=float)
    q = p - m
    return -6.0 * r ** q + r ** (2 * q) + 8.0 * r ** (2 * p) + 1.0


def _bohr_equation_derivs(r: float, p: int, m: int) -> tuple[float, float]:
    q = p - m
    d1 = -6.0 * q * r ** (q - 1) + 2.0 * q * r ** (2 * q - 1) + 16.0 * p * r ** (2 * p - 1)
    d2 = (-6.0 * q * (q - 1) * r ** (q - 2) + 2.0 * q * (2 * q - 1) * r ** (2 * q - 2)
          + 16.0 * p * (2 * p - 1) * r ** (2 * p - 2))
    return d1, d2


def _bisect(fun, lo: float, hi: float, width: float = BISECT_WIDTH) -> tuple[float, float]:
    flo = fun(lo)
    while hi - lo > width:
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:
            break
        fmid = fun(mid)
        if fmid == 0.0:
            return mid, mid
        if (fmid < 0.0) == (flo < 0.0):
            lo, flo = mid, fmid
        else:
            hi = mid
    return lo, hi


def _polish_touching_root(r0: float, lo: float, hi: float, p: int, m: int):
    """Newton iteration on ``E'`` for a root where ``E`` only touches zero."""
    r, step = r0, hi - lo
    for _ in range(100):
        d1, d2 = _bohr_equation_derivs(r, p, m)
        if d2 <= 0.0:
            break
        new = min(max(r - d1 / d2, lo), hi)
        step = abs(new - r)
        r = new
        if step <= 1e-16:
            break
    half = max(step, 1e-15)
    return r, max(lo, r - half), min(hi, r + half)


def solve_rpm(c) -> RadiusResult:
    """Largest root in ``(0, 1]`` of the Bohr radius equation for ``(p, m)``.

    The equation is scanned on a uniform grid; the rightmost sign change is
    refined by bisection.  When ``m = 0`` the equation is the perfect square
    ``(3 r**p - 1)**2`` and never changes sign, so the rightmost interior
    minimum of the grid is polished by Newton steps on the derivative.

    Raises
    ------
    SolverError
        If neither a sign change nor a touching root is found.
    """
    c = _as_class(c)
    p, m = c.p, c.m
    fun = lambda r: float(bohr_equation(r, p, m))
    grid = np.linspace(0.0, 1.0, SCAN_POINTS + 1)[1:]
    vals = bohr_equation(grid, p, m)

    sign_change = np.nonzero(np.signbit(vals[:-1]) != np.signbit(vals[1:]))[0]
    if sign_change.size:
        i = sign_change[-1]
        lo, hi = _bisect(fun, float(grid[i]), float(grid[i + 1]))
        # pick the endpoint with the smaller residual
        value = lo if abs(fun(lo)) <= abs(fun(hi)) else hi
        return RadiusResult(value, lo, hi, fun(value), "root_solve")

    interior = np.nonzero((vals[1:-1] <= vals[:-2]) & (vals[1:-1] <= vals[2:]))[0] + 1
    for i in interior[::-1]:
        r, lo, hi = _polish_touching_root(float(grid[i]), float(grid[i - 1]), float(grid[i + 1]), p, m)
        if abs(fun(r)) <= 1e-10:
            return RadiusResult(r, lo, hi, fun(r), "root_solve")
    raise SolverError(f"no root of the radius equation found for (p, m) = ({p}, {m})")


def closed_form_rpm(c) -> RadiusResult | None:
    """Closed-form radius for the families ``m = 0``, ``p = m``, ``p = 2m``, ``p = 3m``.

    Returns ``None`` when ``(p, m)`` belongs to none of them.  The ``p = 2m``
    family is expressed through the odd-function radius ``r_{2,1}``, which
    itself has no simpler closed form and is taken from :func:`solve_rpm`.
    """
    c = _as_class(c)
    p, m = c.p, c.m
    if m == 0:
        value = 3.0 ** (-1.0 / p)
    elif p == m:
        value = 2.0 ** (-1.0 / (2 * m))
    elif p == 2 * m:
        value = float(solve_rpm(SymmetryClass(2, 1)).value) ** (1.0 / m)
    elif p == 3 * m:
        value = ((7.0 + math.sqrt(17.0)) / 16.0) ** (1.0 / (2 * m))
    else:
        return None
    return RadiusResult.exact(value, "closed_form", float(bohr_equation(value, p, m)))


def extremal_parameter_a(c) -> float:
    """Mobius parameter ``a`` of the extremal ``z**m (z**p - a)/(1 - a z**p)``.

    ``a = (1 - sqrt(1 - r**(2p)) / sqrt(2)) / r**p`` at ``r = r_{p,m}``.
    For ``m = 0`` this is exactly 1: the extremal degenerates to a constant.
    """
    c = _as_class(c)
    if c.m == 0:
        return 1.0
    alpha = solve_rpm(c).value ** c.p
    a = (1.0 - math.sqrt(1.0 - alpha * alpha) / math.sqrt(2.0)) / alpha
    return min(max(a, 0.0), 1.0)


def harmonic_r0() -> RadiusResult:
    """``tanh(pi/4)``, the sharp radius for ``|h| + |g| <= 1`` when ``f(0) = 0``."""
    return RadiusResult.exact(math.tanh(math.pi / 4.0))


def _check_exponent(exponent_p: float) -> float:
    exponent_p = float(exponent_p)
    if not exponent_p >= 1.0:  # also rejects nan
        raise DomainError(f"exponent p must be >= 1, got {exponent_p}")
    return exponent_p


def lp_prefactor(exponent_p: float) -> float:
    """``max(2**(1/p - 1/2), 1)``; the constant comparing l^p and l^2 pair norms."""
    exponent_p = _check_exponent(exponent_p)
    if math.isinf(exponent_p):
        return 1.0
    return max(2.0 ** (1.0 / exponent_p - 0.5), 1.0)


def harmonic_rp_a0(exponent_p: float, a0_abs: float) -> RadiusResult:
    """Radius below which ``|a_0| + sum (|a_k|^p+|b_k|^p)^(1/p) r^k <= 1``.

    For ``p`` in ``[1, 2]`` this is
    ``sqrt((1-|a0|) / (c + 1 + (c - 1)|a0|))`` with ``c = 2**(2/p - 1)``;
    for ``p >= 2`` it is ``sqrt((1 - |a0|) / 2)``.
    """
    exponent_p = _check_exponent(exponent_p)
    a0_abs = float(a0_abs)
    if not 0.0 <= a0_abs <= 1.0:
        raise DomainError(f"|a_0| must lie in [0, 1], got {a0_abs}")
    if exponent_p >= 2.0:
        value = math.sqrt((1.0 - a0_abs) / 2.0)
    else:
        c = 2.0 ** (2.0 / exponent_p - 1.0)
        value = math.sqrt((1.0 - a0_abs) / (c + 1.0 + (c - 1.0) * a0_abs))
    return RadiusResult.exact(value, "bound_formula")


def _check_unit_exponent(exponent_p: float) -> float:
    exponent_p = float(exponent_p)
    if not 1.0 <= exponent_p <= 2.0:
        raise DomainError(f"exponent p must lie in [1, 2], got {exponent_p}")
    return exponent_p


def threshold_A(exponent_p: float) -> float:
    """Largest ``|a_0|`` for which the radius 1/3 is guaranteed, ``p`` in ``[1, 2]``."""
    exponent_p = _check_unit_exponent(exponent_p)
    c = 2.0 ** (2.0 / exponent_p - 1.0)
    return (8.0 - c) / (8.0 + c)


def threshold_A_upper(exponent_p: float) -> float:
    """Upper bound on the best threshold, from the harmonic strip example."""
    exponent_p = _check_unit_exponent(exponent_p)
    t = 2.0 ** (2.0 / exponent_p) * math.log(2.0) ** 2
    return (math.pi ** 2 - t) / (math.pi ** 2 + t)


def odd_harmonic_rho(exponent_p: float) -> RadiusResult:
    """Radius where ``max(2**(1/p-1/2), 1) r / sqrt(1 - r**4)`` reaches 1."""
    exponent_p = _check_exponent(exponent_p)
    if exponent_p >= 2.0:
        value = math.sqrt((math.sqrt(5.0) - 1.0) / 2.0)
    else:
        value = math.sqrt(math.sqrt(4.0 ** (2.0 / exponent_p - 2.0) + 1.0)
                          - 2.0 ** (2.0 / exponent_p - 2.0))
    return RadiusResult.exact(value, "bound_formula")


def mobius_self_radius(a0_abs: float) -> float:
    """Bohr radius ``1/(1 + 2|a0|)`` of ``(z + a0)/(1 + conj(a0) z)``."""
    a0_abs = float(a0_abs)
    if not 0.0 <= a0_abs < 1.0:
        raise DomainError(f"|a_0| must lie in [0, 1), got {a0_abs}")
    return 1.0 / (1.0 + 2.0 * a0_abs)


def pair_counterexample_radius(a: float) -> float:
    """``sqrt(1 + a**2) - a``: where the unnormalised pair sum crosses 1."""
    a = float(a)
    if not a > 0.0:
        raise DomainError(f"pair parameter must be positive, got {a}")
    # 1/(sqrt(1+a^2)+a) avoids cancellation for large a
    return 1.0 / (math.sqrt(1.0 + a * a) + a)
