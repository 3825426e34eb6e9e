"""Truncated power series and their majorant sums.

A :class:`PowerSeries` stores the Taylor coefficients ``c_0 .. c_N`` of a
function analytic in the unit disk together with a rigorous bound on what
was thrown away.  Two kinds of slack are tracked separately:

``tail_bound``
    bounds ``sum_{k>N} |c_k| r_max**k``.  For ``r <= r_max`` the dropped tail
    is at most ``tail_bound * (r / r_max)**(N + 1)``, since every dropped
    index exceeds ``N``.
``coeff_error``
    bounds ``sum_{k<=N} |c_k - c_k_stored| r**k`` for every ``r <= r_max``.
    Zero for closed-form expansions, positive for coefficients recovered
    from sampled values.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Any, Sequence

import numpy as np

from .exceptions import ConfigurationError, DomainError

DEFAULT_ORDER = 256
DEFAULT_SAMPLE_RADIUS = 0.7
_EPS = np.finfo(float).eps


def _as_coeffs(values) -> np.ndarray:
    arr = np.array(values, dtype=complex).ravel()
    if arr.size == 0:
        raise DomainError("a power series needs at least one coefficient")
    arr.setflags(write=False)
    return arr


@dataclass(frozen=True, eq=False)
class PowerSeries:
    """Truncated complex power series ``sum_k c_k z**k`` with tail metadata.

    Parameters
    ----------
    coeffs : array_like of complex
        Coefficients ``c_0 .. c_N``.
    tail_bound : float
        Bound on ``sum_{k>N} |c_k| r_max**k``.
    r_max : float
        Largest radius at which the bookkeeping is valid, in ``(0, 1]``.
    coeff_error : float
        Bound on the accumulated error of the retained coefficients.
    """

    coeffs: np.ndarray
    tail_bound: float = 0.0
    r_max: float = 1.0
    coeff_error: float = 0.0

    def __post_init__(self):
        object.__setattr__(self, "coeffs", _as_coeffs(self.coeffs))
        for name in ("tail_bound", "coeff_error"):
            val = float(getattr(self, name))
            if not (math.isfinite(val) and val >= 0.0):
                raise DomainError(f"{name} must be finite and nonnegative, got {val}")
            object.__setattr__(self, name, val)
        r_max = float(self.r_max)
        if not 0.0 < r_max <= 1.0:
            raise DomainError(f"r_max must lie in (0, 1], got {r_max}")
        object.__setattr__(self, "r_max", r_max)

    @property
    def trunc_order(self) -> int:
        return self.coeffs.size - 1

    def __len__(self):
        return self.coeffs.size

    def __call__(self, z):
        """Evaluate the retained polynomial at ``z`` (scalar or array)."""
        return np.polyval(self.coeffs[::-1], np.asarray(z, dtype=complex))

    def tail_at(self, r: float) -> float:
        """Bound on the dropped tail plus coefficient error at radius ``r``."""
        if self.tail_bound == 0.0:
            tail = 0.0
        else:
            tail = self.tail_bound * (r / self.r_max) ** (self.trunc_order + 1)
        return tail + self.coeff_error

    def to_dict(self) -> dict[str, Any]:
        out = {
            "coeffs": [[float(c.real), float(c.imag)] for c in self.coeffs],
            "trunc_order": self.trunc_order,
            "r_max": self.r_max,
            "tail_bound": self.tail_bound,
        }
        if self.coeff_error:
            out["coeff_error"] = self.coeff_error
        return out

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> "PowerSeries":
        coeffs = [complex(re, im) for re, im in data["coeffs"]]
        s = cls(coeffs, tail_bound=data.get("tail_bound", 0.0),
                r_max=data.get("r_max", 1.0), coeff_error=data.get("coeff_error", 0.0))
        if "trunc_order" in data and data["trunc_order"] != s.trunc_order:
            raise DomainError("trunc_order does not match the number of coefficients")
        return s


def _check_radius(s: PowerSeries, r: float) -> float:
    r = float(r)
    if not (0.0 <= r < 1.0) or r > s.r_max:
        raise DomainError(f"radius {r} outside [0, min(r_max={s.r_max}, 1))")
    return r


def powers(r: float, n: int) -> np.ndarray:
    """``r**k`` for ``k = 0 .. n-1`` with ``0**0 == 1``."""
    return np.power(float(r), np.arange(n, dtype=float))


def majorant_sum(s: PowerSeries, r: float) -> float:
    """Majorant ``sum_k |c_k| r**k`` including the declared tail slack.

    Raises
    ------
    DomainError
        If ``r`` is negative, at least 1, or above ``s.r_max``.
    """
    r = _check_radius(s, r)
    body = float(np.dot(np.abs(s.coeffs), powers(r, len(s))))
    return body + s.tail_at(r)


def mobius_symmetric_expand(a: float, p: int, m: int, N: int = DEFAULT_ORDER,
                            r_max: float = 1.0) -> PowerSeries:
    """Taylor expansion of ``z**m (z**p - a) / (1 - a z**p)`` through ``z**N``.

    The coefficient of ``z**m`` is ``-a`` and that of ``z**(p k + m)`` is
    ``(1 - a**2) a**(k-1)`` for ``k >= 1``.  At ``a = 1`` the function
    degenerates to the constant ``-z**m`` and the expansion is returned as such.
    """
    a = float(a)
    if not 0.0 <= a <= 1.0:
        raise DomainError(f"Mobius parameter must lie in [0, 1], got {a}")
    if p < 1 or not 0 <= m <= p:
        raise DomainError(f"need p >= 1 and 0 <= m <= p, got p={p}, m={m}")
    if N < m:
        raise DomainError(f"truncation order N={N} below m={m}")
    coeffs = np.zeros(N + 1, dtype=complex)
    coeffs[m] = -a
    K = (N - m) // p
    if K >= 1 and a < 1.0:
        k = np.arange(1, K + 1)
        coeffs[p * k + m] = (1.0 - a * a) * a ** (k - 1)
    if a >= 1.0:
        tail = 0.0
    else:
        # geometric tail (1-a^2) a^K r^(pK+p+m) / (1 - a r^p) at r = r_max
        tail = (1.0 - a * a) * a ** K * r_max ** (p * K + p + m) / (1.0 - a * r_max ** p)
    return PowerSeries(coeffs, tail_bound=tail, r_max=r_max)


def coeffs_from_boundary_samples(values: Sequence[complex], rho: float, N: int,
                                 r_max: float | None = None) -> PowerSeries:
    """Recover Taylor coefficients from samples on the circle ``|z| = rho``.

    ``values[j]`` must be ``f(rho * exp(2j*pi*j/M))`` for ``j = 0 .. M-1``.
    The discrete Fourier average picks up ``c_k rho**k`` plus aliases
    ``c_{k+tM} rho**(k+tM)``; with ``|f| <= 1`` each recovered coefficient is
    off by at most ``rho**(M-k) / (1 - rho**M)``, plus floating point
    round-off amplified by ``rho**-k``.  Both are charged to ``coeff_error``
    and the unseen indices ``k > N`` to ``tail_bound`` via ``|c_k| <= 1``.

    Parameters
    ----------
    values : sequence of complex
        Equally spaced boundary samples, ``M >= 4 N`` of them.
    rho : float
        Sampling radius in ``(0, 1)``.
    N : int
        Highest coefficient index to return.
    r_max : float, optional
        Bookkeeping radius, defaults to ``rho``.  Must not exceed ``rho``.
    """
    values = np.asarray(values, dtype=complex).ravel()
    M = values.size
    rho = float(rho)
    if not 0.0 < rho < 1.0:
        raise ConfigurationError(f"sampling radius must lie in (0, 1), got {rho}")
    if N < 0 or M < 4 * N or M == 0:
        raise ConfigurationError(f"need at least 4N = {4 * N} samples, got {M}")
    r_max = rho if r_max is None else float(r_max)
    if not 0.0 < r_max <= rho:
        raise ConfigurationError("bookkeeping radius must lie in (0, rho]")

    k = np.arange(N + 1)
    coeffs = np.fft.fft(values)[: N + 1] / M / rho ** k
    scale = max(1.0, float(np.abs(values).max()))
    alias = rho ** (M - k) / (1.0 - rho ** M)
    roundoff = 4.0 * _EPS * math.log2(max(M, 2)) * scale * rho ** (-k.astype(float))
    coeff_error = float(np.dot(alias + roundoff, r_max ** k.astype(float)))
    tail = r_max ** (N + 1) / (1.0 - r_max)
    return PowerSeries(coeffs, tail_bound=tail, r_max=r_max, coeff_error=coeff_error)


def sample_circle(func, rho: float = DEFAULT_SAMPLE_RADIUS, M: int = 8 * DEFAULT_ORDER) -> np.ndarray:
    """Evaluate ``func`` at ``M`` equally spaced points of ``|z| = rho``."""
    theta = 2.0 * np.pi * np.arange(M) / M
    return np.asarray(func(rho * np.exp(1j * theta)), dtype=complex)


def extract_coeffs(func, N: int, rho: float = DEFAULT_SAMPLE_RADIUS,
                   oversample: int = 8) -> PowerSeries:
    """Sample ``func`` on a circle and return its first ``N + 1`` coefficients."""
    return coeffs_from_boundary_samples(sample_circle(func, rho, oversample * N), rho, N)


def _check_weight_radius(R: float, p: int) -> tuple[float, int]:
    R = float(R)
    if not 0.0 < R <= 1.0:
        raise DomainError(f"weight radius must lie in (0, 1], got {R}")
    if p < 1:
        raise DomainError(f"weight exponent must be >= 1, got {p}")
    return R, int(p)


def weighted_coeff_l2(s: PowerSeries, R: float, p: int) -> float:
    """``sum_{k=1}^N |b_k|**2 R**(p k)`` for ``s = sum b_k z**k``."""
    R, p = _check_weight_radius(R, p)
    b2 = np.abs(s.coeffs[1:]) ** 2
    return float(np.dot(b2, R ** (p * np.arange(1, len(s), dtype=float))))


def weighted_coeff_l2_bound(b0: complex, R: float, p: int) -> float:
    """Sharp upper bound ``R**p (1 - |b0|**2)**2 / (1 - |b0|**2 R**p)``."""
    R, p = _check_weight_radius(R, p)
    t = abs(b0) ** 2
    Rp = R ** p
    if t >= 1.0:
        return 0.0
    return Rp * (1.0 - t) ** 2 / (1.0 - t * Rp)
