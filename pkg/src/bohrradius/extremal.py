"""Explicit functions attaining, or nearly attaining, the Bohr bounds.

Analytic families come back as :class:`~bohrradius.series.PowerSeries`,
harmonic ones as :class:`~bohrradius.harmonic.HarmonicCoeffs`.  All are
expanded from exact coefficient formulas; nothing here samples.
"""
from __future__ import annotations

import math

import numpy as np

from .exceptions import DomainError
from .harmonic import HarmonicCoeffs
from .radii import _as_class, extremal_parameter_a, pair_counterexample_radius
from .series import DEFAULT_ORDER, PowerSeries, mobius_symmetric_expand

HARMONIC_R_MAX = 0.999


def analytic_extremal(c, N: int = DEFAULT_ORDER) -> PowerSeries:
    """``z^m (z^p - a)/(1 - a z^p)`` with the sharp parameter ``a`` for ``(p, m)``.

    For ``m = 0`` the parameter is 1 and the function is the constant ``-1``;
    use :func:`best_mobius_member` to probe beyond the radius in that case.
    """
    c = _as_class(c)
    return mobius_symmetric_expand(extremal_parameter_a(c), c.p, c.m, N)


def psi_value(x: float, alpha: float) -> float:
    return x + alpha * (1.0 - x * x) / (1.0 - alpha * x)


def psi_argmax(alpha: float) -> float:
    """Maximiser over ``[0, 1]`` of ``x + alpha (1 - x^2)/(1 - alpha x)``.

    For ``alpha >= 1/3`` it is ``(1 - sqrt(1 - alpha^2)/sqrt(2)) / alpha``;
    below 1/3 the function increases on the whole interval and peaks at 1.
    """
    alpha = float(alpha)
    if not 0.0 < alpha < 1.0:
        raise DomainError(f"alpha must lie in (0, 1), got {alpha}")
    if alpha < 1.0 / 3.0:
        return 1.0
    x1 = (1.0 - math.sqrt(1.0 - alpha * alpha) / math.sqrt(2.0)) / alpha
    return min(x1, 1.0)


def closed_form_majorant(c, a: float, r: float) -> float:
    """Majorant of ``z^m (z^p - a)/(1 - a z^p)`` at ``r``: ``r^m psi(a, r^p)``."""
    c = _as_class(c)
    return r ** c.m * psi_value(a, r ** c.p)


def best_mobius_member(c, r: float, N: int = DEFAULT_ORDER) -> PowerSeries:
    """Member of the symmetric Mobius family with the largest majorant at ``r``."""
    c = _as_class(c)
    return mobius_symmetric_expand(psi_argmax(r ** c.p), c.p, c.m, N)


def majorant_chain_bound(a: float, r: float, p: int, rho: float) -> float:
    """Cauchy-Schwarz bound on ``sum_{k>=1} |b_k| r^(pk)`` for ``|g| <= 1``, ``|b_0| = a``.

    Valid for any ``rho > 1`` with ``rho r <= 1``.
    """
    if not (rho > 1.0 and rho * r <= 1.0 + 1e-15):
        raise DomainError("need rho > 1 and rho r <= 1")
    rp = r ** p
    inner = 1.0 - a * a * rp * rho ** p
    if inner <= 0.0:
        return math.inf
    return rp * (1.0 - a * a) / math.sqrt(inner) / math.sqrt(1.0 - rp / rho ** p)


def majorant_case_bound(c, a: float, r: float) -> float:
    """Bound on the full majorant of ``z^m g(z^p)`` given ``|g(0)| = a``.

    ``a >= r^p`` uses ``rho = a^(-1/p)``; otherwise ``rho = 1/r``.
    """
    c = _as_class(c)
    rp = r ** c.p
    if a >= rp:
        tail = rp * (1.0 - a * a) / (1.0 - rp * a)
    else:
        tail = rp * math.sqrt(1.0 - a * a) / math.sqrt(1.0 - rp * rp)
    return r ** c.m * (a + tail)


def _odd_tail(scale: float, N: int, r_max: float) -> float:
    # sum over odd n > N of scale / n * r^n
    return scale / (N + 1) * r_max ** (N + 1) / (1.0 - r_max * r_max)


def abu_example(mu: float, N: int = DEFAULT_ORDER, r_max: float = HARMONIC_R_MAX) -> HarmonicCoeffs:
    """``(2/pi) Im(log((1+z)/(1-z))) sin(mu) + i cos(mu)`` as ``h + conj(g)``.

    ``a_0 = i cos(mu)`` and, at odd ``n``, ``a_n = b_n = -2i sin(mu)/(pi n)``,
    so ``|a_n| = |b_n| = 2|sin mu|/(pi n)``.  Even coefficients vanish.
    """
    n = np.arange(N + 1)
    odd = n % 2 == 1
    a = np.zeros(N + 1, dtype=complex)
    a[odd] = -2j * math.sin(mu) / (math.pi * n[odd])
    b = a.copy()
    a[0] = 1j * math.cos(mu)
    tail = _odd_tail(4.0 * abs(math.sin(mu)) / math.pi, N, r_max)
    return HarmonicCoeffs(a, b, tail_bound=tail, r_max=r_max)


def abu_function(mu: float, z):
    """Direct evaluation of the function expanded by :func:`abu_example`."""
    z = np.asarray(z, dtype=complex)
    return 2.0 / math.pi * np.log((1 + z) / (1 - z)).imag * math.sin(mu) + 1j * math.cos(mu)


def harmonic_sharp_f0(alpha: float, beta: float, N: int = DEFAULT_ORDER,
                      r_max: float = HARMONIC_R_MAX) -> HarmonicCoeffs:
    """``(2 e^{i alpha}/pi) Im log((1 + e^{i beta} z)/(1 - e^{i beta} z))``.

    At odd ``n``: ``a_n = e^{i alpha} e^{i beta n} 2/(i pi n)`` and
    ``b_n = e^{-i alpha} e^{i beta n} 2/(i pi n)``.
    """
    n = np.arange(N + 1)
    odd = n % 2 == 1
    base = np.zeros(N + 1, dtype=complex)
    base[odd] = 2.0 / (1j * math.pi * n[odd]) * np.exp(1j * beta * n[odd])
    a = np.exp(1j * alpha) * base
    b = np.exp(-1j * alpha) * base
    return HarmonicCoeffs(a, b, tail_bound=_odd_tail(4.0 / math.pi, N, r_max), r_max=r_max)


def f0_function(alpha: float, beta: float, z):
    z = np.asarray(z, dtype=complex) * np.exp(1j * beta)
    return 2.0 * np.exp(1j * alpha) / math.pi * np.log((1 + z) / (1 - z)).imag


def pair_counterexample(a: float) -> tuple[PowerSeries, PowerSeries]:
    """``h = (z + a)/(2 sqrt(1+a^2))`` and ``g = (z - a)/(2 sqrt(1+a^2))``.

    ``|h| + |g| < 1`` on the disk, yet with ``g(0) != 0`` the pair sum
    ``(|a_0|+|b_0|) + (|a_1|+|b_1|) r`` exceeds 1 beyond ``sqrt(1+a^2) - a``.
    """
    pair_counterexample_radius(a)  # domain check
    s = 2.0 * math.sqrt(1.0 + a * a)
    return PowerSeries([a / s, 1.0 / s]), PowerSeries([-a / s, 1.0 / s])


def pair_counterexample_coeffs(a: float) -> HarmonicCoeffs:
    h, g = pair_counterexample(a)
    return HarmonicCoeffs.from_series(h, g, pair_mode=True)


def mobius_a0_series(a0: float, N: int = DEFAULT_ORDER, r_max: float = 1.0) -> PowerSeries:
    """Expansion of ``(z + a0)/(1 + a0 z)`` for real ``a0`` in ``[0, 1)``.

    Coefficients ``a0`` then ``(1 - a0^2)(-a0)^(k-1)``.
    """
    a0 = float(a0)
    if not 0.0 <= a0 < 1.0:
        raise DomainError(f"a0 must lie in [0, 1), got {a0}")
    k = np.arange(1, N + 1)
    coeffs = np.concatenate([[a0], (1.0 - a0 * a0) * (-a0) ** (k - 1)])
    tail = (1.0 - a0 * a0) * a0 ** N * r_max ** (N + 1) / (1.0 - a0 * r_max)
    return PowerSeries(coeffs, tail_bound=tail, r_max=r_max)


def phi_alpha(p: int, N: int = DEFAULT_ORDER, alpha: float | None = None) -> PowerSeries:
    """``z^p (alpha - z^p)/(1 - alpha z^p)``, sharp for ``g(0) = 0`` at ``r = 2^(-1/(2p))``.

    The majorant equals one at that radius exactly when ``alpha = r^p = 1/sqrt(2)``,
    which is the default; other values of ``alpha`` may be passed explicitly.
    """
    if p < 1:
        raise DomainError("p must be >= 1")
    alpha = 2.0 ** -0.5 if alpha is None else float(alpha)
    s = mobius_symmetric_expand(alpha, p, p, N)
    return PowerSeries(-s.coeffs, tail_bound=s.tail_bound, r_max=s.r_max)
