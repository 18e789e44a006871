"""The two convex univalent target maps and their integrated variants.

``p_strip_*`` functions realize the conformal map of the unit disc onto a
vertical strip alpha < Re w < beta, normalized to 1 at the origin;
``dorff_*`` functions realize the Dorff map, whose real part fills the
strip ((delta - pi)/(2 sin delta), delta/(2 sin delta)).  Each map comes
in pointwise-evaluation and closed-form-coefficient form, plus the
integrated variant obtained by applying Int_0^z (.)/t dt, which majorizes
log(f(z)/z) over the corresponding function class.

All ratio logarithms are computed as differences of principal logarithms
of factors with positive real part on the disc, so no branch tracking is
ever needed.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
from scipy.special import spence

from .series import TruncatedSeries

__all__ = [
    "StripParams",
    "DorffParam",
    "p_strip_eval",
    "b_strip_coeff",
    "p_hat_coeff",
    "p_hat_eval",
    "p_strip_series",
    "p_hat_series",
    "dorff_eval",
    "a_dorff_coeff",
    "b_tilde_coeff",
    "b_tilde_eval",
    "dorff_series",
    "b_tilde_series",
]

# sin(delta) degenerates at delta = pi; pointwise evaluation stays away
# from the boundary while coefficient formulas (ratios) remain stable.
_DELTA_EVAL_MARGIN = 1e-6


@dataclass(frozen=True)
class StripParams:
    """Strip edges alpha < 1 < beta; mu is the cached phase fraction."""

    alpha: float
    beta: float
    mu: float = field(init=False, repr=False)

    def __post_init__(self) -> None:
        if not self.alpha < 1.0 < self.beta:
            raise ValueError("strip parameters require alpha < 1 < beta")
        object.__setattr__(
            self, "mu", (1.0 - self.alpha) / (self.beta - self.alpha)
        )

    @property
    def width(self) -> float:
        return self.beta - self.alpha


@dataclass(frozen=True)
class DorffParam:
    """Angle delta in [pi/2, pi) steering the Dorff strip."""

    delta: float

    def __post_init__(self) -> None:
        if not np.pi / 2.0 <= self.delta < np.pi:
            raise ValueError("delta must lie in [pi/2, pi)")

    @property
    def lower(self) -> float:
        """Lower edge of Re zf'/f for the associated class."""
        return 1.0 + (self.delta - np.pi) / (2.0 * np.sin(self.delta))

    @property
    def upper(self) -> float:
        return 1.0 + self.delta / (2.0 * np.sin(self.delta))


def _check_index(n) -> np.ndarray:
    n = np.asarray(n)
    if np.any(n < 1):
        raise ValueError("coefficient index must be >= 1")
    return n


def _check_disc(z) -> np.ndarray:
    z = np.asarray(z, dtype=complex)
    if np.any(np.abs(z) >= 1.0):
        raise ValueError("evaluation point must satisfy |z| < 1")
    return z


def _strip_phase(p: StripParams, n) -> np.ndarray:
    # e^{2 pi i n mu} with the exponent reduced mod 1, so integer n*mu
    # (even indices at mu = 1/2, say) yields an exact zero in 1 - phase
    return np.exp(2j * np.pi * np.mod(n * p.mu, 1.0))


def p_strip_eval(p: StripParams, z):
    """Value of the vertical-strip map; Re of the result lies in (alpha, beta)."""
    z = _check_disc(z)
    val = 1.0 + (p.width / np.pi) * 1j * (
        np.log(1.0 - _strip_phase(p, 1) * z) - np.log(1.0 - z)
    )
    return complex(val) if val.ndim == 0 else val


def b_strip_coeff(p: StripParams, n):
    """Taylor coefficient n >= 1 of the strip map; |result| <= 2*width/(n*pi)."""
    n = _check_index(n)
    val = (p.width / (n * np.pi)) * 1j * (1.0 - _strip_phase(p, n))
    return complex(val) if val.ndim == 0 else val


def p_hat_coeff(p: StripParams, n):
    """Coefficient n of the integrated strip map: b_strip_coeff / n."""
    n = _check_index(n)
    if n.ndim == 0:
        k = int(n)
        return b_strip_coeff(p, k) / k
    return b_strip_coeff(p, n) / n


def _li2(z):
    # principal dilogarithm; spence(w) = Li_2(1 - w)
    return spence(1.0 - np.asarray(z, dtype=complex))


def p_hat_eval(p: StripParams, z):
    """Pointwise integrated strip map, via the dilogarithm primitive
    Int_0^z log(1 - c t)/t dt = -Li_2(c z)."""
    z = _check_disc(z)
    val = (p.width / np.pi) * 1j * (_li2(z) - _li2(_strip_phase(p, 1) * z))
    return complex(val) if val.ndim == 0 else val


def p_strip_series(p: StripParams, order: int) -> TruncatedSeries:
    """Truncated Taylor series of the strip map (constant term 1)."""
    c = np.empty(order + 1, dtype=complex)
    c[0] = 1.0
    if order >= 1:
        c[1:] = b_strip_coeff(p, np.arange(1, order + 1))
    return TruncatedSeries(c)


def p_hat_series(p: StripParams, order: int) -> TruncatedSeries:
    """Truncated Taylor series of the integrated strip map (vanishes at 0)."""
    c = np.zeros(order + 1, dtype=complex)
    if order >= 1:
        c[1:] = p_hat_coeff(p, np.arange(1, order + 1))
    return TruncatedSeries(c)


def dorff_eval(d: DorffParam, z):
    """Value of the Dorff map; vanishes at the origin.

    Restricted to delta <= pi - 1e-6: closer to pi the 1/(2 sin delta)
    prefactor amplifies rounding in the log difference.
    """
    if d.delta > np.pi - _DELTA_EVAL_MARGIN:
        raise ValueError("pointwise Dorff evaluation needs delta <= pi - 1e-6")
    z = _check_disc(z)
    phase = np.exp(1j * d.delta)
    val = (
        np.log(1.0 + z * phase) - np.log(1.0 + z / phase)
    ) / (2j * np.sin(d.delta))
    return complex(val) if val.ndim == 0 else val


def a_dorff_coeff(d: DorffParam, n):
    """Taylor coefficient n >= 1 of the Dorff map: (-1)^(n-1) sin(n delta)/(n sin delta).

    The sine ratio is formed directly, never as (1/sin delta) * sin(n delta),
    limiting cancellation near delta = pi.  A_1 = 1 for every delta.
    """
    n = _check_index(n)
    val = (-1.0) ** (n - 1) * np.sin(n * d.delta) / (n * np.sin(d.delta))
    return float(val) if val.ndim == 0 else val


def b_tilde_coeff(d: DorffParam, n):
    """Coefficient n of the integrated Dorff map: a_dorff_coeff / n."""
    n = _check_index(n)
    if n.ndim == 0:
        k = int(n)
        return a_dorff_coeff(d, k) / k
    return a_dorff_coeff(d, n) / n


def b_tilde_eval(d: DorffParam, z):
    """Pointwise integrated Dorff map via dilogarithm primitives."""
    if d.delta > np.pi - _DELTA_EVAL_MARGIN:
        raise ValueError("pointwise Dorff evaluation needs delta <= pi - 1e-6")
    z = _check_disc(z)
    phase = np.exp(1j * d.delta)
    val = (_li2(-z / phase) - _li2(-z * phase)) / (2j * np.sin(d.delta))
    return complex(val) if val.ndim == 0 else val


def dorff_series(d: DorffParam, order: int) -> TruncatedSeries:
    """Truncated Taylor series of the Dorff map (vanishes at 0)."""
    c = np.zeros(order + 1, dtype=complex)
    if order >= 1:
        c[1:] = a_dorff_coeff(d, np.arange(1, order + 1))
    return TruncatedSeries(c)


def b_tilde_series(d: DorffParam, order: int) -> TruncatedSeries:
    """Truncated Taylor series of the integrated Dorff map."""
    c = np.zeros(order + 1, dtype=complex)
    if order >= 1:
        c[1:] = b_tilde_coeff(d, np.arange(1, order + 1))
    return TruncatedSeries(c)
