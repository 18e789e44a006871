"""Logarithmic coefficients, extremal functions, and class-member generation.

The logarithmic coefficients gamma_n of a normalized analytic function f
are defined by log(f(z)/z) = sum 2 gamma_n z^n.  This module extracts
them from truncated series, constructs the extremal functions that attain
the sharp coefficient-sum bounds of both strip classes, and generates
random class members by subordinating the target map with one of three
analytically safe Schwarz families (so every precondition is provable,
never sampled).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .maps import (
    DorffParam,
    StripParams,
    b_tilde_coeff,
    b_tilde_series,
    p_hat_coeff,
    p_hat_series,
)
from .series import TruncatedSeries, log_normalized, series_exp

__all__ = [
    "LogCoeffVector",
    "SchwarzSpec",
    "log_coefficients",
    "extremal_strip",
    "extremal_dorff",
    "koebe_rotation",
    "generate_member",
    "random_strip_params",
    "random_dorff_param",
    "random_schwarz_spec",
]

SCALED_ROTATION = "scaled-rotation"
POWER = "power"
BLASCHKE = "blaschke-factor"


@dataclass(frozen=True)
class LogCoeffVector:
    """gamma_1..gamma_N plus truncation-tail metadata.

    ``tail_constant`` is a C >= 0 with |gamma_n| <= C / n**2 guaranteed
    for all n > order; 0 means no such bound is known (e.g. the Koebe
    function, whose gamma_n decay only like 1/n).
    """

    gammas: np.ndarray
    tail_constant: float = 0.0

    def __post_init__(self) -> None:
        g = np.array(self.gammas, dtype=complex)
        if g.ndim != 1 or g.size == 0:
            raise ValueError("gammas must be a nonempty 1-D sequence")
        if self.tail_constant < 0.0:
            raise ValueError("tail_constant must be nonnegative")
        g.setflags(write=False)
        object.__setattr__(self, "gammas", g)

    @property
    def order(self) -> int:
        return len(self.gammas)

    def gamma(self, n: int) -> complex:
        """gamma_n for 1 <= n <= order."""
        if not 1 <= n <= self.order:
            raise IndexError(f"gamma index {n} outside 1..{self.order}")
        return complex(self.gammas[n - 1])


@dataclass(frozen=True)
class SchwarzSpec:
    """One of three closed-form Schwarz functions (omega(0) = 0, |omega| < 1).

    * scaled-rotation: omega(z) = c z, |c| <= 1
    * power:           omega(z) = c z**k, |c| <= 1, k >= 1
    * blaschke-factor: omega(z) = e^{i phi} z (z + a) / (1 + conj(a) z), |a| < 1
    """

    kind: str
    c: complex = 1.0
    k: int = 1
    a: complex = 0.0
    phi: float = 0.0

    def __post_init__(self) -> None:
        if self.kind in (SCALED_ROTATION, POWER):
            if abs(self.c) > 1.0 + 1e-12:
                raise ValueError("scaling factor must satisfy |c| <= 1")
            if self.kind == POWER and self.k < 1:
                raise ValueError("power exponent must be >= 1")
        elif self.kind == BLASCHKE:
            if abs(self.a) >= 1.0:
                raise ValueError("Blaschke zero must satisfy |a| < 1")
        else:
            raise ValueError(f"unknown Schwarz family {self.kind!r}")

    @classmethod
    def scaled_rotation(cls, c: complex) -> SchwarzSpec:
        return cls(SCALED_ROTATION, c=complex(c))

    @classmethod
    def power(cls, c: complex, k: int) -> SchwarzSpec:
        return cls(POWER, c=complex(c), k=int(k))

    @classmethod
    def blaschke(cls, a: complex, phi: float = 0.0) -> SchwarzSpec:
        return cls(BLASCHKE, a=complex(a), phi=float(phi))

    @classmethod
    def identity(cls) -> SchwarzSpec:
        return cls(SCALED_ROTATION, c=1.0)

    def series(self, order: int) -> TruncatedSeries:
        """Taylor coefficients of omega up to `order`."""
        w = np.zeros(order + 1, dtype=complex)
        if self.kind == SCALED_ROTATION:
            if order >= 1:
                w[1] = self.c
        elif self.kind == POWER:
            if order >= self.k:
                w[self.k] = self.c
        else:
            rot = np.exp(1j * self.phi)
            abar = np.conj(self.a)
            n = np.arange(1, order + 1)
            w[1:] = self.a * (-abar) ** (n - 1)
            if order >= 2:
                w[2:] += (-abar) ** (n[1:] - 2)
            w[1:] *= rot
        return TruncatedSeries(w)

    def describe(self) -> dict:
        """JSON-friendly parameter record."""
        out = {"kind": self.kind}
        if self.kind in (SCALED_ROTATION, POWER):
            out["c_re"], out["c_im"] = self.c.real, self.c.imag
            if self.kind == POWER:
                out["k"] = self.k
        else:
            out["a_re"], out["a_im"] = self.a.real, self.a.imag
            out["phi"] = self.phi
        return out


def log_coefficients(f: TruncatedSeries) -> LogCoeffVector:
    """Extract gamma_1..gamma_{order-1} of a normalized series.

    gamma_n is half the n-th coefficient of the formal log(f/z); no tail
    information is attached (tail_constant = 0).
    """
    ell = log_normalized(f)
    return LogCoeffVector(ell.coeffs[1:] / 2.0)


def _assemble_member(q_minus_1: np.ndarray) -> TruncatedSeries:
    """z * exp(T) for T = integral of (q-1)/t: the unique normalized f
    with z f'/f = q."""
    t = TruncatedSeries(q_minus_1).integrate_over_t()
    return series_exp(t).shift(1)


def extremal_strip(
    p: StripParams, order: int
) -> tuple[TruncatedSeries, LogCoeffVector]:
    """Extremal function of the strip class and its closed-form gammas.

    The function is z * exp of the integrated strip map, so its gamma_n
    equal half the integrated-map coefficients; by construction z f'/f
    reproduces the strip map itself.  Series extraction and the closed
    form agree to roundoff (checked in the test suite).
    """
    if order < 2:
        raise ValueError("order must be at least 2")
    n = np.arange(1, order + 1)
    gammas = p_hat_coeff(p, n) / 2.0
    f = series_exp(p_hat_series(p, order - 1)).shift(1)
    return f, LogCoeffVector(gammas, tail_constant=p.width / np.pi)


def extremal_dorff(
    d: DorffParam, order: int
) -> tuple[TruncatedSeries, LogCoeffVector]:
    """Extremal function of the Dorff class and its closed-form gammas.

    gamma_n is half the integrated Dorff-map coefficient, bounded by
    1/(2n) for every stored index and by C/n**2, C = 1/(2 sin delta),
    beyond the truncation order.
    """
    if order < 2:
        raise ValueError("order must be at least 2")
    n = np.arange(1, order + 1)
    gammas = b_tilde_coeff(d, n) / 2.0
    f = series_exp(b_tilde_series(d, order - 1)).shift(1)
    return f, LogCoeffVector(gammas, tail_constant=0.5 / np.sin(d.delta))


def koebe_rotation(
    eps: complex, order: int
) -> tuple[TruncatedSeries, LogCoeffVector]:
    """Rotated Koebe function z/(1 - eps z)^2 for |eps| = 1.

    Coefficient n is n * eps**(n-1); gamma_n = eps**n / n.  The gammas
    decay like 1/n, so no quadratic tail constant applies (0 = unknown).
    """
    eps = complex(eps)
    if abs(abs(eps) - 1.0) > 1e-12:
        raise ValueError("Koebe rotation requires |eps| = 1")
    if order < 2:
        raise ValueError("order must be at least 2")
    n = np.arange(1, order + 1)
    coeffs = np.zeros(order + 1, dtype=complex)
    coeffs[1:] = n * eps ** (n - 1)
    gammas = eps**n / n
    return TruncatedSeries(coeffs), LogCoeffVector(gammas)


def _log_one_minus(lam: complex, w: SchwarzSpec, order: int) -> np.ndarray:
    """Coefficients of log(1 - lam * omega(z)) up to `order`, exactly.

    For each Schwarz family 1 - lam*omega is a ratio of polynomials of
    degree <= 2 in z, so the log splits into closed-form logs of linear
    and quadratic factors: log(1 - r z) contributes -r^n/n, and a
    quadratic contributes the power sums of its inverse roots.  All the
    inverse roots have modulus <= 1 here (omega maps the disc into
    itself and |lam| = 1), so the power sums stay bounded.
    """
    out = np.zeros(order + 1, dtype=complex)
    n = np.arange(1, order + 1)
    if w.kind in (SCALED_ROTATION, POWER):
        step = 1 if w.kind == SCALED_ROTATION else w.k
        factor = lam * w.c
        if factor != 0.0:
            m = np.arange(1, order // step + 1)
            out[step * m] = -np.power(factor, m) / m
        return out
    rot = np.exp(1j * w.phi)
    abar = np.conj(w.a)
    # 1 - lam*omega = (1 + b z + c2 z^2) / (1 + abar z)
    b = abar - lam * rot * w.a
    c2 = -lam * rot
    r1, r2 = np.roots([1.0, b, c2])
    out[1:] = (np.power(-abar, n) - np.power(r1, n) - np.power(r2, n)) / n
    return out


def _target_factors(target) -> tuple[complex, complex, complex]:
    """(kappa, lam1, lam2): the target map minus its center equals
    kappa * [log(1 - lam1 w) - log(1 - lam2 w)]."""
    if isinstance(target, StripParams):
        kappa = (target.width / np.pi) * 1j
        lam1 = np.exp(2j * np.pi * target.mu)
        return kappa, lam1, 1.0 + 0.0j
    if isinstance(target, DorffParam):
        kappa = 1.0 / (2j * np.sin(target.delta))
        phase = np.exp(1j * target.delta)
        return kappa, -phase, -np.conj(phase)
    raise TypeError("target must be StripParams or DorffParam")


def generate_member(target, w: SchwarzSpec, order: int) -> TruncatedSeries:
    """The unique normalized f with z f'/f subordinated through omega.

    Builds q = target map evaluated at omega(z) coefficient-exactly from
    the closed-form factor logs, then f = z * exp(Int (q - 1)/t dt).
    With omega(z) = z this reproduces the extremal function; with
    omega = 0 it returns the identity map z.
    """
    if order < 2:
        raise ValueError("order must be at least 2")
    kappa, lam1, lam2 = _target_factors(target)
    q_minus_1 = kappa * (
        _log_one_minus(lam1, w, order - 1) - _log_one_minus(lam2, w, order - 1)
    )
    return _assemble_member(q_minus_1)


def random_strip_params(rng: np.random.Generator) -> StripParams:
    """alpha ~ U[-2, 0.9], beta ~ U[1.1, 4]."""
    return StripParams(rng.uniform(-2.0, 0.9), rng.uniform(1.1, 4.0))


def random_dorff_param(rng: np.random.Generator) -> DorffParam:
    """delta ~ U[pi/2, pi - 1e-3]."""
    return DorffParam(rng.uniform(np.pi / 2.0, np.pi - 1e-3))


def random_schwarz_spec(rng: np.random.Generator) -> SchwarzSpec:
    """Uniform pick over the three families with moderate parameters."""
    kind = rng.integers(3)
    phase = np.exp(2j * np.pi * rng.uniform())
    if kind == 0:
        return SchwarzSpec.scaled_rotation(rng.uniform(0.0, 1.0) * phase)
    if kind == 1:
        return SchwarzSpec.power(rng.uniform(0.0, 1.0) * phase, int(rng.integers(2, 6)))
    return SchwarzSpec.blaschke(
        rng.uniform(0.0, 0.8) * phase, rng.uniform(0.0, 2.0 * np.pi)
    )
