"""Truncated complex power-series arithmetic.

A :class:`TruncatedSeries` holds the Taylor coefficients ``c0..cN`` of an
analytic function on the unit disc, truncated at a declared order ``N``
(coefficient of ``z**k`` at index ``k``).  All operations are formal: the
exponential and logarithm are computed by coefficient recurrences, never
pointwise, so no branch of ``log`` is ever chosen inside the engine.

Binary operations truncate to the smaller order of the two operands;
coefficients beyond the common order are unknown, not zero.
"""

from __future__ import annotations

from collections.abc import Callable

import numpy as np

__all__ = [
    "TruncatedSeries",
    "series_exp",
    "log_normalized",
    "compose_schwarz",
    "coeffs_by_circle_sampling",
]

# Tolerance for the "normalized" tag (c0 = 0, c1 = 1); arithmetic on
# normalized series keeps these exact, the slack only absorbs roundoff.
_NORMALIZED_TOL = 1e-12


class TruncatedSeries:
    """Finite Taylor expansion ``c0 + c1*z + ... + cN*z**N``.

    Values are immutable: the coefficient array is copied on construction
    and write-protected, so instances are safe to share between threads.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs) -> None:
        c = np.array(coeffs, dtype=complex)
        if c.ndim != 1 or c.size == 0:
            raise ValueError("coefficients must be a nonempty 1-D sequence")
        c.setflags(write=False)
        object.__setattr__(self, "coeffs", c)

    @property
    def order(self) -> int:
        """Highest retained power of z."""
        return len(self.coeffs) - 1

    @classmethod
    def zero(cls, order: int) -> TruncatedSeries:
        return cls(np.zeros(order + 1))

    @classmethod
    def identity(cls, order: int) -> TruncatedSeries:
        """The series of f(z) = z."""
        c = np.zeros(order + 1, dtype=complex)
        if order < 1:
            raise ValueError("identity needs order >= 1")
        c[1] = 1.0
        return cls(c)

    def __repr__(self) -> str:
        return f"TruncatedSeries(order={self.order}, coeffs={self.coeffs!r})"

    # -- ring operations ---------------------------------------------------

    def __add__(self, other: TruncatedSeries) -> TruncatedSeries:
        n = min(self.order, other.order)
        return TruncatedSeries(self.coeffs[: n + 1] + other.coeffs[: n + 1])

    def __sub__(self, other: TruncatedSeries) -> TruncatedSeries:
        n = min(self.order, other.order)
        return TruncatedSeries(self.coeffs[: n + 1] - other.coeffs[: n + 1])

    def __neg__(self) -> TruncatedSeries:
        return TruncatedSeries(-self.coeffs)

    def __mul__(self, other):
        """Cauchy product, truncated at the smaller order; or scalar scale."""
        if isinstance(other, TruncatedSeries):
            n = min(self.order, other.order)
            full = np.convolve(self.coeffs[: n + 1], other.coeffs[: n + 1])
            return TruncatedSeries(full[: n + 1])
        return TruncatedSeries(self.coeffs * complex(other))

    def __rmul__(self, other) -> TruncatedSeries:
        return self.__mul__(other)

    # -- calculus ----------------------------------------------------------

    def derivative(self) -> TruncatedSeries:
        """Formal derivative; result order drops by one."""
        if self.order < 1:
            raise ValueError("cannot differentiate an order-0 series")
        k = np.arange(1, self.order + 1)
        return TruncatedSeries(k * self.coeffs[1:])

    def integrate_over_t(self) -> TruncatedSeries:
        """Primitive of g(t)/t from 0: coefficient k becomes g_k / k.

        Requires g_0 = 0 so the integrand is analytic at the origin.
        Result order equals the input order.
        """
        if abs(self.coeffs[0]) > _NORMALIZED_TOL:
            raise ValueError("integrand g(t)/t needs g(0) = 0")
        out = np.zeros(self.order + 1, dtype=complex)
        k = np.arange(1, self.order + 1)
        out[1:] = self.coeffs[1:] / k
        return TruncatedSeries(out)

    def shift(self, k: int = 1) -> TruncatedSeries:
        """Multiply by z**k exactly; order grows by k."""
        if k < 0:
            raise ValueError("shift exponent must be nonnegative")
        return TruncatedSeries(np.concatenate([np.zeros(k), self.coeffs]))

    def truncate(self, order: int) -> TruncatedSeries:
        """Drop coefficients above `order` (which must not exceed self.order)."""
        if order > self.order:
            raise ValueError("cannot extend a truncated series")
        return TruncatedSeries(self.coeffs[: order + 1])

    # -- evaluation --------------------------------------------------------

    def evaluate(self, z):
        """Horner evaluation at a point or ndarray of points."""
        result = np.full_like(np.asarray(z, dtype=complex), self.coeffs[-1])
        for c in self.coeffs[-2::-1]:
            result = result * z + c
        if np.ndim(z) == 0:
            return complex(result)
        return result

    __call__ = evaluate

    # -- tags --------------------------------------------------------------

    def is_normalized(self) -> bool:
        """c0 = 0 and c1 = 1 (within roundoff)."""
        return (
            self.order >= 1
            and abs(self.coeffs[0]) <= _NORMALIZED_TOL
            and abs(self.coeffs[1] - 1.0) <= _NORMALIZED_TOL
        )

    def is_schwarz(self, radius: float = 0.999, angles: int = 256) -> bool:
        """c0 = 0 and sampled sup of |value| on `radius` below 1.

        The sup is probed on a grid of angles, not proven; callers that
        need a certified Schwarz function should construct one from a
        closed form.
        """
        if abs(self.coeffs[0]) > _NORMALIZED_TOL:
            return False
        theta = 2.0 * np.pi * np.arange(angles) / angles
        vals = self.evaluate(radius * np.exp(1j * theta))
        return bool(np.max(np.abs(vals)) < 1.0)


def series_exp(a: TruncatedSeries) -> TruncatedSeries:
    """Formal exponential of a series with a_0 = 0.

    Uses the recurrence from E' = a'E, i.e. k*E_k = sum_{j=1..k} j*a_j*E_{k-j}
    with E_0 = 1.  Restricting to a_0 = 0 keeps the result branch-free.
    """
    if abs(a.coeffs[0]) > _NORMALIZED_TOL:
        raise ValueError("series_exp requires a vanishing constant term")
    n = a.order
    da = np.arange(n + 1) * a.coeffs  # j * a_j
    out = np.zeros(n + 1, dtype=complex)
    out[0] = 1.0
    # rev[n - i] mirrors out[i]; keeps every dot product contiguous
    rev = np.zeros(n + 1, dtype=complex)
    rev[n] = 1.0
    for k in range(1, n + 1):
        val = np.dot(da[1 : k + 1], rev[n - k + 1 : n + 1]) / k
        out[k] = val
        rev[n - k] = val
    return TruncatedSeries(out)


def _log_one(p: np.ndarray) -> np.ndarray:
    """Formal log of a coefficient array with p_0 = 1, via p*L' = p'."""
    n = len(p) - 1
    out = np.zeros(n + 1, dtype=complex)
    dl = np.zeros(n + 1, dtype=complex)  # j * L_j, filled as we go
    prev = p[::-1].copy()  # prev[n - i] = p_i, contiguous windows below
    for k in range(1, n + 1):
        acc = np.dot(dl[1:k], prev[n - k + 1 : n]) if k > 1 else 0.0
        out[k] = (p[k] - acc / k) / p[0]
        dl[k] = k * out[k]
    return out


def log_normalized(f: TruncatedSeries) -> TruncatedSeries:
    """Formal log(f(z)/z) of a normalized series (f_0 = 0, f_1 = 1).

    The result L has L_0 = 0 and satisfies (f/z) L' = (f/z)'; no branch of
    the pointwise logarithm is involved.  Result order is f.order - 1
    (the order of f/z).
    """
    if not f.is_normalized():
        raise ValueError("log_normalized requires a normalized series")
    return TruncatedSeries(_log_one(f.coeffs[1:]))


def compose_schwarz(h: TruncatedSeries, w: TruncatedSeries) -> TruncatedSeries:
    """Taylor coefficients of h(w(z)) for a Schwarz-type inner series.

    Requires w_0 = 0 (composition is then well defined order by order).
    Horner evaluation over truncated series; result order is the smaller
    of the two operand orders.
    """
    if abs(w.coeffs[0]) > _NORMALIZED_TOL:
        raise ValueError("compose_schwarz requires w(0) = 0")
    n = min(h.order, w.order)
    wc = w.coeffs[: n + 1]
    acc = np.zeros(n + 1, dtype=complex)
    acc[0] = h.coeffs[n]
    for c in h.coeffs[:n][::-1]:
        acc = np.convolve(acc, wc)[: n + 1]
        acc[0] += c
    return TruncatedSeries(acc)


def coeffs_by_circle_sampling(
    eval_fn: Callable,
    order: int,
    radius: float,
    samples: int | None = None,
) -> TruncatedSeries:
    """Recover Taylor coefficients of an analytic function by circle sampling.

    Discrete Fourier extraction: c_k ~ r**(-k) * mean over M samples of
    eval(r e^{i theta_j}) e^{-ik theta_j}, with M >= 4*(order+1).  This is
    an oracle for cross-checking closed-form coefficients; accuracy
    degrades gracefully and callers assert their own tolerances.
    """
    if not 0.0 < radius < 1.0:
        raise ValueError("sampling radius must lie in (0, 1)")
    m = 4 * (order + 1) if samples is None else samples
    if m < 4 * (order + 1):
        raise ValueError("need at least 4*(order+1) samples")
    theta = 2.0 * np.pi * np.arange(m) / m
    grid = radius * np.exp(1j * theta)
    try:
        vals = np.asarray(eval_fn(grid), dtype=complex)
        if vals.shape != grid.shape:
            raise TypeError
    except (TypeError, ValueError):
        vals = np.array([eval_fn(z) for z in grid], dtype=complex)
    coeffs = np.fft.fft(vals)[: order + 1] / m
    coeffs *= radius ** -np.arange(order + 1)
    return TruncatedSeries(coeffs)
