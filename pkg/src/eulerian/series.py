"""Truncated power series in ``x`` with polynomial coefficients in ``t``.

Coefficients are ordinary (not divided by ``m!``); factorials are applied only
when comparing against Eulerian polynomials.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb, factorial
from typing import Sequence

from .poly import IntPoly, RatPoly

__all__ = [
    "InexactDivisionError",
    "PolySeries",
    "series_mul",
    "series_exp",
    "series_div_exact",
    "egf_B_rhs",
    "egf_D_rhs",
    "egf_numbers",
    "worpitzky_B_check",
    "worpitzky_coefficients",
]

DEFAULT_ORDER = 8


class InexactDivisionError(ArithmeticError):
    """A series quotient step left a nonzero polynomial remainder."""


def _rat(p) -> RatPoly:
    if isinstance(p, RatPoly):
        return p
    if isinstance(p, IntPoly):
        return p.to_rat()
    return RatPoly([p])


class PolySeries:
    """``sum_{m=0}^{M} c_m(t) x^m`` truncated at order ``M``."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Sequence, order: int | None = None):
        cs = [_rat(c) for c in coeffs]
        if order is not None:
            if len(cs) > order + 1:
                cs = cs[: order + 1]
            cs += [RatPoly()] * (order + 1 - len(cs))
        if not cs:
            raise ValueError("a series needs at least the constant coefficient")
        self.coeffs = tuple(cs)

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    @classmethod
    def constant(cls, c, order: int) -> "PolySeries":
        return cls([c], order)

    @classmethod
    def monomial(cls, c, k: int, order: int) -> "PolySeries":
        """``c(t) x^k``."""
        return cls([RatPoly()] * k + [c], order)

    def __getitem__(self, m: int) -> RatPoly:
        return self.coeffs[m]

    def __eq__(self, other) -> bool:
        return isinstance(other, PolySeries) and self.coeffs == other.coeffs

    def __repr__(self) -> str:
        return f"PolySeries({[str(c) for c in self.coeffs]})"

    def _check(self, other: "PolySeries") -> None:
        if self.order != other.order:
            raise ValueError(f"order mismatch: {self.order} vs {other.order}")

    def __add__(self, other: "PolySeries") -> "PolySeries":
        self._check(other)
        return PolySeries([a + b for a, b in zip(self.coeffs, other.coeffs)])

    def __sub__(self, other: "PolySeries") -> "PolySeries":
        self._check(other)
        return PolySeries([a - b for a, b in zip(self.coeffs, other.coeffs)])

    def __neg__(self) -> "PolySeries":
        return PolySeries([-a for a in self.coeffs])

    def __mul__(self, other):
        if isinstance(other, PolySeries):
            return series_mul(self, other)
        return PolySeries([c * other for c in self.coeffs])

    __rmul__ = __mul__

    def egf_coefficient(self, m: int) -> RatPoly:
        """``m! c_m``, the m-th term read as an exponential generating function."""
        return self.coeffs[m] * factorial(m)


def series_mul(a: PolySeries, b: PolySeries) -> PolySeries:
    a._check(b)
    M = a.order
    out = []
    for m in range(M + 1):
        acc = RatPoly()
        for k in range(m + 1):
            if a[k] and b[m - k]:
                acc = acc + a[k] * b[m - k]
        out.append(acc)
    return PolySeries(out)


def series_exp(a: PolySeries) -> PolySeries:
    """``exp(a)`` for ``a`` with zero constant term.

    Uses ``m e_m = sum_{k=1}^{m} k a_k e_{m-k}``, which follows from
    ``(exp a)' = a' exp a``.
    """
    if a[0]:
        raise ValueError("series_exp needs a zero constant term")
    e = [RatPoly([1])]
    for m in range(1, a.order + 1):
        acc = RatPoly()
        for k in range(1, m + 1):
            if a[k]:
                acc = acc + a[k] * e[m - k] * k
        e.append(acc * Fraction(1, m))
    return PolySeries(e)


def series_div_exact(num: PolySeries, den: PolySeries) -> PolySeries:
    """Solve ``F * den = num`` with exact polynomial division at every step.

    ``den[0]`` may be a nonconstant polynomial; every step must divide
    exactly, otherwise :class:`InexactDivisionError` is raised.
    """
    num._check(den)
    d0 = den[0]
    if not d0:
        raise ZeroDivisionError("denominator has zero constant term")
    F = []
    for m in range(num.order + 1):
        rhs = num[m]
        for k in range(m):
            if F[k] and den[m - k]:
                rhs = rhs - F[k] * den[m - k]
        q, r = divmod(rhs, d0)
        if r:
            raise InexactDivisionError(f"order {m}: remainder {r} after dividing by {d0}")
        F.append(q)
    return PolySeries(F)


_ONE_MINUS_T = RatPoly([1, -1])
_T = RatPoly([0, 1])


def _exp_lin(scale: int, M: int) -> PolySeries:
    """``exp(scale * x * (1 - t))`` truncated at order ``M``."""
    return series_exp(PolySeries.monomial(_ONE_MINUS_T * scale, 1, M))


def _b_denominator(M: int) -> PolySeries:
    return PolySeries.constant(1, M) - _exp_lin(2, M) * _T


def egf_B_rhs(M: int = DEFAULT_ORDER) -> PolySeries:
    """``(1-t) exp(x(1-t)) / (1 - t exp(2x(1-t)))`` to order ``M``."""
    if M < 0:
        raise ValueError("order must be nonnegative")
    num = _exp_lin(1, M) * _ONE_MINUS_T
    return series_div_exact(num, _b_denominator(M))


def egf_D_rhs(M: int = DEFAULT_ORDER) -> PolySeries:
    """Type D EGF, numerator ``(1-t) exp(x(1-t)) - x t (1-t) exp(2x(1-t))``."""
    if M < 0:
        raise ValueError("order must be nonnegative")
    x_t_1mt = PolySeries.monomial(_T * _ONE_MINUS_T, 1, M)
    num = _exp_lin(1, M) * _ONE_MINUS_T - x_t_1mt * _exp_lin(2, M)
    return series_div_exact(num, _b_denominator(M))


def egf_numbers(series: PolySeries) -> list:
    """``[m! c_m for m = 0..M]`` as integer polynomials."""
    out = []
    for m in range(series.order + 1):
        c = series.egf_coefficient(m)
        out.append(IntPoly(c.coeffs))
    return out


def worpitzky_coefficients(b_poly: IntPoly, n: int, K: int) -> list:
    """Coefficients ``0..K`` of ``b_poly(t) / (1 - t)^(n+1)`` as a power series."""
    # 1/(1-t)^(n+1) = sum_k C(n+k, n) t^k
    geo = [comb(n + k, n) for k in range(K + 1)]
    return [sum(b_poly[i] * geo[k - i] for i in range(min(k, len(b_poly) - 1) + 1))
            for k in range(K + 1)]


def worpitzky_B_check(n: int, K: int, b_poly: IntPoly | None = None) -> bool:
    """Check that ``B_n(t)/(1-t)^(n+1)`` has coefficients ``(2k+1)^n`` up to ``t^K``.

    ``B_n`` is enumerated unless supplied.
    """
    if n < 0 or K < 0:
        raise ValueError("n and K must be nonnegative")
    if b_poly is None:
        from .families import eulerian_enum

        b_poly = eulerian_enum("B", n)
    return worpitzky_coefficients(b_poly, n, K) == [(2 * k + 1) ** n for k in range(K + 1)]
