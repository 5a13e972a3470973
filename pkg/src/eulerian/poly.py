"""Dense univariate polynomials with exact integer or rational coefficients.

Coefficient ``i`` of a polynomial is the coefficient of ``t**i``.  Both
classes keep a canonical trimmed form: no trailing zero coefficients, and the
zero polynomial is the empty tuple.
"""

from __future__ import annotations

import math
from fractions import Fraction
from numbers import Rational
from typing import Iterable, Sequence, Union

__all__ = [
    "poly_sum",
    "NEG_INF",
    "IntPoly",
    "RatPoly",
    "add",
    "mul",
    "linear_pow",
    "reverse",
    "derivative",
    "binomial",
    "is_palindromic",
    "eval_rational",
    "gcd_monic",
]

NEG_INF = float("-inf")

Scalar = Union[int, Fraction]


def _trim(coeffs: list) -> tuple:
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


class _DensePoly:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        self.coeffs = _trim([self._convert(c) for c in coeffs])

    @staticmethod
    def _convert(c):
        raise NotImplementedError

    @classmethod
    def _raw(cls, coeffs: tuple):
        # Caller guarantees converted, trimmed coefficients.
        p = object.__new__(cls)
        p.coeffs = coeffs
        return p

    @classmethod
    def monomial(cls, k: int, c: Scalar = 1):
        return cls([0] * k + [c])

    def degree(self):
        """Degree, or ``NEG_INF`` for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    def is_zero(self) -> bool:
        return not self.coeffs

    def leading(self):
        return self.coeffs[-1] if self.coeffs else 0

    def __getitem__(self, i: int):
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return 0

    def __len__(self) -> int:
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, _DensePoly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == _trim([other])
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"{type(self).__name__}({list(self.coeffs)!r})"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if i == 0:
                terms.append(f"{c}")
            elif c == 1:
                terms.append("t" if i == 1 else f"t^{i}")
            else:
                terms.append(f"{c}*t" if i == 1 else f"{c}*t^{i}")
        return " + ".join(terms)

    def _coerce_pair(self, other):
        if isinstance(other, Fraction):
            other = RatPoly([other])
        elif isinstance(other, int):
            other = type(self)([other])
        if not isinstance(other, _DensePoly):
            return None, None
        cls = RatPoly if isinstance(self, RatPoly) or isinstance(other, RatPoly) else IntPoly
        return cls, other

    def __add__(self, other):
        cls, other = self._coerce_pair(other)
        if cls is None:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return cls._raw(_trim([cls._convert(c) for c in out]))

    __radd__ = __add__

    def __neg__(self):
        return type(self)._raw(tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        cls, other = self._coerce_pair(other)
        if cls is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        cls, other = self._coerce_pair(other)
        if cls is None:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return cls._raw(())
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x == 0:
                continue
            for j, y in enumerate(b):
                out[i + j] += x * y
        return cls._raw(_trim([cls._convert(c) for c in out]))

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative exponent")
        result = type(self)([1])
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def shift(self, k: int):
        """Multiply by ``t**k``."""
        if not self.coeffs:
            return self
        return type(self)._raw((self._convert(0),) * k + self.coeffs)

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def to_rat(self) -> "RatPoly":
        return RatPoly._raw(tuple(Fraction(c) for c in self.coeffs))


class IntPoly(_DensePoly):
    """Polynomial in ``t`` with arbitrary-precision integer coefficients."""

    __slots__ = ()

    @staticmethod
    def _convert(c) -> int:
        if isinstance(c, bool) or not isinstance(c, Rational):
            raise TypeError(f"integer coefficient expected, got {c!r}")
        if c.denominator != 1:
            raise ValueError(f"non-integral coefficient {c}")
        return int(c)

    def exact_div_scalar(self, d: int) -> "IntPoly":
        """Divide every coefficient by ``d``; raise if any is not divisible."""
        out = []
        for c in self.coeffs:
            q, r = divmod(c, d)
            if r:
                raise ArithmeticError(f"coefficient {c} not divisible by {d}")
            out.append(q)
        return IntPoly._raw(tuple(out))


class RatPoly(_DensePoly):
    """Polynomial in ``t`` with exact rational coefficients."""

    __slots__ = ()

    @staticmethod
    def _convert(c) -> Fraction:
        if isinstance(c, bool) or not isinstance(c, Rational):
            raise TypeError(f"rational coefficient expected, got {c!r}")
        return Fraction(c)

    def monic(self) -> "RatPoly":
        if not self.coeffs:
            raise ZeroDivisionError("zero polynomial has no monic form")
        lc = self.coeffs[-1]
        return RatPoly._raw(tuple(c / lc for c in self.coeffs))

    def __divmod__(self, other):
        if isinstance(other, IntPoly):
            other = other.to_rat()
        if not isinstance(other, RatPoly):
            return NotImplemented
        if not other.coeffs:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dg = len(other.coeffs) - 1
        lc = other.coeffs[-1]
        if len(rem) - 1 < dg:
            return RatPoly._raw(()), self
        quot = [Fraction(0)] * (len(rem) - dg)
        for i in range(len(rem) - 1, dg - 1, -1):
            c = rem[i] / lc
            if c == 0:
                continue
            quot[i - dg] = c
            for j, d in enumerate(other.coeffs):
                rem[i - dg + j] -= c * d
        return RatPoly._raw(_trim(quot)), RatPoly._raw(_trim(rem[:dg]))

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]


def add(f: _DensePoly, g: _DensePoly) -> _DensePoly:
    return f + g


def mul(f: _DensePoly, g: _DensePoly) -> _DensePoly:
    return f * g


def linear_pow(k: int) -> IntPoly:
    """Expanded ``(t - 1)**k``."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    return IntPoly._raw(tuple(math.comb(k, i) * (-1) ** (k - i) for i in range(k + 1)))


def reverse(f: _DensePoly, n: int) -> _DensePoly:
    """Return ``t**n * f(1/t)``.

    ``n`` is the target degree and may exceed ``deg f``; in that case the
    result is divisible by a power of ``t``.
    """
    if n < 0 or f.degree() > n:
        raise ValueError(f"reverse degree {n} is below deg f = {f.degree()}")
    if not f.coeffs:
        return f
    padded = list(f.coeffs) + [f._convert(0)] * (n + 1 - len(f.coeffs))
    return type(f)._raw(_trim(padded[::-1]))


def derivative(f: _DensePoly) -> _DensePoly:
    return type(f)._raw(_trim([i * c for i, c in enumerate(f.coeffs)][1:]))


def binomial(n: int, k: int) -> int:
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


def is_palindromic(f: _DensePoly, n: int) -> bool:
    return reverse(f, n) == f


def eval_rational(f: _DensePoly, x0: Scalar) -> Fraction:
    """Exact Horner evaluation at a rational point."""
    return Fraction(f(Fraction(x0)))


def gcd_monic(f: _DensePoly, g: _DensePoly) -> RatPoly:
    """Monic gcd of ``f`` and ``g`` by the Euclidean algorithm over Q."""
    a = f.to_rat() if isinstance(f, IntPoly) else f
    b = g.to_rat() if isinstance(g, IntPoly) else g
    if a.is_zero() and b.is_zero():
        raise ValueError("gcd of two zero polynomials is undefined")
    while b:
        a, b = b, a % b
    return a.monic()


def poly_sum(polys: Sequence[_DensePoly]) -> IntPoly:
    acc = IntPoly()
    for p in polys:
        acc = acc + p
    return acc
