"""Eulerian polynomials of types A, B and D and their refinements.

Every family is available both by exhaustive enumeration (through
:mod:`eulerian.enumeration`) and by recurrence.  Recurrences memoize lower
indices; enumeration never does, since it serves as the independent check.

Base cases shared by all recurrences: ``A_0 = B_0 = D_0 = 1`` and
``D_1 = 1`` (D_1 contains only the identity and has no type D descents).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from functools import lru_cache
from math import factorial

from . import enumeration as en
from .perms import Kind
from .poly import IntPoly, binomial, derivative, linear_pow, reverse

__all__ = [
    "Method",
    "EulerianTable",
    "eulerian_enum",
    "eulerian_A_rec",
    "p_poly",
    "eulerian_B_rec",
    "q_poly",
    "eulerian_D_rec",
    "eulerian_A_deriv_rec",
    "eulerian_B_deriv_rec",
    "eulerian_D_unpleasant",
    "b_upper_j",
    "verify_bjk_recurrence",
    "t_refined",
    "b_refined",
    "half_sums_check",
    "half_sum_identity",
    "refined_family",
    "plus_minus_split",
    "eulerian",
    "build_table",
]

ONE = IntPoly([1])


class Method(enum.Enum):
    ENUM = "enum"
    RECURRENCE = "recurrence"
    DERIVATIVE_REC = "deriv"
    UNPLEASANT = "unpleasant"


@dataclass
class EulerianTable:
    kind: Kind
    method: Method
    entries: dict = field(default_factory=dict)

    def check(self) -> None:
        for n, poly in self.entries.items():
            if poly.degree() > n or any(c < 0 for c in poly):
                raise AssertionError(f"{self.kind.value}_{n} = {poly} is malformed")
            if poly(1) != _group_order(self.kind, n):
                raise AssertionError(f"{self.kind.value}_{n}(1) = {poly(1)}")


def _group_order(kind: Kind, n: int) -> int:
    if kind is Kind.PLAIN:
        return factorial(n)
    if kind is Kind.SIGNED:
        return 2 ** n * factorial(n)
    return 2 ** max(n - 1, 0) * factorial(n)


def eulerian_enum(kind, n: int, workers: int = 1) -> IntPoly:
    """Descent generating polynomial of S_n, B_n or D_n by enumeration."""
    return en.descent_distribution(kind, n, workers=workers)


def _euler_sum(table, n: int) -> IntPoly:
    """``sum_{k<n} table(k) * C(n, k) * (t - 1)^(n-k-1)``."""
    acc = IntPoly()
    for k in range(n):
        acc = acc + table(k) * linear_pow(n - k - 1) * binomial(n, k)
    return acc


@lru_cache(maxsize=None)
def eulerian_A_rec(n: int) -> IntPoly:
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n == 0:
        return ONE
    return _euler_sum(eulerian_A_rec, n)


@lru_cache(maxsize=None)
def p_poly(n: int) -> IntPoly:
    """Descent polynomial of ``{w in B_n : w(n) > 0}`` via the B recurrence."""
    if n < 1:
        raise ValueError("p_poly needs n >= 1")
    return _euler_sum(_b_rec, n)


def _b_rec(n: int) -> IntPoly:
    return ONE if n == 0 else eulerian_B_rec(n)


@lru_cache(maxsize=None)
def eulerian_B_rec(n: int) -> IntPoly:
    if n < 1:
        raise ValueError("eulerian_B_rec needs n >= 1")
    p = p_poly(n)
    return p + reverse(p, n)


@lru_cache(maxsize=None)
def q_poly(n: int) -> IntPoly:
    """Descent polynomial of ``{w in D_n : w(n) > 0}`` via the D recurrence."""
    if n < 1:
        raise ValueError("q_poly needs n >= 1")
    return _euler_sum(_d_rec, n)


def _d_rec(n: int) -> IntPoly:
    return ONE if n <= 1 else eulerian_D_rec(n)


@lru_cache(maxsize=None)
def eulerian_D_rec(n: int) -> IntPoly:
    if n < 2:
        raise ValueError(f"the type D recurrence holds for n >= 2, got n = {n}")
    q = q_poly(n)
    return q + reverse(q, n)


@lru_cache(maxsize=None)
def eulerian_A_deriv_rec(n: int) -> IntPoly:
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n == 0:
        return ONE
    prev = eulerian_A_deriv_rec(n - 1)
    return IntPoly([1, n - 1]) * prev + IntPoly([0, 1, -1]) * derivative(prev)


@lru_cache(maxsize=None)
def eulerian_B_deriv_rec(n: int) -> IntPoly:
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n == 0:
        return ONE
    prev = eulerian_B_deriv_rec(n - 1)
    return IntPoly([1, 2 * n - 1]) * prev + IntPoly([0, 2, -2]) * derivative(prev)


def _one_minus_t_pow(e: int) -> IntPoly:
    return linear_pow(e) * (-1) ** e


def _unpleasant_inner(m: int) -> IntPoly:
    """Inner sum over ``j`` for ``m = n - k``.

    At ``j = 0`` the factor ``(1-t)^(-1)`` cancels against the bracket
    ``t - 1``, leaving ``-m! t^m``.
    """
    acc = IntPoly([0] * m + [-factorial(m)])
    for j in range(1, m + 1):
        bracket = IntPoly([-(m - j - 1) ** j, (m - j + 1) ** j])
        term = bracket * _one_minus_t_pow(j - 1) * (factorial(m) // factorial(j))
        acc = acc + term.shift(m - j)
    return acc


@lru_cache(maxsize=None)
def eulerian_D_unpleasant(n: int) -> IntPoly:
    """D_n from the recurrence obtained directly from the type D EGF."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n == 0:
        return ONE
    acc = IntPoly()
    for k in range(n):
        acc = acc + eulerian_D_unpleasant(k) * _unpleasant_inner(n - k) * binomial(n, k)
    return acc


def b_upper_j(n: int, j: int, workers: int = 1) -> IntPoly:
    """Descent polynomial of ``{w in B_n : md_B(w) <= j}`` by enumeration."""
    if n < 1 or j < 0:
        raise ValueError("b_upper_j needs n >= 1 and j >= 0")
    return en.descent_distribution(Kind.SIGNED, n, select=en.MdAtMost(j), workers=workers)


def verify_bjk_recurrence(m: int, j: int) -> bool:
    """Check the ``B^(j)`` recurrence at ``n = m + j + 1``, all terms enumerated."""
    n = m + j + 1
    rhs = IntPoly()
    for k in range(1, j + 2):
        lower = ONE if n - k == 0 else b_upper_j(n - k, j)
        rhs = rhs + lower * linear_pow(k - 1) * binomial(j + 1, k)
    return b_upper_j(n, j) == rhs


def _last_value(n: int, k: int) -> int:
    if not 0 <= k <= 2 * n - 1:
        raise ValueError(f"k = {k} outside [0, {2 * n - 1}]")
    return n - k if k <= n - 1 else n - 1 - k


def t_refined(n: int, k: int) -> IntPoly:
    """Twice the type D descent polynomial over ``{w in D_n : w(n) = v_k}``."""
    if n < 2:
        raise ValueError("t_refined needs n >= 2")
    v = _last_value(n, k)
    return en.descent_distribution(Kind.EVEN_SIGNED, n, select=en.LastEquals(v)) * 2


def b_refined(n: int, k: int) -> IntPoly:
    """Type B descent polynomial over ``{w in B_n : w(n) = v_k}``."""
    if n < 1:
        raise ValueError("b_refined needs n >= 1")
    v = _last_value(n, k)
    return en.descent_distribution(Kind.SIGNED, n, select=en.LastEquals(v))


def plus_minus_split(kind, n: int, workers: int = 1):
    """Descent polynomials over ``{w(n) > 0}`` and ``{w(n) < 0}``."""
    kind = Kind.parse(kind)
    if kind is Kind.PLAIN:
        raise ValueError("plus_minus_split is defined for types B and D")
    if n < (2 if kind is Kind.EVEN_SIGNED else 1):
        raise ValueError(f"n = {n} is below the range for type {kind.value}")
    plus = en.descent_distribution(kind, n, select=en.LastPositive(), workers=workers)
    minus = en.descent_distribution(kind, n, select=en.LastNegative(), workers=workers)
    return plus, minus


def refined_family(kind, n: int) -> list:
    """``[T_{n,k}]`` (type D) or ``[B_{n,k}]`` (type B) for ``k = 0..2n-1``."""
    kind = Kind.parse(kind)
    if kind is Kind.EVEN_SIGNED:
        return [t_refined(n, k) for k in range(2 * n)]
    if kind is Kind.SIGNED:
        return [b_refined(n, k) for k in range(2 * n)]
    raise ValueError("refined families exist for types B and D")


def half_sum_identity(kind, n: int, family: list | None = None) -> bool:
    """Low and high halves of the refined family sum to P_n (Q_n) and its reverse.

    The type D family carries a factor 2, removed by exact division; an odd
    coefficient makes the check fail.
    """
    kind = Kind.parse(kind)
    fam = refined_family(kind, n) if family is None else family
    low, high = sum(fam[:n], IntPoly()), sum(fam[n:], IntPoly())
    if kind is Kind.EVEN_SIGNED:
        try:
            low, high = low.exact_div_scalar(2), high.exact_div_scalar(2)
        except ArithmeticError:
            return False
        base = q_poly(n)
    else:
        base = p_poly(n)
    return low == base and high == reverse(base, n)


def half_sums_check(n: int) -> bool:
    """Half-sum identities for both the T_{n,k} and the B_{n,k} families."""
    if n < 2:
        raise ValueError("half_sums_check needs n >= 2")
    return half_sum_identity(Kind.EVEN_SIGNED, n) and half_sum_identity(Kind.SIGNED, n)


def eulerian(kind, n: int, method=Method.RECURRENCE, workers: int = 1) -> IntPoly:
    """Dispatch by kind and method."""
    kind = Kind.parse(kind)
    method = Method(method)
    if method is Method.ENUM:
        return eulerian_enum(kind, n, workers=workers)
    if method is Method.RECURRENCE:
        if kind is Kind.PLAIN:
            return eulerian_A_rec(n)
        if kind is Kind.SIGNED:
            return _b_rec(n)
        return eulerian_D_rec(n)
    if method is Method.DERIVATIVE_REC:
        if kind is Kind.PLAIN:
            return eulerian_A_deriv_rec(n)
        if kind is Kind.SIGNED:
            return eulerian_B_deriv_rec(n)
        raise ValueError("no derivative recurrence is implemented for type D")
    if kind is not Kind.EVEN_SIGNED:
        raise ValueError("the unpleasant formula is a type D recurrence")
    return eulerian_D_unpleasant(n)


def build_table(kind, method, ns, workers: int = 1, check: bool = True) -> EulerianTable:
    kind = Kind.parse(kind)
    table = EulerianTable(kind, Method(method))
    for n in ns:
        table.entries[n] = eulerian(kind, n, method, workers=workers)
    if check:
        table.check()
    return table
