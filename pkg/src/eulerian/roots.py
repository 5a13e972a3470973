"""Exact real-root counting, isolation and interlacing.

Everything here works over the rationals; no floating point value takes part
in any decision.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .poly import IntPoly, RatPoly, derivative, gcd_monic

__all__ = [
    "SturmChain",
    "IsolatingInterval",
    "sturm_chain",
    "squarefree_part",
    "squarefree_decomposition",
    "cauchy_bound",
    "count_real_roots",
    "is_real_rooted",
    "isolate_roots",
    "refine",
    "interlaces",
    "compatible_pair_cert",
    "compatible_sample_check",
]

INF = math.inf


def _rat(f) -> RatPoly:
    return f.to_rat() if isinstance(f, IntPoly) else f


def _nonzero(f) -> RatPoly:
    f = _rat(f)
    if f.is_zero():
        raise ValueError("the zero polynomial has no isolated roots")
    return f


def _primitive(f: RatPoly) -> tuple:
    """Positive integer multiple of ``f`` with coprime integer coefficients."""
    den = 1
    for c in f.coeffs:
        den = den * c.denominator // math.gcd(den, c.denominator)
    ints = [int(c * den) for c in f.coeffs]
    g = 0
    for c in ints:
        g = math.gcd(g, c)
    return tuple(c // g for c in ints) if g > 1 else tuple(ints)


def _sign_at(ints: tuple, x) -> int:
    """Sign of the polynomial with integer coefficients ``ints`` at ``x``."""
    if x == INF:
        v = ints[-1]
    elif x == -INF:
        v = ints[-1] * (-1) ** (len(ints) - 1)
    else:
        x = Fraction(x)
        p, q = x.numerator, x.denominator
        # q^d f(p/q) by homogeneous Horner
        v = ints[-1]
        qk = 1
        for c in reversed(ints[:-1]):
            qk *= q
            v = v * p + c * qk
    return (v > 0) - (v < 0)


@dataclass(frozen=True)
class SturmChain:
    polys: tuple

    def __post_init__(self):
        object.__setattr__(self, "_ints", tuple(_primitive(p) for p in self.polys))

    def variations(self, x) -> int:
        """Sign changes of the chain at ``x`` (zeros skipped); ``x`` may be +-inf."""
        prev = 0
        changes = 0
        for ints in self._ints:
            s = _sign_at(ints, x)
            if s:
                if prev and s != prev:
                    changes += 1
                prev = s
        return changes


def sturm_chain(f) -> SturmChain:
    """``f, f', -rem(f, f'), ...`` up to the last nonzero remainder."""
    f = _nonzero(f)
    chain = [f, derivative(f)]
    while chain[-1]:
        chain.append(-(chain[-2] % chain[-1]))
    return SturmChain(tuple(chain[:-1]))


def squarefree_part(f) -> RatPoly:
    """Monic polynomial with the same distinct roots as ``f``, all simple."""
    f = _nonzero(f)
    if f.degree() == 0:
        return RatPoly([1])
    return (f // gcd_monic(f, derivative(f))).monic()


def squarefree_decomposition(f) -> list:
    """Yun's algorithm: ``[(a_i, i)]`` with ``f = lc * prod a_i^i``, ``a_i`` monic, coprime."""
    f = _nonzero(f).monic()
    out = []
    if f.degree() == 0:
        return out
    df = derivative(f)
    a = gcd_monic(f, df)
    b = f // a
    c = df // a
    d = c - derivative(b)
    i = 1
    while b.degree() > 0:
        a = gcd_monic(b, d)
        b = b // a
        c = d // a
        if a.degree() > 0:
            out.append((a, i))
        d = c - derivative(b)
        i += 1
    return out


def cauchy_bound(f) -> Fraction:
    """Every complex root of ``f`` has absolute value below this bound."""
    f = _nonzero(f)
    lc = abs(f.leading())
    return 1 + max((abs(c) / lc for c in f.coeffs[:-1]), default=Fraction(0))


def count_real_roots(f, lo=-INF, hi=INF) -> int:
    """Number of distinct real roots in ``(lo, hi]``.

    Sturm's theorem on the squarefree part; an endpoint that is itself a root
    needs no special handling because the squarefree chain's variation count
    is right-continuous at a root.
    """
    if lo is None:
        lo = -INF
    if hi is None:
        hi = INF
    if not lo < hi:
        if lo == hi:
            return 0
        raise ValueError(f"empty interval ({lo}, {hi}]")
    s = squarefree_part(f)
    if s.degree() == 0:
        return 0
    chain = sturm_chain(s)
    return chain.variations(lo) - chain.variations(hi)


def is_real_rooted(f) -> bool:
    s = squarefree_part(f)
    return count_real_roots(s) == s.degree()


@dataclass(frozen=True)
class IsolatingInterval:
    """``(lo, hi]`` holding exactly one distinct root, or the exact root ``lo == hi``."""

    lo: Fraction
    hi: Fraction
    multiplicity: int = 1

    @property
    def is_exact(self) -> bool:
        return self.lo == self.hi

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    def contains(self, x) -> bool:
        return x == self.lo if self.is_exact else self.lo < x <= self.hi


def _isolate_simple(s: RatPoly) -> list:
    """Isolating ``(lo, hi)`` pairs for a squarefree ``s``, ascending."""
    if s.degree() <= 0:
        return []
    chain = sturm_chain(s)
    B = cauchy_bound(s)
    out = []
    stack = [(-B, B, chain.variations(-B), chain.variations(B))]
    while stack:
        lo, hi, vlo, vhi = stack.pop()
        k = vlo - vhi
        if k == 0:
            continue
        if k == 1:
            out.append((hi, hi) if _sign_at(chain._ints[0], hi) == 0 else (lo, hi))
            continue
        mid = (lo + hi) / 2
        vmid = chain.variations(mid)
        stack.append((lo, mid, vlo, vmid))
        stack.append((mid, hi, vmid, vhi))
    return sorted(out)


def _factor_chains(f) -> list:
    """Squarefree factors of ``f`` with their Sturm chains and multiplicities."""
    return [(sturm_chain(a), i) for a, i in squarefree_decomposition(f)]


def _multiplicity_in(factors: list, lo: Fraction, hi: Fraction) -> int:
    for chain, i in factors:
        if lo == hi:
            if _sign_at(chain._ints[0], lo) == 0:
                return i
        elif chain.variations(lo) - chain.variations(hi) == 1:
            return i
    return 0


def isolate_roots(f) -> list:
    """Sorted isolating intervals for the distinct real roots of ``f``."""
    f = _nonzero(f)
    factors = _factor_chains(f)
    return [IsolatingInterval(lo, hi, _multiplicity_in(factors, lo, hi))
            for lo, hi in _isolate_simple(squarefree_part(f))]


def refine(interval: IsolatingInterval, f, width) -> IsolatingInterval:
    """Bisect ``interval`` until it is narrower than ``width``."""
    if interval.is_exact:
        return interval
    s = squarefree_part(f)
    chain = sturm_chain(s)
    lo, hi = interval.lo, interval.hi
    if chain.variations(lo) - chain.variations(hi) != 1:
        raise ValueError("interval does not isolate a root of f")
    width = Fraction(width)
    while hi - lo >= width:
        mid = (lo + hi) / 2
        if s(mid) == 0:
            return IsolatingInterval(mid, mid, interval.multiplicity)
        if chain.variations(lo) - chain.variations(mid) == 1:
            hi = mid
        else:
            lo = mid
    return IsolatingInterval(lo, hi, interval.multiplicity)


def _descending_positions(mults: Sequence[int]) -> list:
    """Expand per-root multiplicities into root positions, largest root first."""
    out = []
    for pos in range(len(mults) - 1, -1, -1):
        out.extend([pos] * mults[pos])
    return out


def interlaces(f, g) -> bool:
    """Whether ``f`` interlaces ``g``: ``... <= a_2 <= b_2 <= a_1 <= b_1``.

    ``a_i`` are the roots of ``f`` and ``b_i`` those of ``g``, in decreasing
    order and counted with multiplicity.  Requires ``deg f <= deg g <= deg f + 1``.
    """
    f, g = _nonzero(f), _nonzero(g)
    df, dg = f.degree(), g.degree()
    if not df <= dg <= df + 1:
        return False
    if not (is_real_rooted(f) and is_real_rooted(g)):
        return False
    if df == 0:
        return True
    sf, sg = squarefree_part(f), squarefree_part(g)
    # Distinct roots of f*g; shared roots come from the gcd once.
    s = (sf * sg // gcd_monic(sf, sg)).monic()
    intervals = _isolate_simple(s)
    ff, gf = _factor_chains(f), _factor_chains(g)
    alpha = _descending_positions([_multiplicity_in(ff, lo, hi) for lo, hi in intervals])
    beta = _descending_positions([_multiplicity_in(gf, lo, hi) for lo, hi in intervals])
    if len(alpha) != df or len(beta) != dg:
        raise AssertionError("root multiplicities do not account for the degrees")
    for i, a in enumerate(alpha):
        if a > beta[i]:
            return False
        if i + 1 < len(beta) and beta[i + 1] > a:
            return False
    return True


def compatible_pair_cert(f, g) -> bool:
    """Certify that ``f, g`` and ``t f, g`` are both compatible pairs.

    For polynomials with nonnegative coefficients these two properties
    together are equivalent to ``f`` interlacing ``g``.
    """
    for p in (f, g):
        if any(c < 0 for c in p):
            raise ValueError(f"{p} has a negative coefficient")
    return interlaces(f, g)


def compatible_sample_check(polys: Sequence, trials: int, seed: Optional[int] = 0,
                            signed: bool = False, denominator: int = 20) -> bool:
    """Randomized search for a non-real-rooted combination ``sum c_i f_i``.

    Coefficients are random rationals ``p/q`` with ``0 <= p, 1 <= q <= denominator``,
    with random signs when ``signed``.  Returns False as soon as a combination
    with a non-real root is found.  Passing is evidence, not proof.
    """
    if not polys:
        raise ValueError("need at least one polynomial")
    rng = random.Random(seed)
    polys = [_rat(p) for p in polys]
    for _ in range(trials):
        combo = RatPoly()
        for p in polys:
            c = Fraction(rng.randint(0, denominator), rng.randint(1, denominator))
            if signed and rng.random() < 0.5:
                c = -c
            combo = combo + p * c
        if combo.is_zero():
            continue
        if not is_real_rooted(combo):
            return False
    return True
