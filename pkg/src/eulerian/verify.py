"""Named identity checks, each run for a single ``n``.

Every target compares two independently computed sides exactly.  Targets
are registered in :data:`TARGETS` and driven by ``eulerian verify``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from . import enumeration as en
from .families import (
    b_upper_j,
    eulerian_A_deriv_rec,
    eulerian_A_rec,
    eulerian_B_deriv_rec,
    eulerian_B_rec,
    eulerian_D_rec,
    eulerian_D_unpleasant,
    eulerian_enum,
    half_sums_check,
    p_poly,
    plus_minus_split,
    q_poly,
    verify_bjk_recurrence,
)
from .perms import (
    Kind,
    all_subsets,
    des_set_D,
    iter_group,
    psi,
    psi_inv,
    r_stat,
)
from .poly import IntPoly, binomial, reverse
from .series import egf_B_rhs, egf_D_rhs, egf_numbers, worpitzky_B_check

__all__ = ["Target", "TARGETS", "lemma_d0_check", "expansion_check", "run_target"]


@dataclass(frozen=True)
class Target:
    name: str
    statement: str
    n_min: int
    check: Callable[[int], bool]


def _thm_b(n: int) -> bool:
    return eulerian_B_rec(n) == eulerian_enum(Kind.SIGNED, n)


def _thm_d(n: int) -> bool:
    return eulerian_D_rec(n) == eulerian_enum(Kind.EVEN_SIGNED, n)


def _a_rec(n: int) -> bool:
    return eulerian_A_rec(n) == eulerian_enum(Kind.PLAIN, n)


def _deriv(n: int) -> bool:
    return (eulerian_A_deriv_rec(n) == eulerian_enum(Kind.PLAIN, n)
            and eulerian_B_deriv_rec(n) == eulerian_enum(Kind.SIGNED, n))


def _egf(rhs, kind: Kind) -> Callable[[int], bool]:
    def check(n: int) -> bool:
        return egf_numbers(rhs(n))[n] == eulerian_enum(kind, n)
    return check


def _worpitzky(n: int) -> bool:
    return worpitzky_B_check(n, 20)


def _lem_b1(n: int) -> bool:
    p = p_poly(n)
    plus, _ = plus_minus_split(Kind.SIGNED, n)
    return b_upper_j(n, n - 1) == p and plus == p


def _lem_b2(n: int) -> bool:
    plus, minus = plus_minus_split(Kind.SIGNED, n)
    return minus == reverse(plus, n) == reverse(p_poly(n), n)


def _shift_by_one(f: IntPoly) -> IntPoly:
    """``f(t + 1)``."""
    acc = IntPoly()
    for k, c in enumerate(f):
        acc = acc + IntPoly([1, 1]) ** k * c
    return acc


def expansion_check(n: int) -> bool:
    """``sum_{U} (t+1)^des = sum_S t^|S| |U(S)|`` for ``U = D_n^+``."""
    plus = en.descent_distribution(Kind.EVEN_SIGNED, n, select=en.LastPositive())
    counts = en.superset_counts(Kind.EVEN_SIGNED, n, positive_last=True)
    rhs = [0] * (n + 1)
    for mask, c in counts.items():
        rhs[bin(mask).count("1")] += c
    return _shift_by_one(plus) == IntPoly(rhs)


def _lem_d1(n: int) -> bool:
    plus = en.descent_distribution(Kind.EVEN_SIGNED, n, select=en.LastPositive())
    return plus == q_poly(n) and expansion_check(n)


def _lem_d2(n: int) -> bool:
    plus, minus = plus_minus_split(Kind.EVEN_SIGNED, n)
    return minus == reverse(plus, n) == reverse(q_poly(n), n)


def lemma_d0_check(n: int) -> bool:
    """For every ``S``, ``psi`` is a bijection ``D_n^+(S) -> D_{n-i-1}(T) x C([n], i+1)``.

    Checks that ``psi`` lands in the stated codomain, is injective, is undone
    by ``psi_inv``, and that the domain and codomain have equal size.
    """
    plus = [(pi, des_set_D(pi)) for pi in iter_group(Kind.EVEN_SIGNED, n)
            if pi.window and pi.window[-1] > 0]
    smaller = {}
    for S in all_subsets(n):
        i = r_stat(S, n)
        m = n - i - 1
        domain = [pi for pi, des in plus if des.issuperset(S)]
        if m < 0:
            # S = [0, n-1]: no element of D_n^+ has every descent.
            if domain:
                return False
            continue
        T = S.restrict(0, m - 1, m)
        if T.union(range(n - i, n), n) != S:
            return False
        images = set()
        for pi in domain:
            sigma, X = psi(pi, S)
            if len(X) != i + 1 or not all(1 <= x <= n for x in X):
                return False
            if len(sigma) != m or not des_set_D(sigma).issuperset(T):
                return False
            if psi_inv(sigma, X, n) != pi:
                return False
            images.add((sigma.window, X))
        if len(images) != len(domain):
            return False
        if m not in smaller:
            smaller[m] = en.superset_counts(Kind.EVEN_SIGNED, m)
        if len(domain) != smaller[m][T.mask] * binomial(n, i + 1):
            return False
    return True


def _bjk(n: int) -> bool:
    return all(verify_bjk_recurrence(n - 1 - j, j) for j in range(n))


def _unpleasant(n: int) -> bool:
    return eulerian_D_unpleasant(n) == eulerian_D_rec(n)


TARGETS = {
    t.name: t
    for t in [
        Target("arec", "A_n = sum_k C(n,k) A_k (t-1)^(n-k-1)", 1, _a_rec),
        Target("deriv", "derivative recurrences for A_n and B_n", 1, _deriv),
        Target("thmB", "B_n = P_n + t^n P_n(1/t)", 1, _thm_b),
        Target("thmD", "D_n = Q_n + t^n Q_n(1/t)", 2, _thm_d),
        Target("egfB", "type B exponential generating function", 0, _egf(egf_B_rhs, Kind.SIGNED)),
        Target("egfD", "type D exponential generating function", 0,
               _egf(egf_D_rhs, Kind.EVEN_SIGNED)),
        Target("worpitzky", "B_n/(1-t)^(n+1) = sum_k (2k+1)^n t^k", 0, _worpitzky),
        Target("lemB1", "descents over w(n) > 0 in B_n give P_n", 1, _lem_b1),
        Target("lemB2", "descents over w(n) < 0 in B_n give t^n P_n(1/t)", 1, _lem_b2),
        Target("lemD0", "psi is a bijection onto D_{n-i-1}(T) x C([n], i+1)", 1, lemma_d0_check),
        Target("lemD1", "descents over w(n) > 0 in D_n give Q_n", 1, _lem_d1),
        Target("lemD2", "descents over w(n) < 0 in D_n give t^n Q_n(1/t)", 2, _lem_d2),
        Target("bjk", "recurrence for B^(j)_{m+j+1}", 1, _bjk),
        Target("unpleasant", "EGF-derived type D recurrence", 2, _unpleasant),
        Target("half-sums", "half sums of T_{n,k} and B_{n,k}", 2, half_sums_check),
    ]
}


def run_target(name: str, n_min: int, n_max: int):
    """``[(n, passed)]`` for ``n`` in ``[n_min, n_max]``."""
    target = TARGETS[name]
    if n_min < target.n_min:
        raise ValueError(f"{name}: range starts at {target.n_min}")
    return [(n, bool(target.check(n))) for n in range(n_min, n_max + 1)]
