"""Exhaustive enumeration engine for descent distributions.

Every group element is materialized as a row of a window matrix and its
descent number is computed individually; numpy only batches the work.  The
group is split into slices by first window letter (see
:func:`eulerian.perms.first_letters`) and slices may be processed by a pool of
worker processes.  Partial results are merged by coefficientwise addition in
slice order, so the output does not depend on the worker count.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from itertools import permutations
from typing import Callable, Iterator, Optional

import numpy as np

from .perms import Kind, des_B, des_D, des_A, first_letters, iter_group
from .poly import IntPoly

__all__ = [
    "iter_window_batches",
    "descent_stats",
    "descent_distribution",
    "superset_counts",
    "LastPositive",
    "LastNegative",
    "LastEquals",
    "MdAtMost",
]

# Upper bound on rows materialized at once.
BATCH_ROWS = 1 << 20

Selector = Callable[[np.ndarray], np.ndarray]


class LastPositive:
    def __call__(self, W: np.ndarray) -> np.ndarray:
        return W[:, -1] > 0


class LastNegative:
    def __call__(self, W: np.ndarray) -> np.ndarray:
        return W[:, -1] < 0


class LastEquals:
    def __init__(self, value: int):
        self.value = value

    def __call__(self, W: np.ndarray) -> np.ndarray:
        return W[:, -1] == self.value


class MdAtMost:
    """Rows whose ``md_B`` statistic is at most ``j``."""

    def __init__(self, j: int):
        self.j = j

    def __call__(self, W: np.ndarray) -> np.ndarray:
        pos = np.arange(1, W.shape[1] + 1, dtype=np.int16)
        vals = np.where(W > 0, pos - W, pos)
        return vals.max(axis=1) <= self.j


def _sign_rows(n: int, kind: Kind, first_sign: int) -> np.ndarray:
    """All sign vectors (entries +-1) with the given first sign."""
    if kind is Kind.PLAIN:
        return np.ones((1, n), dtype=np.int16)
    bits = (np.arange(1 << (n - 1))[:, None] >> np.arange(n - 1)[None, :]) & 1
    rest = 1 - 2 * bits
    first = np.full((rest.shape[0], 1), first_sign)
    signs = np.hstack([first, rest]).astype(np.int16)
    if kind is Kind.EVEN_SIGNED:
        signs = signs[(signs < 0).sum(axis=1) % 2 == 0]
    return signs


def iter_window_batches(kind, n: int, first: int) -> Iterator[np.ndarray]:
    """Window matrices covering the slice of the group starting with ``first``."""
    kind = Kind.parse(kind)
    a = abs(first)
    rest = [v for v in range(1, n + 1) if v != a]
    tails = np.array(list(permutations(rest)), dtype=np.int16).reshape(-1, n - 1)
    absolute = np.hstack([np.full((tails.shape[0], 1), a, dtype=np.int16), tails])
    signs = _sign_rows(n, kind, 1 if first > 0 else -1)
    step = max(1, BATCH_ROWS // absolute.shape[0])
    for s in range(0, signs.shape[0], step):
        chunk = signs[s: s + step]
        W = absolute[None, :, :] * chunk[:, None, :]
        yield W.reshape(-1, n)


def descent_stats(kind, W: np.ndarray) -> np.ndarray:
    """Descent number of every row of a window matrix."""
    kind = Kind.parse(kind)
    n = W.shape[1]
    d = (W[:, :-1] > W[:, 1:]).sum(axis=1)
    if kind is Kind.SIGNED:
        d = d + (W[:, 0] < 0)
    elif kind is Kind.EVEN_SIGNED and n >= 2:
        d = d + (W[:, 0] + W[:, 1] < 0)
    return d


def descent_masks(kind, W: np.ndarray) -> np.ndarray:
    """Descent set of every row, encoded with bit ``i`` for position ``i``."""
    kind = Kind.parse(kind)
    n = W.shape[1]
    weights = (1 << np.arange(1, n, dtype=np.int64))
    m = ((W[:, :-1] > W[:, 1:]) * weights).sum(axis=1)
    if kind is Kind.SIGNED:
        m = m + (W[:, 0] < 0)
    elif kind is Kind.EVEN_SIGNED and n >= 2:
        m = m + (W[:, 0] + W[:, 1] < 0)
    return m


def _slice_task(args):
    kind, n, first, select = args
    counts = np.zeros(n + 2, dtype=np.int64)
    touched = 0
    for W in iter_window_batches(kind, n, first):
        touched += W.shape[0]
        if select is not None:
            W = W[select(W)]
        counts += np.bincount(descent_stats(kind, W), minlength=n + 2)
    return [int(c) for c in counts], touched


def _small_case(kind: Kind, n: int, select: Optional[Selector]):
    des = {Kind.PLAIN: des_A, Kind.SIGNED: des_B, Kind.EVEN_SIGNED: des_D}[kind]
    counts = [0] * (n + 2)
    touched = 0
    for pi in iter_group(kind, n):
        touched += 1
        if select is not None:
            W = np.array([pi.window], dtype=np.int16).reshape(1, n)
            if n == 0 or not select(W)[0]:
                continue
        counts[des(pi)] += 1
    return counts, touched


def descent_distribution(kind, n: int, select: Optional[Selector] = None,
                         workers: int = 1, return_touched: bool = False):
    """Generating polynomial of the descent number over the whole group.

    ``select`` restricts the sum to rows for which it returns True; it must be
    picklable when ``workers > 1``.  With ``return_touched`` the number of
    group elements visited is returned as well.
    """
    kind = Kind.parse(kind)
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n <= 1:
        counts, touched = _small_case(kind, n, select)
    else:
        tasks = [(kind, n, f, select) for f in first_letters(kind, n)]
        if workers > 1:
            with ProcessPoolExecutor(max_workers=workers) as pool:
                results = list(pool.map(_slice_task, tasks))
        else:
            results = [_slice_task(t) for t in tasks]
        counts = [0] * (n + 2)
        touched = 0
        for part, seen in results:
            touched += seen
            counts = [a + b for a, b in zip(counts, part)]
    poly = IntPoly(counts)
    return (poly, touched) if return_touched else poly


def superset_counts(kind, n: int, positive_last: bool = False) -> dict:
    """``|U(S)|`` for every ``S`` in ``[0, n-1]``, keyed by bitmask of ``S``.

    ``U`` is the group, or the elements with positive last letter.
    """
    kind = Kind.parse(kind)
    exact = np.zeros(1 << max(n, 0), dtype=np.int64)
    if n <= 1:
        for pi in iter_group(kind, n):
            if positive_last and (n == 0 or pi.window[-1] < 0):
                continue
            mask = 1 if (kind is Kind.SIGNED and n == 1 and pi.window[0] < 0) else 0
            exact[mask] += 1
    else:
        for first in first_letters(kind, n):
            for W in iter_window_batches(kind, n, first):
                if positive_last:
                    W = W[W[:, -1] > 0]
                exact += np.bincount(descent_masks(kind, W), minlength=exact.size)
    # Superset (zeta) transform over the subset lattice.
    total = exact.copy()
    for bit in range(n):
        b = 1 << bit
        for m in range(total.size):
            if not m & b:
                total[m] += total[m | b]
    return {m: int(c) for m, c in enumerate(total)}
