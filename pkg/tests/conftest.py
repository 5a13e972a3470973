"""Shared brute-force oracles.

These deliberately avoid the package: groups come from itertools, descents
from the textbook definitions, polynomials are plain coefficient lists.
"""

from __future__ import annotations

from itertools import permutations, product

import pytest


def brute_group(kind: str, n: int):
    out = []
    for perm in permutations(range(1, n + 1)):
        if kind == "A":
            out.append(perm)
            continue
        for signs in product((1, -1), repeat=n):
            w = tuple(s * x for s, x in zip(signs, perm))
            if kind == "D" and sum(1 for x in w if x < 0) % 2:
                continue
            out.append(w)
    return out


def brute_des(kind: str, w) -> int:
    n = len(w)
    d = sum(1 for i in range(n - 1) if w[i] > w[i + 1])
    if kind == "B" and n >= 1 and w[0] < 0:
        d += 1
    if kind == "D" and n >= 2 and w[0] + w[1] < 0:
        d += 1
    return d


def brute_poly(kind: str, n: int, pred=None) -> list:
    counts = [0] * (n + 1)
    for w in brute_group(kind, n):
        if pred is None or pred(w):
            counts[brute_des(kind, w)] += 1
    while counts and counts[-1] == 0:
        counts.pop()
    return counts


@pytest.fixture
def oracle():
    class Oracle:
        group = staticmethod(brute_group)
        des = staticmethod(brute_des)
        poly = staticmethod(brute_poly)

    return Oracle


# One line per acceptance criterion, printed at the end of the session.
ACCEPTANCE_LINES: dict = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(ACCEPTANCE_LINES):
        terminalreporter.write_line(ACCEPTANCE_LINES[num])
