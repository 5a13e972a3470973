"""Signed permutations, Coxeter descent statistics, and standardization maps.

Permutations are stored in window notation ``[w(1), ..., w(n)]``.  Three
kinds are supported: plain permutations (type A), signed permutations
(type B) and even signed permutations (type D).

Group iteration is lexicographic on the window, with letters ordered
sign-first: every negative letter precedes every positive letter, and within
a sign letters are ordered by magnitude, i.e. ``-1 < -2 < ... < -n < 1 < ... < n``.
Iteration can be restricted to windows starting with a given letter, which is
how work is split between processes.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator, Optional, Sequence

__all__ = [
    "Kind",
    "SignedPerm",
    "SignedWord",
    "DescentSet",
    "letter_order",
    "first_letters",
    "iter_group",
    "group_order",
    "des_A",
    "des_set_A",
    "des_set_B",
    "des_B",
    "des_set_D",
    "des_D",
    "md_B",
    "st",
    "sst",
    "sst_inv",
    "phi_B",
    "phi_D",
    "r_stat",
    "psi",
    "psi_inv",
    "descent_superset_count",
    "all_subsets",
]


class Kind(enum.Enum):
    """Coxeter type of a permutation group; values are the type letters."""

    PLAIN = "A"
    SIGNED = "B"
    EVEN_SIGNED = "D"

    @classmethod
    def parse(cls, value) -> "Kind":
        if isinstance(value, Kind):
            return value
        for k in cls:
            if value in (k.value, k.name):
                return k
        raise ValueError(f"unknown kind {value!r}")


@dataclass(frozen=True)
class SignedWord:
    """A word of nonzero integers with pairwise distinct absolute values."""

    letters: tuple

    def __post_init__(self):
        letters = tuple(self.letters)
        object.__setattr__(self, "letters", letters)
        if any(x == 0 for x in letters):
            raise ValueError("letters must be nonzero")
        if len({abs(x) for x in letters}) != len(letters):
            raise ValueError(f"absolute values not distinct in {letters}")

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __getitem__(self, i):
        return self.letters[i]


@dataclass(frozen=True)
class SignedPerm:
    """Window ``w(1..n)`` of a (signed) permutation together with its kind."""

    window: tuple
    kind: Kind = Kind.SIGNED

    def __post_init__(self):
        window = tuple(self.window)
        object.__setattr__(self, "window", window)
        n = len(window)
        if sorted(abs(x) for x in window) != list(range(1, n + 1)):
            raise ValueError(f"{window} is not a signed permutation of 1..{n}")
        negatives = sum(1 for x in window if x < 0)
        if self.kind is Kind.PLAIN and negatives:
            raise ValueError(f"plain permutation {window} has negative letters")
        if self.kind is Kind.EVEN_SIGNED and negatives % 2:
            raise ValueError(f"{window} has an odd number of negative letters")

    @classmethod
    def _trusted(cls, window: tuple, kind: Kind) -> "SignedPerm":
        p = object.__new__(cls)
        object.__setattr__(p, "window", window)
        object.__setattr__(p, "kind", kind)
        return p

    @property
    def n(self) -> int:
        return len(self.window)

    def __len__(self) -> int:
        return len(self.window)

    def __iter__(self):
        return iter(self.window)

    def __getitem__(self, i):
        return self.window[i]

    def __repr__(self) -> str:
        return f"SignedPerm({list(self.window)}, {self.kind.name})"


@dataclass(frozen=True)
class DescentSet:
    """A subset of ``{0, ..., n-1}``."""

    members: frozenset
    n: int

    def __post_init__(self):
        members = frozenset(self.members)
        object.__setattr__(self, "members", members)
        if any(not 0 <= i < max(self.n, 1) for i in members):
            raise ValueError(f"{sorted(members)} is not a subset of [0, {self.n - 1}]")

    @classmethod
    def interval(cls, lo: int, hi: int, n: int) -> "DescentSet":
        """The integer interval ``[lo, hi]`` (empty when ``lo > hi``)."""
        return cls(frozenset(range(lo, hi + 1)), n)

    def __contains__(self, i) -> bool:
        return i in self.members

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self):
        return iter(sorted(self.members))

    def __eq__(self, other) -> bool:
        if isinstance(other, DescentSet):
            return self.members == other.members
        if isinstance(other, (set, frozenset)):
            return self.members == other
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.members)

    def __repr__(self) -> str:
        return f"DescentSet({sorted(self.members)}, n={self.n})"

    def rank(self, i: int) -> int:
        """Number of members strictly below ``i``."""
        return sum(1 for m in self.members if m < i)

    def issuperset(self, other: "DescentSet | Iterable[int]") -> bool:
        return self.members >= frozenset(other)

    def restrict(self, lo: int, hi: int, n: Optional[int] = None) -> "DescentSet":
        """Intersection with ``[lo, hi]``, re-homed in ambient size ``n``."""
        return DescentSet(frozenset(i for i in self.members if lo <= i <= hi),
                          self.n if n is None else n)

    def union(self, other: Iterable[int], n: Optional[int] = None) -> "DescentSet":
        return DescentSet(self.members | frozenset(other), self.n if n is None else n)

    @property
    def mask(self) -> int:
        return sum(1 << i for i in self.members)


def all_subsets(n: int) -> Iterator[DescentSet]:
    """Every subset of ``[0, n-1]``, by size then lexicographically."""
    for size in range(n + 1):
        for combo in combinations(range(n), size):
            yield DescentSet(frozenset(combo), n)


# -- enumeration -----------------------------------------------------------


def letter_order(n: int) -> list:
    """Letters of ``[-n, n] \\ {0}`` in iteration order."""
    return [-i for i in range(1, n + 1)] + list(range(1, n + 1))


def first_letters(kind, n: int) -> list:
    """The prefixes that partition an iteration of the group."""
    kind = Kind.parse(kind)
    if n == 0:
        return []
    if kind is Kind.PLAIN:
        return list(range(1, n + 1))
    if kind is Kind.EVEN_SIGNED and n == 1:
        return [1]
    return letter_order(n)


def group_order(kind, n: int) -> int:
    from math import factorial

    kind = Kind.parse(kind)
    if kind is Kind.PLAIN:
        return factorial(n)
    if kind is Kind.SIGNED:
        return 2 ** n * factorial(n)
    return 2 ** max(n - 1, 0) * factorial(n)


def iter_group(kind, n: int, first: Optional[int] = None) -> Iterator[SignedPerm]:
    """Yield each element of S_n, B_n or D_n exactly once.

    With ``first`` given, only windows beginning with that letter are
    produced; the slices over :func:`first_letters` partition the group.
    """
    kind = Kind.parse(kind)
    if n < 0:
        raise ValueError("n must be nonnegative")
    signed = kind is not Kind.PLAIN
    order = letter_order(n) if signed else list(range(1, n + 1))
    word = []
    used = [False] * (n + 1)

    def rec(negatives: int):
        pos = len(word)
        if pos == n:
            if kind is Kind.EVEN_SIGNED and negatives % 2:
                return
            yield SignedPerm._trusted(tuple(word), kind)
            return
        if kind is Kind.EVEN_SIGNED and pos == n - 1:
            # Last letter's sign is forced by parity.
            letters = [x for x in order if (x < 0) == (negatives % 2 == 1)]
        else:
            letters = order
        if pos == 0 and first is not None:
            letters = [x for x in letters if x == first]
        for x in letters:
            a = abs(x)
            if used[a]:
                continue
            used[a] = True
            word.append(x)
            yield from rec(negatives + (x < 0))
            word.pop()
            used[a] = False

    yield from rec(0)


# -- descent statistics ----------------------------------------------------


def _require(pi: SignedPerm, *kinds: Kind) -> None:
    if isinstance(pi, SignedPerm) and pi.kind not in kinds:
        raise ValueError(f"{pi!r} has kind {pi.kind.name}, expected one of "
                         f"{[k.name for k in kinds]}")


def des_set_A(pi: Sequence[int]) -> DescentSet:
    w = tuple(pi)
    return DescentSet(frozenset(i for i in range(1, len(w)) if w[i - 1] > w[i]), len(w))


def des_A(pi: SignedPerm) -> int:
    _require(pi, Kind.PLAIN)
    w = pi.window
    return sum(1 for i in range(len(w) - 1) if w[i] > w[i + 1])


def des_set_B(pi: Sequence[int]) -> DescentSet:
    """Type B descents, using the convention ``w(0) = 0``."""
    w = (0,) + tuple(pi)
    return DescentSet(frozenset(i for i in range(len(w) - 1) if w[i] > w[i + 1]), len(w) - 1)


def des_B(pi: Sequence[int]) -> int:
    w = tuple(pi)
    if not w:
        return 0
    d = 1 if w[0] < 0 else 0
    for i in range(len(w) - 1):
        if w[i] > w[i + 1]:
            d += 1
    return d


def des_set_D(pi: Sequence[int]) -> DescentSet:
    """Type D descents of a permutation or of any signed word.

    Position 0 is a descent when ``w(1) + w(2) < 0``.  Words of length at most
    one have no descents.
    """
    w = tuple(pi)
    members = {i for i in range(1, len(w)) if w[i - 1] > w[i]}
    if len(w) >= 2 and w[0] + w[1] < 0:
        members.add(0)
    return DescentSet(frozenset(members), len(w))


def des_D(pi: Sequence[int]) -> int:
    w = tuple(pi)
    d = 1 if len(w) >= 2 and w[0] + w[1] < 0 else 0
    for i in range(len(w) - 1):
        if w[i] > w[i + 1]:
            d += 1
    return d


def md_B(pi: SignedPerm) -> int:
    """Max of ``i - w(i)`` over positive letters and ``i`` over negative ones."""
    _require(pi, Kind.SIGNED, Kind.EVEN_SIGNED)
    w = tuple(pi)
    if not w:
        raise ValueError("md_B is undefined for n = 0")
    return max(i - x if x > 0 else i for i, x in enumerate(w, start=1))


# -- standardization -------------------------------------------------------


def st(w: Sequence[int]) -> SignedPerm:
    """Order-isomorphic relabelling of a positive word onto ``1..n``."""
    letters = tuple(w)
    if any(x <= 0 for x in letters):
        raise ValueError(f"st needs positive letters, got {letters}")
    rank = {x: i for i, x in enumerate(sorted(letters), start=1)}
    return SignedPerm(tuple(rank[x] for x in letters), Kind.PLAIN)


def _kind_of(window: tuple) -> Kind:
    negatives = sum(1 for x in window if x < 0)
    if negatives == 0:
        return Kind.PLAIN
    return Kind.EVEN_SIGNED if negatives % 2 == 0 else Kind.SIGNED


def sst(w: Sequence[int], kind: Optional[Kind] = None) -> SignedPerm:
    """Signed standardization: standardize ``|w|`` and keep each letter's sign.

    The resulting kind is the most specific one the window satisfies unless
    ``kind`` is given.
    """
    letters = tuple(SignedWord(tuple(w)))
    rank = {a: i for i, a in enumerate(sorted(abs(x) for x in letters), start=1)}
    window = tuple(rank[abs(x)] if x > 0 else -rank[abs(x)] for x in letters)
    return SignedPerm(window, kind or _kind_of(window))


def sst_inv(C: Iterable[int], sigma: Sequence[int]) -> SignedWord:
    """The unique signed word on ``C`` whose signed standardization is ``sigma``."""
    values = sorted(C)
    s = tuple(sigma)
    if len(values) != len(s) or len(set(values)) != len(values):
        raise ValueError(f"|C| = {len(set(values))} does not match size {len(s)}")
    if any(c <= 0 for c in values):
        raise ValueError("C must consist of positive integers")
    return SignedWord(tuple(values[x - 1] if x > 0 else -values[-x - 1] for x in s))


# -- bijections ------------------------------------------------------------


def phi_B(pi: SignedPerm) -> SignedPerm:
    """Flip every sign.  Swaps ``{w(n) > 0}`` and ``{w(n) < 0}`` in B_n."""
    _require(pi, Kind.SIGNED)
    return SignedPerm(tuple(-x for x in pi.window), Kind.SIGNED)


def phi_D(pi: SignedPerm) -> SignedPerm:
    """Parity-preserving sign flip on D_n.

    For even ``n`` all signs flip; for odd ``n`` the first letter is kept and
    the remaining ``n - 1`` letters flip.
    """
    _require(pi, Kind.EVEN_SIGNED)
    w = pi.window
    n = len(w)
    if n < 2:
        raise ValueError("phi_D needs n >= 2")
    if n % 2 == 0:
        out = tuple(-x for x in w)
    else:
        out = (w[0],) + tuple(-x for x in w[1:])
    return SignedPerm(out, Kind.EVEN_SIGNED)


def r_stat(S: Iterable[int], n: int) -> int:
    """Length of the longest run ``[n-i, n-1]`` contained in ``S``."""
    members = frozenset(S)
    i = 0
    while i < n and (n - 1 - i) in members:
        i += 1
    return i


def psi(pi: SignedPerm, S: Iterable[int]):
    """Split ``pi`` in D_n^+(S) into a standardized prefix and a tail set.

    Returns ``(sigma, X)`` where ``i = r_stat(S, n)``, ``sigma`` is the signed
    standardization of ``w(1..n-i-1)`` and ``X = {w(n-i), ..., w(n)}``.
    """
    _require(pi, Kind.EVEN_SIGNED)
    S = frozenset(S)
    w = pi.window
    n = len(w)
    if n == 0 or w[-1] < 0:
        raise ValueError(f"{pi!r} is not in D_n^+")
    if not des_set_D(w).issuperset(S):
        raise ValueError(f"descent set of {pi!r} does not contain {sorted(S)}")
    i = r_stat(S, n)
    sigma = sst(w[: n - i - 1], Kind.EVEN_SIGNED)
    return sigma, frozenset(w[n - i - 1:])


def psi_inv(sigma: Sequence[int], X: Iterable[int], n: int) -> SignedPerm:
    """Relabel ``sigma`` onto ``[n] \\ X`` and append ``X`` in decreasing order."""
    X = frozenset(X)
    s = tuple(sigma)
    if not X <= frozenset(range(1, n + 1)):
        raise ValueError(f"X = {sorted(X)} is not a subset of [1, {n}]")
    if len(s) + len(X) != n:
        raise ValueError(f"sizes {len(s)} + {len(X)} do not add up to {n}")
    rest = sorted(frozenset(range(1, n + 1)) - X)
    prefix = sst_inv(rest, s).letters
    return SignedPerm(prefix + tuple(sorted(X, reverse=True)), Kind.EVEN_SIGNED)


def descent_superset_count(kind, n: int, S: Iterable[int], positive_last: bool = False) -> int:
    """``|U(S)|`` for ``U`` the whole group or its ``w(n) > 0`` half."""
    kind = Kind.parse(kind)
    S = frozenset(S)
    des_set = {Kind.PLAIN: des_set_A, Kind.SIGNED: des_set_B, Kind.EVEN_SIGNED: des_set_D}[kind]
    count = 0
    for pi in iter_group(kind, n):
        if positive_last and (n == 0 or pi.window[-1] < 0):
            continue
        if des_set(pi.window).issuperset(S):
            count += 1
    return count
