import random
import warnings
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from eulerian.families import eulerian_enum, p_poly, q_poly, t_refined
from eulerian.poly import IntPoly, RatPoly, reverse
from eulerian.roots import (
    SturmChain,
    cauchy_bound,
    compatible_pair_cert,
    compatible_sample_check,
    count_real_roots,
    interlaces,
    is_real_rooted,
    isolate_roots,
    refine,
    squarefree_decomposition,
    squarefree_part,
    sturm_chain,
)

T = IntPoly([0, 1])


def from_roots(*roots):
    f = RatPoly([1])
    for r in roots:
        f = f * RatPoly([-Fraction(r), 1])
    return f


class TestSquarefree:
    def test_examples(self):
        assert squarefree_part(IntPoly([1, -2, 1])) == RatPoly([-1, 1])
        assert squarefree_part(IntPoly([-2, 0, 1])) == RatPoly([-2, 0, 1])
        f = T * IntPoly([3, 1]) ** 2
        assert squarefree_part(f) == RatPoly([0, 3, 1])
        with pytest.raises(ValueError):
            squarefree_part(IntPoly())

    def test_decomposition(self):
        f = from_roots(1, 1, 1, -2, -2, 5) * 7
        parts = squarefree_decomposition(f)
        assert parts == [(from_roots(5), 1), (from_roots(-2), 2), (from_roots(1), 3)]
        assert squarefree_decomposition(IntPoly([4])) == []


class TestCounting:
    def test_examples(self):
        assert count_real_roots(IntPoly([-2, 0, 1])) == 2
        assert count_real_roots(IntPoly([1, 0, 1])) == 0
        assert count_real_roots(IntPoly([-2, 0, 1]), 0, 2) == 1

    def test_half_open_endpoints(self):
        f = from_roots(0, 1, 2)
        assert count_real_roots(f, 0, 2) == 2
        assert count_real_roots(f, -1, 0) == 1
        assert count_real_roots(f, Fraction(1, 2), 1) == 1
        assert count_real_roots(f, 1, 1) == 0
        with pytest.raises(ValueError):
            count_real_roots(f, 2, 1)

    def test_zero_polynomial(self):
        with pytest.raises(ValueError):
            count_real_roots(IntPoly())
        with pytest.raises(ValueError):
            is_real_rooted(IntPoly())

    def test_chain_shape(self):
        chain = sturm_chain(IntPoly([-2, 0, 1]))
        assert isinstance(chain, SturmChain)
        assert chain.polys[1] == RatPoly([0, 2])
        assert chain.polys[-1].degree() == 0

    def test_cauchy_bound(self):
        f = from_roots(-7, 3, Fraction(1, 2))
        assert all(abs(r) < cauchy_bound(f) for r in (-7, 3, Fraction(1, 2)))

    @settings(max_examples=150, deadline=None)
    @given(st.lists(st.builds(Fraction, st.integers(-30, 30), st.integers(1, 6)),
                    min_size=1, max_size=5),
           st.integers(0, 2))
    def test_planted_roots(self, roots, complex_factors):
        f = from_roots(*roots)
        for k in range(complex_factors):
            f = f * RatPoly([k + 1, 0, 1])
        assert count_real_roots(f) == len(set(roots))
        assert is_real_rooted(f) == (complex_factors == 0)


class TestRealRooted:
    def test_examples(self):
        assert is_real_rooted(IntPoly([1, 6, 1]))
        assert not is_real_rooted(IntPoly([1, 0, 1]))
        assert is_real_rooted(IntPoly([1, 1]) ** 3)
        assert is_real_rooted(IntPoly([5]))

    @pytest.mark.parametrize("n", range(1, 8))
    def test_eulerian(self, n):
        for kind in "ABD":
            assert is_real_rooted(eulerian_enum(kind, n))


class TestIsolation:
    def test_examples(self):
        a, b = isolate_roots(IntPoly([-2, 0, 1]))
        # one negative and one positive root, each interval holding +-sqrt(2)
        assert a.hi <= 0 <= b.lo
        assert a.lo ** 2 > 2 > a.hi ** 2 and b.lo ** 2 < 2 < b.hi ** 2
        r = isolate_roots(IntPoly([0, 3, 1]))
        assert len(r) == 2 and r[0].contains(-3) and r[1].contains(0)
        q = isolate_roots(q_poly(3))
        assert len(q) == 2 and all(iv.hi <= 0 for iv in q) and q_poly(3)(0) != 0
        assert count_real_roots(q_poly(3), None, 0) == 2

    def test_multiplicities(self):
        f = from_roots(1, 1, Fraction(-1, 3), Fraction(-1, 3), Fraction(-1, 3))
        f = f * RatPoly([-2, 0, 1])
        ivs = isolate_roots(f)
        assert [iv.multiplicity for iv in ivs] == [1, 3, 2, 1]

    def test_refine(self):
        iv = isolate_roots(IntPoly([-2, 0, 1]))[1]
        narrow = refine(iv, IntPoly([-2, 0, 1]), Fraction(1, 10 ** 9))
        assert narrow.width < Fraction(1, 10 ** 9)
        assert narrow.lo ** 2 < 2 <= narrow.hi ** 2
        with pytest.raises(ValueError):
            refine(iv, IntPoly([-50, 0, 1]), Fraction(1, 10))

    def test_refine_hits_exact_root(self):
        f = from_roots(Fraction(1, 2), 5)
        iv = isolate_roots(f)[0]
        narrow = refine(iv, f, Fraction(1, 10 ** 6))
        assert narrow.contains(Fraction(1, 2))


def numeric_roots(f):
    out = []
    for iv in isolate_roots(f):
        iv = refine(iv, f, Fraction(1, 10 ** 6))
        out.extend([float(iv.lo + iv.hi) / 2] * iv.multiplicity)
    return sorted(out, reverse=True)


def numeric_interlaces(f, g, tol=1e-6):
    if not is_real_rooted(f) or not is_real_rooted(g):
        return False
    df, dg = f.degree(), g.degree()
    if not df <= dg <= df + 1:
        return False
    a, b = numeric_roots(f), numeric_roots(g)
    for i, x in enumerate(a):
        if x > b[i] + tol:
            return False
        if i + 1 < len(b) and b[i + 1] > x + tol:
            return False
    return True


def corpus():
    pairs = [
        (IntPoly([1, 3]), IntPoly([0, 3, 1])),
        (IntPoly([7]), T),
        (from_roots(-1, 1), from_roots(-2, 2)),
        (from_roots(-2, 2), from_roots(-1, 1)),
        (from_roots(-1, 1), from_roots(-2, 0, 2)),
        (from_roots(0, 1), from_roots(0, 1)),
        (from_roots(1, 1), from_roots(0, 1, 2)),
        (from_roots(1, 1), from_roots(0, 2, 3)),
        (from_roots(-3, -1), from_roots(-4, -2, 0)),
        (from_roots(-3, -1), from_roots(-4, 0, 1)),
        (IntPoly([1, 0, 1]), from_roots(0, 1, 2)),
    ]
    for n in range(1, 7):
        pairs.append((p_poly(n), reverse(p_poly(n), n)))
        pairs.append((reverse(p_poly(n), n), p_poly(n)))
    for n in range(2, 7):
        pairs.append((q_poly(n), reverse(q_poly(n), n)))
    rng = random.Random(3)
    for _ in range(40):
        a = [Fraction(rng.randint(-9, 9), rng.randint(1, 3)) for _ in range(rng.randint(1, 4))]
        b = [Fraction(rng.randint(-9, 9), rng.randint(1, 3)) for _ in range(len(a) + rng.randint(0, 1))]
        pairs.append((from_roots(*a), from_roots(*b)))
    return pairs


class TestInterlacing:
    def test_examples(self):
        assert interlaces(IntPoly([1, 3]), IntPoly([0, 3, 1]))
        assert interlaces(IntPoly([4]), T)
        assert not interlaces(IntPoly([1, 0, 1]), IntPoly([1, 0, 1]))

    def test_nested_roots_interlace_neither_way(self):
        # roots -2, -1, 1, 2: both roots of one polynomial sit between the other's
        f, g = IntPoly([-1, 0, 1]), IntPoly([-4, 0, 1])
        assert not interlaces(f, g)
        assert not interlaces(g, f)

    def test_shared_and_repeated_roots(self):
        assert interlaces(from_roots(0, 1), from_roots(0, 1))
        assert interlaces(from_roots(1, 1), from_roots(0, 1, 2))
        assert not interlaces(from_roots(1, 1), from_roots(0, 2, 3))

    def test_degree_constraints(self):
        assert not interlaces(T ** 2, T)
        assert not interlaces(IntPoly([1]), T ** 2)
        with pytest.raises(ValueError):
            interlaces(IntPoly(), T)

    @pytest.mark.parametrize("i", range(len(corpus())))
    def test_agrees_with_numeric_check(self, i):
        f, g = corpus()[i]
        assert interlaces(f, g) == numeric_interlaces(f, g)

    @pytest.mark.parametrize("n", range(1, 10))
    def test_eulerian_halves(self, n):
        assert interlaces(p_poly(n), reverse(p_poly(n), n))
        if n >= 2:
            assert interlaces(q_poly(n), reverse(q_poly(n), n))


class TestObreschkoff:
    def test_interlacing_pairs_have_real_rooted_pencil(self):
        for f, g in corpus():
            if f.degree() == g.degree() or g.degree() == f.degree() + 1:
                if interlaces(f, g):
                    assert compatible_sample_check([f, g], 20, seed=11, signed=True)

    def test_non_interlacing_pairs_are_falsified(self):
        missed = []
        for f, g in corpus():
            if abs(f.degree() - g.degree()) > 1 or not (is_real_rooted(f) and is_real_rooted(g)):
                continue
            if interlaces(f, g) or interlaces(g, f):
                continue
            if compatible_sample_check([f, g], 200, seed=5, signed=True):
                missed.append((f, g))
        if missed:
            warnings.warn(f"no falsifying combination found for {len(missed)} pair(s)")


class TestCompatibility:
    def test_pair_cert_examples(self):
        assert compatible_pair_cert(p_poly(2), reverse(p_poly(2), 2))
        assert compatible_pair_cert(IntPoly([1]), T)
        assert not compatible_pair_cert(IntPoly([1, 0, 1]), IntPoly([1, 1]))
        with pytest.raises(ValueError):
            compatible_pair_cert(IntPoly([-1, 1]), T)

    def test_sample_examples(self):
        assert compatible_sample_check([t_refined(4, k) for k in range(8)], 20, seed=0)
        assert not compatible_sample_check([IntPoly([1, 0, 1])], 1, seed=0)
        assert compatible_sample_check([IntPoly([1, 1]), IntPoly([1, 1])], 30, seed=4)
        with pytest.raises(ValueError):
            compatible_sample_check([], 3)

    def test_sample_is_seeded(self):
        fam = [t_refined(3, k) for k in range(6)]
        runs = {compatible_sample_check(fam, 20, seed=9) for _ in range(3)}
        assert len(runs) == 1

    def test_small_type_d_families_are_not_pairwise_compatible(self):
        # the refined type D family is only compatible from n = 4 on
        bad = {}
        for n in (2, 3, 4):
            fam = [t_refined(n, k) for k in range(2 * n)]
            bad[n] = [(i, j) for i in range(2 * n) for j in range(i + 1, 2 * n)
                      if not compatible_pair_cert(fam[i], fam[j])]
        assert bad == {2: [(0, 3)], 3: [(0, 1), (0, 4), (1, 5), (4, 5)], 4: []}
        # 2 + 2t^2 has no real roots
        assert not is_real_rooted(t_refined(2, 0) + t_refined(2, 3))
