import itertools
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from ghexact import (
    FiniteMetricSpace,
    PointSubset,
    diameter,
    hausdorff_distance,
    line,
    scale,
    simplex,
    validate,
)
from ghexact import errors
from ghexact.metric import format_rational, to_rational

from spaces import random_space, triangle_ok

HALF = Fraction(1, 2)


class TestValidate:
    def test_single_point(self):
        X = validate([[0]])
        assert X.n == 1 and diameter(X) == 0

    def test_two_points(self):
        X = validate([[0, 1], [1, 0]])
        assert X == simplex(2, 1)

    def test_triangle_violation_reports_triple(self):
        with pytest.raises(errors.TriangleViolation) as exc:
            validate([[0, 1, 3], [1, 0, 1], [3, 1, 0]])
        assert exc.value.where == (0, 1, 2)

    @pytest.mark.parametrize(
        "matrix, error, where",
        [
            ([[0, 1], [2, 0]], errors.NotSymmetric, (0, 1)),
            ([[0, -1], [-1, 0]], errors.NegativeDistance, (0, 1)),
            ([[1, 1], [1, 0]], errors.NonzeroDiagonal, (0, 0)),
            ([[0, 0], [0, 0]], errors.ZeroOffDiagonal, (0, 1)),
            ([[0, 1], [1]], errors.NotSquare, (1,)),
        ],
    )
    def test_axiom_errors(self, matrix, error, where):
        with pytest.raises(error) as exc:
            validate(matrix)
        assert exc.value.where == where

    def test_rejects_floats(self):
        with pytest.raises(TypeError):
            validate([[0, 0.5], [0.5, 0]])

    def test_exact_strings(self):
        X = validate([["0", "1/3"], ["1/3", "0"]])
        assert X.d[0][1] == Fraction(1, 3)

    def test_lowest_terms(self):
        q = to_rational("6/8")
        assert (q.numerator, q.denominator) == (3, 4)
        assert format_rational(Fraction(-6, 8)) == "-3/4"
        assert format_rational(Fraction(2)) == "2/1"

    @settings(max_examples=150, deadline=None)
    @given(st.integers(1, 4).flatmap(
        lambda n: st.lists(st.integers(1, 4), min_size=n * (n - 1) // 2, max_size=n * (n - 1) // 2)
        .map(lambda vals: (n, vals))))
    def test_accepts_iff_triple_scan_passes(self, nv):
        n, vals = nv
        d = [[0] * n for _ in range(n)]
        it = iter(vals)
        for i in range(n):
            for j in range(i + 1, n):
                d[i][j] = d[j][i] = next(it)
        if triangle_ok(d):
            validate(d)
        else:
            with pytest.raises(errors.TriangleViolation):
                validate(d)


class TestDiameterScaleSimplex:
    def test_diameters(self):
        assert diameter(simplex(1)) == 0
        assert diameter(simplex(3, 2)) == 2
        assert diameter(line([0, HALF, 1])) == 1

    def test_scale(self):
        assert scale(simplex(2), 1) == simplex(2)
        assert scale(simplex(3), HALF) == simplex(3, HALF)
        assert diameter(scale(line([0, HALF, 1]), 3)) == 3

    @pytest.mark.parametrize("lam", [0, -1, Fraction(-1, 2)])
    def test_scale_rejects_nonpositive(self, lam):
        with pytest.raises(errors.NonPositiveScale):
            scale(simplex(2), lam)

    def test_simplexes(self):
        assert simplex(1, 99).d == ((0,),)
        assert diameter(simplex(4, 1)) == 1
        validate(simplex(5, Fraction(3, 7)).d)

    @settings(max_examples=60, deadline=None)
    @given(st.integers(0, 10_000), st.integers(1, 6),
           st.fractions(min_value=Fraction(1, 10), max_value=10))
    def test_diameter_scales_linearly(self, seed, n, lam):
        X = random_space(random.Random(seed), n, denominators=(1, 2, 3))
        assert diameter(scale(X, lam)) == lam * diameter(X)


class TestHausdorff:
    X = line([0, 1, 2])

    def test_examples(self):
        assert hausdorff_distance(self.X, {0, 1}, {0, 1}) == 0
        assert hausdorff_distance(self.X, {0}, {2}) == 2
        assert hausdorff_distance(self.X, {0, 2}, {1}) == 1

    def test_empty_subset(self):
        with pytest.raises(errors.EmptySubset):
            hausdorff_distance(self.X, set(), {1})
        with pytest.raises(errors.EmptySubset):
            PointSubset(self.X, frozenset())

    def test_triangle_inequality_exhaustive(self):
        rng = random.Random(7)
        for n in range(1, 6):
            X = random_space(rng, n)
            subsets = [
                frozenset(c) for k in range(1, n + 1) for c in itertools.combinations(range(n), k)
            ]
            h = {(A, B): hausdorff_distance(X, A, B) for A in subsets for B in subsets}
            for A, B, C in itertools.product(subsets, repeat=3):
                assert h[A, C] <= h[A, B] + h[B, C]


def test_relabeling_invariance():
    rng = random.Random(3)
    for _ in range(20):
        X = random_space(rng, 5)
        perm = list(range(5))
        rng.shuffle(perm)
        Y = X.relabel(perm)
        assert diameter(X) == diameter(Y)
        inv = {p: k for k, p in enumerate(perm)}
        A, B = {0, 1}, {3}
        assert hausdorff_distance(X, A, B) == hausdorff_distance(
            Y, {inv[a] for a in A}, {inv[b] for b in B}
        )


def test_line_helper():
    X = line([0, "1/2", 1])
    assert X.d[0][1] == HALF and X.d[0][2] == 1
    assert isinstance(X, FiniteMetricSpace)
