import math
import random
from fractions import Fraction

import pytest

from ghexact import (
    Correspondence,
    PartitionOrCovering,
    alpha_m,
    below_diameter_cover,
    cover_number_below_diam,
    covering_to_partition,
    d_m,
    distortion,
    enumerate_partitions,
    line,
    partition_stats,
    push_covering,
    simplex,
)
from ghexact import errors
from ghexact.partitions import restricted_growth_strings

from spaces import (
    CYCLE4,
    brute_cover_number,
    brute_d_alpha,
    exhaustive_corpus,
    label_partitions,
    random_space,
    random_spaces,
    stirling2,
)

HALF = Fraction(1, 2)
LINE3 = line([0, HALF, 1])


class TestEnumeration:
    @pytest.mark.parametrize("n, m, count", [(3, 3, 1), (3, 2, 3), (5, 2, 15)])
    def test_counts(self, n, m, count):
        assert stirling2(n, m) == count
        assert sum(1 for _ in enumerate_partitions(simplex(n), m)) == count

    @pytest.mark.parametrize("n", range(2, 7))
    def test_matches_label_enumeration(self, n):
        for m in range(2, n + 1):
            got = [frozenset(D.blocks) for D in enumerate_partitions(simplex(n), m)]
            assert len(got) == len(set(got))
            assert set(got) == label_partitions(n, m)

    def test_rgs_order_is_lexicographic(self):
        strings = list(restricted_growth_strings(5, 3))
        assert strings == sorted(strings)
        assert strings[0] == (0, 0, 0, 1, 2)

    @pytest.mark.parametrize("m", [0, 1, 4])
    def test_bad_cardinal(self, m):
        with pytest.raises(errors.BadCardinal):
            list(enumerate_partitions(simplex(3), m))

    def test_every_yield_is_a_partition(self):
        for D in enumerate_partitions(simplex(5), 3):
            assert D.is_partition and len(D) == 3


class TestStats:
    def test_singletons_of_simplex(self):
        D = PartitionOrCovering(simplex(3), ({0}, {1}, {2}))
        s = partition_stats(simplex(3), D)
        assert (s.diam, s.alpha) == (0, 1)

    def test_line(self):
        D = PartitionOrCovering(LINE3, ({0}, {1, 2}))
        s = partition_stats(LINE3, D)
        assert (s.diam, s.alpha) == (HALF, HALF)

    def test_overlapping_covering_has_zero_alpha(self):
        C = PartitionOrCovering(simplex(2), ({0}, {0, 1}))
        assert not C.is_partition
        assert partition_stats(simplex(2), C).alpha == 0

    def test_single_block_sentinel(self):
        C = PartitionOrCovering(simplex(2), ({0, 1},))
        assert partition_stats(simplex(2), C).alpha == math.inf


class TestInvariants:
    def test_examples(self):
        assert d_m(random_space(random.Random(0), 5), 5) == 0
        assert d_m(LINE3, 2) == HALF
        assert d_m(simplex(3), 2) == 1
        assert alpha_m(LINE3, 2) == HALF
        assert alpha_m(line([0, 1, 10]), 2) == 9

    @pytest.mark.parametrize("n", range(2, 6))
    def test_alpha_of_simplex(self, n):
        lam = Fraction(3, 2)
        for m in range(2, n + 1):
            assert alpha_m(simplex(n, lam), m) == lam

    def test_against_brute_force(self):
        spaces = random_spaces(11, 40, n_min=2, n_max=5, denominators=(1, 2))
        spaces += [s for s in exhaustive_corpus(4) if s.n >= 2][::7]
        for X in spaces:
            for m in range(2, X.n + 1):
                assert (d_m(X, m), alpha_m(X, m)) == brute_d_alpha(X, m)

    def test_monotone_in_m(self):
        for X in random_spaces(12, 30, n_min=3, n_max=6):
            ds = [d_m(X, m) for m in range(2, X.n + 1)]
            als = [alpha_m(X, m) for m in range(2, X.n + 1)]
            assert ds == sorted(ds, reverse=True)
            assert als == sorted(als, reverse=True)


class TestCoveringToPartition:
    def test_partition_is_fixed(self):
        D = PartitionOrCovering(simplex(3), ({0, 2}, {1}))
        assert covering_to_partition(D) == D

    def test_subtracts_earlier_blocks(self):
        C = PartitionOrCovering(simplex(3), ({0, 1}, {1, 2}))
        assert covering_to_partition(C).blocks == (frozenset({0, 1}), frozenset({2}))

    def test_drops_empties(self):
        C = PartitionOrCovering(simplex(3), ({0, 1, 2}, {1}, {2}))
        assert covering_to_partition(C).blocks == (frozenset({0, 1, 2}),)

    def test_properties_random(self):
        rng = random.Random(5)
        for _ in range(200):
            n = rng.randint(1, 6)
            X = random_space(rng, n)
            k = rng.randint(1, 5)
            blocks = [set(rng.sample(range(n), rng.randint(1, n))) for _ in range(k)]
            missing = set(range(n)) - set().union(*blocks)
            if missing:
                blocks.append(missing)
            C = PartitionOrCovering(X, blocks)
            D = covering_to_partition(C)
            assert D.is_partition
            assert len(D) <= len(C)
            assert partition_stats(X, D).diam <= partition_stats(X, C).diam


class TestPushCovering:
    def test_identity(self):
        X = LINE3
        C = PartitionOrCovering(X, ({0, 1}, {1, 2}))
        assert push_covering(Correspondence.identity(3), C, X) == C

    def test_full_relation(self):
        R = Correspondence.full(2, 2)
        C = PartitionOrCovering(simplex(2), ({0}, {1}))
        C_Y = push_covering(R, C, simplex(2))
        assert C_Y.blocks == (frozenset({0, 1}),) * 2
        assert distortion(simplex(2), simplex(2), R) == 1
        assert partition_stats(simplex(2), C_Y).diam == 1

    def test_diameter_bound_random(self):
        rng = random.Random(9)
        for _ in range(100):
            X = random_space(rng, rng.randint(1, 5))
            Y = random_space(rng, rng.randint(1, 5))
            rows = [set(rng.sample(range(Y.n), rng.randint(1, Y.n))) for _ in range(X.n)]
            for y in set(range(Y.n)) - set().union(*rows):
                rows[rng.randrange(X.n)].add(y)
            R = Correspondence(X.n, Y.n, rows)
            k = rng.randint(1, 4)
            blocks = [set(rng.sample(range(X.n), rng.randint(1, X.n))) for _ in range(k)]
            rest = set(range(X.n)) - set().union(*blocks)
            if rest:
                blocks.append(rest)
            C_X = PartitionOrCovering(X, blocks)
            C_Y = push_covering(R, C_X, Y)
            assert len(C_Y) == len(C_X)
            assert partition_stats(Y, C_Y).diam <= partition_stats(X, C_X).diam + distortion(X, Y, R)


class TestCoverNumber:
    @pytest.mark.parametrize("n", range(2, 6))
    def test_simplex(self, n):
        assert cover_number_below_diam(simplex(n, 2)) == n

    def test_line(self):
        assert cover_number_below_diam(LINE3) == 2

    def test_four_cycle(self):
        assert cover_number_below_diam(CYCLE4) == 2

    def test_single_point(self):
        with pytest.raises(errors.SinglePoint):
            cover_number_below_diam(simplex(1))

    def test_cover_blocks_are_below_diameter(self):
        for Y in random_spaces(21, 50, n_min=2, n_max=6):
            C = below_diameter_cover(Y)
            assert partition_stats(Y, C).diam < max(max(r) for r in Y.d)

    def test_against_set_cover_search(self):
        spaces = random_spaces(13, 60, n_min=2, n_max=6, values=(1, 2, 3))
        spaces += [s for s in exhaustive_corpus(4) if s.n >= 2][::5]
        for Y in spaces:
            assert cover_number_below_diam(Y) == brute_cover_number(Y)
