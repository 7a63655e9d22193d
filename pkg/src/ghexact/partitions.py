"""Partitions and coverings of finite metric spaces and their invariants."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Tuple

from . import errors
from .metric import FiniteMetricSpace, diameter, set_distance, subset_diameter
from .relations import Correspondence, distortion


@dataclass(frozen=True)
class PartitionOrCovering:
    owner: FiniteMetricSpace
    blocks: Tuple[frozenset, ...]

    def __post_init__(self):
        blocks = tuple(frozenset(b) for b in self.blocks)
        object.__setattr__(self, "blocks", blocks)
        if not blocks:
            raise errors.PreconditionError("a covering needs at least one block")
        if any(not b for b in blocks):
            raise errors.PreconditionError("covering blocks must be nonempty")
        if frozenset().union(*blocks) != frozenset(range(self.owner.n)):
            raise errors.PreconditionError("blocks do not cover every point")

    @property
    def is_partition(self) -> bool:
        return sum(len(b) for b in self.blocks) == self.owner.n

    def __len__(self):
        return len(self.blocks)

    def as_lists(self):
        return [sorted(b) for b in self.blocks]


@dataclass(frozen=True)
class PartitionStats:
    diam: Fraction
    alpha: object  # Fraction, or math.inf for a single-block family


def _check_cardinal(X, m):
    if not 1 < m <= X.n:
        raise errors.BadCardinal(f"need 1 < m <= {X.n}, got m = {m}")


def restricted_growth_strings(n: int, m: int) -> Iterator[tuple]:
    """Restricted growth strings of length ``n`` using exactly ``m`` values, in lex order."""
    a = [0] * n

    def rec(i, used):
        if i == n:
            if used == m:
                yield tuple(a)
            return
        for v in range(min(used + 1, m)):
            now = used + (v == used)
            if now + (n - i - 1) < m:
                continue
            a[i] = v
            yield from rec(i + 1, now)

    if 1 <= m <= n:
        yield from rec(1, 1)


def enumerate_partitions(X: FiniteMetricSpace, m: int) -> Iterator[PartitionOrCovering]:
    _check_cardinal(X, m)
    for rgs in restricted_growth_strings(X.n, m):
        blocks = [set() for _ in range(m)]
        for point, b in enumerate(rgs):
            blocks[b].add(point)
        yield PartitionOrCovering(X, tuple(blocks))


def partition_stats(X: FiniteMetricSpace, D: PartitionOrCovering) -> PartitionStats:
    diam = max(subset_diameter(X, b) for b in D.blocks)
    k = len(D.blocks)
    if k == 1:
        return PartitionStats(diam, math.inf)
    alpha = min(
        set_distance(X, D.blocks[i], D.blocks[j]) for i in range(k) for j in range(i + 1, k)
    )
    return PartitionStats(diam, alpha)


def d_m(X: FiniteMetricSpace, m: int) -> Fraction:
    return min(partition_stats(X, D).diam for D in enumerate_partitions(X, m))


def alpha_m(X: FiniteMetricSpace, m: int) -> Fraction:
    return max(partition_stats(X, D).alpha for D in enumerate_partitions(X, m))


def covering_to_partition(C: PartitionOrCovering) -> PartitionOrCovering:
    """Subtract from each block the union of all earlier blocks and drop empties."""
    seen = set()
    blocks = []
    for b in C.blocks:
        rest = b - seen
        seen |= b
        if rest:
            blocks.append(rest)
    return PartitionOrCovering(C.owner, tuple(blocks))


def push_covering(
    R: Correspondence, C_X: PartitionOrCovering, Y: FiniteMetricSpace
) -> PartitionOrCovering:
    """The covering ``{R(X_i)}`` of ``Y`` induced by a correspondence from ``C_X.owner``.

    Its diameter never exceeds ``diam C_X + dis R``.
    """
    X = C_X.owner
    if R.n_x != X.n or R.n_y != Y.n:
        raise errors.PreconditionError("correspondence does not match the spaces")
    C_Y = PartitionOrCovering(Y, tuple(R.image(b) for b in C_X.blocks))
    bound = partition_stats(X, C_X).diam + distortion(X, Y, R)
    assert partition_stats(Y, C_Y).diam <= bound
    return C_Y


def diameter_graph(Y: FiniteMetricSpace):
    """Adjacency sets of the graph joining pairs at distance exactly ``diam Y``."""
    diam = diameter(Y)
    return [
        {j for j in range(Y.n) if j != i and Y.d[i][j] == diam} for i in range(Y.n)
    ]


def _color(adj, k):
    """Proper ``k``-coloring by backtracking; returns a color list or None."""
    n = len(adj)
    order = sorted(range(n), key=lambda v: (-len(adj[v]), v))
    colors = [-1] * n

    def rec(pos, used):
        if pos == n:
            return True
        v = order[pos]
        taken = {colors[u] for u in adj[v]}
        # a fresh color is interchangeable with any other fresh one
        for c in range(min(used + 1, k)):
            if c in taken:
                continue
            colors[v] = c
            if rec(pos + 1, max(used, c + 1)):
                return True
        colors[v] = -1
        return False

    return colors if rec(0, 0) else None


def below_diameter_cover(Y: FiniteMetricSpace) -> PartitionOrCovering:
    """A minimum-size covering of ``Y`` by sets of diameter < diam Y.

    Such sets are exactly the independent sets of the diameter graph, so the
    minimum is its chromatic number; the blocks returned are color classes.
    """
    if Y.n < 2:
        raise errors.SinglePoint("a single point has no covering by sets of smaller diameter")
    adj = diameter_graph(Y)
    for k in range(2, Y.n + 1):
        colors = _color(adj, k)
        if colors is not None:
            classes = {}
            for v, c in enumerate(colors):
                classes.setdefault(c, set()).add(v)
            blocks = sorted((frozenset(b) for b in classes.values()), key=min)
            return PartitionOrCovering(Y, tuple(blocks))
    raise AssertionError("the all-singletons coloring always succeeds")


def cover_number_below_diam(Y: FiniteMetricSpace) -> int:
    return len(below_diameter_cover(Y))
