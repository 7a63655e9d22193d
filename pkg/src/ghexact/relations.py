"""Relations, correspondences and distortion."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Tuple

from . import errors
from .metric import FiniteMetricSpace


@dataclass(frozen=True)
class Correspondence:
    """A relation between ``range(n_x)`` and ``range(n_y)`` with both projections onto.

    ``rows[x]`` is the set of ``y`` related to ``x``.
    """

    n_x: int
    n_y: int
    rows: Tuple[frozenset, ...]

    def __post_init__(self):
        rows = tuple(frozenset(r) for r in self.rows)
        object.__setattr__(self, "rows", rows)
        if len(rows) != self.n_x:
            raise errors.NotACorrespondence(f"{len(rows)} rows for {self.n_x} points")
        for x, r in enumerate(rows):
            if not r:
                raise errors.NotACorrespondence(f"row {x} is empty")
            if not r <= frozenset(range(self.n_y)):
                raise errors.NotACorrespondence(f"row {x} has targets outside 0..{self.n_y - 1}")
        covered = frozenset().union(*rows)
        if len(covered) != self.n_y:
            missing = sorted(set(range(self.n_y)) - covered)
            raise errors.NotACorrespondence(f"points {missing} of Y are not covered")

    @classmethod
    def from_pairs(cls, n_x, n_y, pairs):
        rows = [set() for _ in range(n_x)]
        for x, y in pairs:
            rows[x].add(y)
        return cls(n_x, n_y, tuple(rows))

    @classmethod
    def identity(cls, n):
        return cls(n, n, tuple(frozenset([i]) for i in range(n)))

    @classmethod
    def full(cls, n_x, n_y):
        everything = frozenset(range(n_y))
        return cls(n_x, n_y, (everything,) * n_x)

    def pairs(self):
        return sorted((x, y) for x, r in enumerate(self.rows) for y in r)

    def __len__(self):
        return sum(len(r) for r in self.rows)

    def image(self, xs: Iterable[int]) -> frozenset:
        return frozenset().union(*(self.rows[x] for x in xs))

    def inverse(self) -> "Correspondence":
        return Correspondence.from_pairs(self.n_y, self.n_x, [(y, x) for x, y in self.pairs()])

    def bitstring(self) -> str:
        """Row-by-row 0/1 encoding; the tie-break order for optimal correspondences."""
        return "".join(
            "".join("1" if y in r else "0" for y in range(self.n_y)) for r in self.rows
        )

    def as_lists(self):
        return [sorted(r) for r in self.rows]


def distortion(X: FiniteMetricSpace, Y: FiniteMetricSpace, sigma) -> Fraction:
    """dis sigma = max | |xx'| - |yy'| | over pairs of pairs in the relation.

    ``sigma`` is a :class:`Correspondence` or any nonempty iterable of ``(x, y)``.
    """
    pairs = sigma.pairs() if isinstance(sigma, Correspondence) else sorted(set(sigma))
    if not pairs:
        raise errors.EmptyRelation("distortion of an empty relation is undefined")
    for x, y in pairs:
        if not (0 <= x < X.n and 0 <= y < Y.n):
            raise errors.PreconditionError(f"pair {(x, y)} outside X x Y")
    dx, dy = X.d, Y.d
    return max(abs(dx[x][u] - dy[y][v]) for x, y in pairs for u, v in pairs)
