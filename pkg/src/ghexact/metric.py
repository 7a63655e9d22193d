"""Finite metric spaces with exact rational distances."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from numbers import Rational
from typing import Iterable, Optional, Sequence

from . import errors


def to_rational(value) -> Fraction:
    """Convert ``value`` to a :class:`Fraction` without ever passing through a float.

    Accepts ints, Fractions (or any :class:`numbers.Rational`) and strings such
    as ``"3"``, ``"0.25"`` or ``"2/7"``.
    """
    if isinstance(value, bool):
        raise TypeError("booleans are not distances")
    if isinstance(value, Rational):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise errors.ParseError(f"not an exact rational: {value!r}") from exc
    raise TypeError(f"refusing inexact value {value!r} of type {type(value).__name__}")


def format_rational(q: Fraction) -> str:
    """Lowest-terms ``p/q`` text; the denominator is always written."""
    q = Fraction(q)
    return f"{q.numerator}/{q.denominator}"


@dataclass(frozen=True)
class FiniteMetricSpace:
    """An ``n``-point metric space given by its distance matrix.

    Construction validates the metric axioms; an invalid matrix raises the
    matching :class:`~ghexact.errors.MetricAxiomError`.
    """

    d: tuple
    labels: Optional[tuple] = field(default=None, compare=False)

    def __post_init__(self):
        rows = tuple(tuple(to_rational(v) for v in row) for row in self.d)
        object.__setattr__(self, "d", rows)
        if self.labels is not None:
            labels = tuple(str(s) for s in self.labels)
            if len(labels) != len(rows):
                raise errors.InputError(f"{len(labels)} labels for {len(rows)} points")
            object.__setattr__(self, "labels", labels)
        _check_axioms(rows)

    @property
    def n(self) -> int:
        return len(self.d)

    def __len__(self):
        return len(self.d)

    def __getitem__(self, ij):
        i, j = ij
        return self.d[i][j]

    def label(self, i: int) -> str:
        return self.labels[i] if self.labels is not None else str(i)

    def diameter(self) -> Fraction:
        return diameter(self)

    def subspace(self, members: Iterable[int]) -> "FiniteMetricSpace":
        idx = sorted(set(members))
        labels = None if self.labels is None else [self.labels[i] for i in idx]
        return FiniteMetricSpace([[self.d[i][j] for j in idx] for i in idx], labels)

    def relabel(self, perm: Sequence[int]) -> "FiniteMetricSpace":
        """The space whose point ``k`` is this space's point ``perm[k]``."""
        return FiniteMetricSpace([[self.d[i][j] for j in perm] for i in perm])

    def __repr__(self):
        body = "; ".join(" ".join(str(v) for v in row) for row in self.d)
        return f"FiniteMetricSpace([{body}])"


def _check_axioms(d):
    n = len(d)
    if n < 1:
        raise errors.NotSquare("empty matrix", ())
    for i, row in enumerate(d):
        if len(row) != n:
            raise errors.NotSquare(f"row has {len(row)} entries, expected {n}", (i,))
    for i in range(n):
        if d[i][i] != 0:
            raise errors.NonzeroDiagonal("nonzero diagonal entry", (i, i))
    for i in range(n):
        for j in range(i + 1, n):
            if d[i][j] != d[j][i]:
                raise errors.NotSymmetric("asymmetric entries", (i, j))
            if d[i][j] < 0:
                raise errors.NegativeDistance("negative distance", (i, j))
            if d[i][j] == 0:
                raise errors.ZeroOffDiagonal("distinct points at distance 0", (i, j))
    # report (i, j, k) with d[i][k] > d[i][j] + d[j][k]
    for i in range(n):
        for k in range(n):
            for j in range(n):
                if d[i][k] > d[i][j] + d[j][k]:
                    raise errors.TriangleViolation("triangle inequality fails", (i, j, k))


def validate(matrix, labels=None) -> FiniteMetricSpace:
    return FiniteMetricSpace(matrix, labels)


def diameter(X: FiniteMetricSpace) -> Fraction:
    return max((v for row in X.d for v in row), default=Fraction(0))


def scale(X: FiniteMetricSpace, lam) -> FiniteMetricSpace:
    lam = to_rational(lam)
    if lam <= 0:
        raise errors.NonPositiveScale(f"scale factor must be positive, got {lam}")
    return FiniteMetricSpace([[lam * v for v in row] for row in X.d], X.labels)


def simplex(n: int, lam=1) -> FiniteMetricSpace:
    """The one-distance space ``lam * Delta_n``."""
    if n < 1:
        raise errors.BadCardinal(f"simplex needs at least one point, got {n}")
    lam = to_rational(lam)
    if n > 1 and lam <= 0:
        raise errors.NonPositiveScale(f"simplex edge must be positive, got {lam}")
    return FiniteMetricSpace([[0 if i == j else lam for j in range(n)] for i in range(n)])


def line(points) -> FiniteMetricSpace:
    """Distinct reals on a line with |a - b| distances, e.g. ``line([0, "1/2", 1])``."""
    xs = [to_rational(p) for p in points]
    return FiniteMetricSpace([[abs(a - b) for b in xs] for a in xs])


DELTA1 = simplex(1)


@dataclass(frozen=True)
class PointSubset:
    owner: FiniteMetricSpace
    members: frozenset

    def __post_init__(self):
        members = frozenset(self.members)
        if not members:
            raise errors.EmptySubset("point subsets must be nonempty")
        bad = [i for i in members if not 0 <= i < self.owner.n]
        if bad:
            raise errors.InputError(f"indices {sorted(bad)} outside 0..{self.owner.n - 1}")
        object.__setattr__(self, "members", members)


def set_distance(X: FiniteMetricSpace, A: Iterable[int], B: Iterable[int]) -> Fraction:
    """|AB| = min distance between the two sets."""
    return min(X.d[a][b] for a in A for b in B)


def subset_diameter(X: FiniteMetricSpace, A: Iterable[int]) -> Fraction:
    A = list(A)
    return max((X.d[a][b] for a in A for b in A), default=Fraction(0))


def hausdorff_distance(X: FiniteMetricSpace, A, B) -> Fraction:
    """Hausdorff distance between two nonempty subsets of ``X``.

    ``A`` and ``B`` may be :class:`PointSubset` instances or plain index iterables.
    """
    A = A.members if isinstance(A, PointSubset) else PointSubset(X, A).members
    B = B.members if isinstance(B, PointSubset) else PointSubset(X, B).members
    ab = max(min(X.d[a][b] for b in B) for a in A)
    ba = max(min(X.d[a][b] for a in A) for b in B)
    return max(ab, ba)
