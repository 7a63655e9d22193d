"""Curves, metric segments and extendability in the Gromov-Hausdorff class."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Optional, Sequence

from . import errors
from .distance import feasible, gh_exact
from .metric import DELTA1, FiniteMetricSpace, diameter, simplex, to_rational
from .partitions import (
    PartitionOrCovering,
    alpha_m,
    below_diameter_cover,
    partition_stats,
)
from .relations import Correspondence, distortion


# --- linear curves ----------------------------------------------------------

@dataclass(frozen=True)
class LinearCurve:
    """The family ``R_t`` joining ``X`` (t = 0) to ``Y`` (t = 1) through ``R``.

    For ``0 < t < 1`` the points are the pairs of ``R`` and
    ``|(x, y), (x', y')|_t = (1 - t)|xx'| + t|yy'|``.
    """

    X: FiniteMetricSpace
    Y: FiniteMetricSpace
    R: Correspondence

    def __post_init__(self):
        if self.R.n_x != self.X.n or self.R.n_y != self.Y.n:
            raise errors.NotACorrespondence("correspondence does not match the endpoint spaces")

    @property
    def pairs(self):
        return self.R.pairs()

    def dis(self) -> Fraction:
        return distortion(self.X, self.Y, self.R)


def _check_t(t):
    t = to_rational(t)
    if not 0 <= t <= 1:
        raise errors.ParameterOutOfRange(f"curve parameter must lie in [0, 1], got {t}")
    return t


def interpolated_matrix(curve: LinearCurve, t) -> list:
    """The |R| x |R| interpolated distance table at any ``t`` in [0, 1].

    At the endpoints this is a pseudometric (pairs sharing a coordinate collapse).
    """
    t = _check_t(t)
    dx, dy = curve.X.d, curve.Y.d
    P = curve.pairs
    return [[(1 - t) * dx[x][u] + t * dy[y][v] for u, v in P] for x, y in P]


def curve_quotient(curve: LinearCurve, t) -> tuple:
    """Index of the point of ``linear_space(curve, t)`` that each pair of R becomes."""
    M = interpolated_matrix(curve, t)
    classes = []
    out = []
    for i in range(len(M)):
        for c, rep in enumerate(classes):
            if M[i][rep] == 0:
                out.append(c)
                break
        else:
            classes.append(i)
            out.append(len(classes) - 1)
    return tuple(out)


def linear_space(curve: LinearCurve, t) -> FiniteMetricSpace:
    t = _check_t(t)
    if t == 0:
        return curve.X
    if t == 1:
        return curve.Y
    # distinct pairs interpolate to positive distances for 0 < t < 1, so the
    # quotient is the identity; it is applied anyway to keep the contract local
    M = interpolated_matrix(curve, t)
    q = curve_quotient(curve, t)
    reps = [q.index(c) for c in range(max(q) + 1)]
    labels = [f"({x},{y})" for x, y in (curve.pairs[r] for r in reps)]
    return FiniteMetricSpace([[M[i][j] for j in reps] for i in reps], labels)


def linear_curve(X, Y, epsilon=0, budget=None) -> LinearCurve:
    """A linear curve through a correspondence with ``dis R <= 2 d_GH + 2 epsilon``."""
    epsilon = to_rational(epsilon)
    if epsilon < 0:
        raise errors.EpsilonOutOfRange(f"epsilon must be >= 0, got {epsilon}")
    d = gh_exact(X, Y, budget=budget).value
    R = feasible(X, Y, 2 * d + 2 * epsilon)
    return LinearCurve(X, Y, R)


# --- betweenness ------------------------------------------------------------

@dataclass(frozen=True)
class Betweenness:
    """Exact check of ``d(X, Y) + d(Y, Z) = d(X, Z)`` (values are d_GH, not doubled)."""

    holds: bool
    d_xy: Fraction
    d_yz: Fraction
    d_xz: Fraction


def is_between(X, Y, Z, budget=None) -> Betweenness:
    """Does ``Y`` lie between ``X`` and ``Z``?"""
    d_xy = gh_exact(X, Y, budget=budget).value
    d_yz = gh_exact(Y, Z, budget=budget).value
    d_xz = gh_exact(X, Z, budget=budget).value
    return Betweenness(d_xy + d_yz == d_xz, d_xy, d_yz, d_xz)


# --- extremality ------------------------------------------------------------

@dataclass(frozen=True)
class Extremality:
    """How ``Y`` sits relative to ``X`` on the sphere picture around Delta_1."""

    twice_distance: Fraction
    diam_x: Fraction
    diam_y: Fraction
    hyperextreme: bool
    subextreme: bool
    mutually_hyperextreme: bool

    @property
    def kind(self) -> str:
        if self.hyperextreme and self.subextreme:
            return "hyperextreme+subextreme"
        if self.mutually_hyperextreme:
            return "mutually_hyperextreme"
        if self.hyperextreme:
            return "hyperextreme"
        if self.subextreme:
            return "subextreme"
        return "none"


def classify_extremality(X, Y, budget=None) -> Extremality:
    twice = 2 * gh_exact(X, Y, budget=budget).value
    if twice == 0:
        raise errors.ZeroDistance("X and Y are isometric; extremality is undefined")
    dx, dy = diameter(X), diameter(Y)
    hyper = twice == dy and dy >= dx
    sub = twice == dy - dx
    mutual = twice == dx == dy and dx > 0
    return Extremality(twice, dx, dy, hyper, sub, mutual)


# --- two-point extensions ---------------------------------------------------

@dataclass(frozen=True)
class TwoPointExtension:
    Y: FiniteMetricSpace
    y1: int
    y2: int
    r1: Fraction
    r2: Fraction
    Z: FiniteMetricSpace
    z1: int  # index of z1 in Z (equals y1 when r1 = 0)
    z2: int


def two_point_extension(Y: FiniteMetricSpace, y1: int, y2: int, r1, r2) -> TwoPointExtension:
    """Stretch the diametral pair ``y1, y2`` of ``Y`` outward by ``r1`` and ``r2``.

    New points come after those of ``Y``: first ``z1`` (if ``r1 > 0``), then ``z2``.
    """
    r1, r2 = to_rational(r1), to_rational(r2)
    if r1 < 0 or r2 < 0:
        raise errors.NegativeRadius(f"radii must be >= 0, got {r1}, {r2}")
    diam = diameter(Y)
    if Y.d[y1][y2] != diam:
        raise errors.NotDiametral(f"|y{y1} y{y2}| = {Y.d[y1][y2]} < diam Y = {diam}")
    n = Y.n
    # each new point is (name, anchor, offset): its distance to y is offset + |y anchor|
    new = [p for p in (("z1", y1, r1), ("z2", y2, r2)) if p[2] > 0]
    size = n + len(new)
    d = [[Fraction(0)] * size for _ in range(size)]
    for i in range(n):
        for j in range(n):
            d[i][j] = Y.d[i][j]
    for k, (_, anchor, r) in enumerate(new):
        p = n + k
        for y in range(n):
            d[p][y] = d[y][p] = r + Y.d[y][anchor]
    if len(new) == 2:
        d[n][n + 1] = d[n + 1][n] = r1 + diam + r2
    labels = [Y.label(i) for i in range(n)] + [name for name, _, _ in new]
    Z = FiniteMetricSpace(d, labels)
    z1 = n if r1 > 0 else y1
    z2 = (n + (r1 > 0)) if r2 > 0 else y2
    assert diameter(Z) == diam + r1 + r2
    return TwoPointExtension(Y, y1, y2, r1, r2, Z, z1, z2)


def diametral_pair(Y: FiniteMetricSpace):
    """First pair ``(i, j)``, ``i <= j``, realizing the diameter."""
    diam = diameter(Y)
    for i in range(Y.n):
        for j in range(i, Y.n):
            if Y.d[i][j] == diam:
                return i, j
    raise AssertionError("unreachable")


# --- extension witnesses ----------------------------------------------------

@dataclass(frozen=True)
class ExtensionWitness:
    """``Z`` with ``Y`` strictly between ``X`` and ``Z``."""

    construction: str
    Z: FiniteMetricSpace
    betweenness: Betweenness

    @property
    def valid(self) -> bool:
        return self.betweenness.holds and self.betweenness.d_yz > 0


def simplex_extension_witness(X, m: int, lam, lam2, budget=None) -> ExtensionWitness:
    """Extend ``[X, lam * Delta_m]`` beyond the simplex to ``lam2 * Delta_m``."""
    lam, lam2 = to_rational(lam), to_rational(lam2)
    if not 1 < m <= X.n:
        raise errors.BadCardinal(f"need 1 < m <= {X.n}, got m = {m}")
    threshold = diameter(X) + alpha_m(X, m)
    if lam < threshold:
        raise errors.LambdaTooSmall(f"need lam >= diam X + alpha_m(X) = {threshold}, got {lam}")
    if lam2 <= lam:
        raise errors.LambdaTooSmall(f"extension needs lam' > lam = {lam}, got {lam2}")
    Y, Z = simplex(m, lam), simplex(m, lam2)
    w = ExtensionWitness(f"simplex {lam2}*Delta_{m}", Z, is_between(X, Y, Z, budget))
    return w


def subextreme_between_delta1(X, Y, budget=None) -> Betweenness:
    """For ``Y`` subextreme with respect to ``X``: ``X`` lies between Delta_1 and ``Y``."""
    if not classify_extremality(X, Y, budget).subextreme:
        raise errors.NotSubextreme("Y is not subextreme with respect to X")
    return is_between(DELTA1, X, Y, budget)


def two_point_extension_witness(X, Y, r=None, budget=None) -> ExtensionWitness:
    """Extend ``[X, Y]`` beyond a subextreme ``Y`` to a single-point extension of ``Y``."""
    y1, y2 = diametral_pair(Y)
    r = diameter(Y) if r is None else to_rational(r)
    ext = two_point_extension(Y, y1, y2, r, 0)
    return ExtensionWitness(
        f"two-point extension Z_{{{r},0}}(y{y1}, y{y2})", ext.Z, is_between(X, Y, ext.Z, budget)
    )


# --- non-extendability ------------------------------------------------------

@dataclass(frozen=True)
class NonExtendabilityCheck:
    """The sufficient condition for ``[X, Y]`` not extending beyond ``Y``, evaluated."""

    extremality: Extremality
    n: int
    partition_x: PartitionOrCovering
    alpha_partition_x: Fraction
    m: int
    covering_y: PartitionOrCovering
    diam_covering_y: Fraction
    cond_extreme: bool
    cond_partition: bool
    cond_covering: bool
    cond_count: bool

    @property
    def holds(self) -> bool:
        return self.cond_extreme and self.cond_partition and self.cond_covering and self.cond_count


def nonextendability_check(X, Y, budget=None) -> NonExtendabilityCheck:
    if X.n < 2 or Y.n < 2:
        raise errors.BadCardinal("both spaces need at least two points")
    ext = classify_extremality(X, Y, budget)
    # the all-singletons partition maximizes the block count and has alpha = min distance
    D_X = PartitionOrCovering(X, tuple(frozenset([i]) for i in range(X.n)))
    alpha = partition_stats(X, D_X).alpha
    C_Y = below_diameter_cover(Y)
    diam_C = partition_stats(Y, C_Y).diam
    m = len(C_Y)
    return NonExtendabilityCheck(
        extremality=ext,
        n=X.n,
        partition_x=D_X,
        alpha_partition_x=alpha,
        m=m,
        covering_y=C_Y,
        diam_covering_y=diam_C,
        cond_extreme=ext.mutually_hyperextreme,
        cond_partition=alpha > 0,
        cond_covering=1 < m <= Y.n and diam_C < diameter(Y),
        cond_count=m <= X.n,
    )


def nonextendability_certificate(X, Y, budget=None) -> Optional[NonExtendabilityCheck]:
    check = nonextendability_check(X, Y, budget)
    return check if check.holds else None


@dataclass(frozen=True)
class ExtendabilityReport:
    extremality: Extremality
    check: Optional[NonExtendabilityCheck]
    extension_witness: Optional[ExtensionWitness]

    @property
    def nonextendable_beyond_y(self) -> Optional[NonExtendabilityCheck]:
        return self.check if self.check is not None and self.check.holds else None


def _as_simplex(Y):
    """``(m, lam)`` if ``Y`` is ``lam * Delta_m`` with ``m >= 2``, else None."""
    vals = {Y.d[i][j] for i in range(Y.n) for j in range(Y.n) if i != j}
    return (Y.n, vals.pop()) if len(vals) == 1 else None


def extend_check(X, Y, budget=None) -> ExtendabilityReport:
    """Classify ``[X, Y]`` and look for a proof or a witness about extending beyond ``Y``.

    A missing certificate never means the segment is extendable; a witness is
    reported only when one of the known constructions applies and its
    betweenness has been verified exactly.
    """
    ext = classify_extremality(X, Y, budget)
    check = nonextendability_check(X, Y, budget) if X.n >= 2 and Y.n >= 2 else None
    witness = None
    if check is None or not check.holds:
        simp = _as_simplex(Y)
        if simp is not None:
            m, lam = simp
            if m <= X.n and lam >= diameter(X) + alpha_m(X, m):
                witness = simplex_extension_witness(X, m, lam, 2 * lam, budget)
        if witness is None and ext.subextreme:
            witness = two_point_extension_witness(X, Y, budget=budget)
        if witness is not None and not witness.valid:
            raise AssertionError(f"constructed extension failed verification: {witness}")
    return ExtendabilityReport(ext, check, witness)


# --- segments ---------------------------------------------------------------

def proper_class_gadget(n: int, k: int, epsilon) -> FiniteMetricSpace:
    """``(1/2) Delta_n`` with one point blown up into ``k`` points at mutual distance ``epsilon``.

    Every such space lies between Delta_1 and Delta_n, whatever ``k`` is.
    """
    if n < 2:
        raise errors.BadCardinal(f"need n >= 2, got {n}")
    if k < 1:
        raise errors.BadCardinal(f"need k >= 1, got {k}")
    eps = to_rational(epsilon)
    if not 0 < eps < Fraction(1, 2):
        raise errors.EpsilonOutOfRange(f"need 0 < epsilon < 1/2, got {eps}")
    half = Fraction(1, 2)
    size = n - 1 + k
    d = [[Fraction(0)] * size for _ in range(size)]
    for i in range(size):
        for j in range(size):
            if i != j:
                d[i][j] = eps if i >= n - 1 and j >= n - 1 else half
    labels = [f"z{i}" for i in range(n - 1)] + [f"a{i}" for i in range(k)]
    return FiniteMetricSpace(d, labels)


def segment_members(
    X, Y, corpus: Sequence[FiniteMetricSpace], distance: Optional[Callable] = None
) -> list:
    """Indices of corpus spaces lying between ``X`` and ``Y``.

    Segments may be proper classes, so membership is decided only for the
    given candidates.  ``distance`` defaults to ``gh_exact(...).value``.
    """
    dist = distance or (lambda A, B: gh_exact(A, B).value)
    total = dist(X, Y)
    return [i for i, Z in enumerate(corpus) if dist(X, Z) + dist(Z, Y) == total]
