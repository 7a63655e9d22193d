"""Distances from one-distance spaces (simplexes) to finite metric spaces."""

from __future__ import annotations

from fractions import Fraction

from . import errors
from .metric import FiniteMetricSpace, diameter, to_rational
from .partitions import alpha_m, d_m, enumerate_partitions, partition_stats


def _check(X, m, lam):
    if not 1 < m <= X.n:
        raise errors.BadCardinal(f"need 1 < m <= {X.n}, got m = {m}")
    lam = to_rational(lam)
    if lam <= 0:
        raise errors.NonPositiveScale(f"simplex edge must be positive, got {lam}")
    return lam


def dist_to_simplex(X: FiniteMetricSpace, m: int, lam) -> Fraction:
    """``d_GH(lam * Delta_m, X)`` as a minimum over ``m``-partitions of ``X``.

    Each partition ``D`` contributes ``max(diam D, lam - alpha(D), diam X - lam)``;
    the distance is half the smallest contribution.
    """
    lam = _check(X, m, lam)
    spread = diameter(X) - lam
    best = None
    for D in enumerate_partitions(X, m):
        s = partition_stats(X, D)
        v = max(s.diam, lam - s.alpha, spread)
        if best is None or v < best:
            best = v
    return best / 2


def dist_to_simplex_large_lambda(X: FiniteMetricSpace, m: int, lam) -> Fraction:
    """Closed form ``(lam - alpha_m(X)) / 2``, valid once ``lam >= diam X + alpha_m(X)``."""
    lam = _check(X, m, lam)
    a = alpha_m(X, m)
    if lam < diameter(X) + a:
        raise errors.LambdaTooSmall(
            f"closed form needs lam >= diam X + alpha_m(X) = {diameter(X) + a}, got {lam}"
        )
    return (lam - a) / 2


def dist_to_simplex_alpha0(X: FiniteMetricSpace, m: int, lam) -> Fraction:
    """Closed form ``max(d_m(X), lam, diam X - lam) / 2`` for ``alpha_m(X) = 0``.

    A finite metric space always has ``alpha_m(X) > 0`` (every inter-block
    distance is a positive distance), so this raises AlphaNotZero on every
    valid input.  It is kept for completeness of the formula family.
    """
    lam = _check(X, m, lam)
    a = alpha_m(X, m)
    if a != 0:
        raise errors.AlphaNotZero(f"alpha_{m}(X) = {a}, closed form needs 0")
    return max(d_m(X, m), lam, diameter(X) - lam) / 2


def simplex_distance(X: FiniteMetricSpace, m: int, lam):
    """Route to the fastest applicable formula; returns ``(value, route)``."""
    lam = _check(X, m, lam)
    if lam >= diameter(X) + alpha_m(X, m):
        return dist_to_simplex_large_lambda(X, m, lam), "large-lambda"
    return dist_to_simplex(X, m, lam), "partition-minimum"
