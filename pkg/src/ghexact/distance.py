"""Exact Gromov-Hausdorff distance between finite metric spaces.

``2 d_GH(X, Y)`` is the least distortion of a correspondence between ``X`` and
``Y``.  Two independent engines compute it:

* :func:`gh_exact` runs a depth-first branch-and-bound that gives each point of
  ``X`` a nonempty set of partners in ``Y``;
* :func:`gh_level_search` binary-searches the finite set of possible
  distortion values, deciding each level with :func:`feasible`, which grows a
  set of mutually compatible pairs until both sides are covered.

Both work on integer matrices obtained by clearing denominators, so all
comparisons are exact.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from . import errors
from .metric import FiniteMetricSpace, diameter
from .relations import Correspondence, distortion


@dataclass(frozen=True)
class DistanceCertificate:
    value: Fraction
    optimal: Correspondence
    lower_bound: Fraction
    lower_bound_witness: str
    nodes: int
    engine: str

    @property
    def twice_value(self) -> Fraction:
        return 2 * self.value


def _integer_matrices(X, Y):
    scale = 1
    for M in (X.d, Y.d):
        for row in M:
            for v in row:
                scale = scale * v.denominator // math.gcd(scale, v.denominator)
    dx = [[v.numerator * (scale // v.denominator) for v in row] for row in X.d]
    dy = [[v.numerator * (scale // v.denominator) for v in row] for row in Y.d]
    return dx, dy, scale


def gh_lower_bound(X: FiniteMetricSpace, Y: FiniteMetricSpace) -> Fraction:
    return abs(diameter(X) - diameter(Y)) / 2


def gh_upper_bound_max_diam(X: FiniteMetricSpace, Y: FiniteMetricSpace) -> Fraction:
    return max(diameter(X), diameter(Y)) / 2


class _Counter:
    """Node counter; ``lower`` and ``upper`` are integer distortions at ``scale``."""

    def __init__(self, budget, scale):
        self.budget = budget
        self.scale = scale
        self.nodes = 0
        self.lower = None
        self.upper = None

    def tick(self):
        self.nodes += 1
        if self.budget is not None and self.nodes > self.budget:
            raise errors.SearchBudgetExceeded(
                self.nodes, self._as_rational(self.lower), self._as_rational(self.upper)
            )

    def _as_rational(self, v):
        return None if v is None else Fraction(v, self.scale)


# --- engine (a): branch-and-bound over row subsets --------------------------

def _branch_and_bound(dx, dy, counter):
    nx, ny = len(dx), len(dy)
    full = (1 << ny) - 1
    # y_j sits at bit ny-1-j, so integer order on masks is lex order on bitstrings
    bit = [1 << (ny - 1 - j) for j in range(ny)]
    members = [[j for j in range(ny) if m & bit[j]] for m in range(full + 1)]
    sub_diam = [max((dy[a][b] for a in mem for b in mem), default=0) for mem in members]
    diam_x = max(max(r) for r in dx)
    diam_y = max(max(r) for r in dy)
    lower = abs(diam_x - diam_y)

    # spread[a][y][m] = max over y' in mask m of | a - |y y'| |, one table per
    # x-distance a; each mask extends the mask without its first member
    first = [mem[0] if mem else None for mem in members]
    rest = [m & ~bit[first[m]] if m else 0 for m in range(full + 1)]
    spread = {}
    for a in {dx[r][i] for r in range(nx) for i in range(r)}:
        table = []
        for y in range(ny):
            row = [0] * (full + 1)
            for m in range(1, full + 1):
                v = abs(a - dy[y][first[m]])
                row[m] = v if v > row[rest[m]] else row[rest[m]]
            table.append(row)
        spread[a] = table

    # distortions are integers, so "c <= best" before the first leaf (ties with
    # the trivial upper bound allowed) and "c < best" after are both "c < limit"
    state = {"best": max(diam_x, diam_y), "rows": None, "limit": max(diam_x, diam_y) + 1}
    counter.lower = lower

    def finished():
        return state["rows"] is not None and state["best"] == lower

    def dfs(i, covered, cur, colcost, rows):
        counter.upper = state["best"]
        counter.tick()
        if i == nx:
            state.update(best=cur, rows=list(rows), limit=cur)
            return
        limit = state["limit"]
        need = full & ~covered
        reach = 0
        for r in range(i, nx):
            row_ok = 0
            for y, c in enumerate(colcost[r]):
                if c < limit:
                    row_ok |= bit[y]
            if not row_ok:
                return
            reach |= row_ok
            if r == i:
                allowed = row_ok
        if need & ~reach:
            return
        cc = colcost[i]
        last = i == nx - 1
        for m in range(1, full + 1):
            if m & ~allowed:
                continue
            if last and (covered | m) != full:
                continue
            c = max(cur, sub_diam[m], max(cc[y] for y in members[m]))
            if c >= state["limit"]:
                continue
            new_colcost = colcost[: i + 1]
            for r in range(i + 1, nx):
                sp = spread[dx[r][i]]
                old = colcost[r]
                new_colcost.append([
                    o if o >= sp[y][m] else sp[y][m] for y, o in enumerate(old)
                ])
            rows.append(m)
            dfs(i + 1, covered | m, c, new_colcost, rows)
            rows.pop()
            if finished():
                return

    dfs(0, 0, 0, [[0] * ny for _ in range(nx)], [])
    rows = [frozenset(members[m]) for m in state["rows"]]
    return state["best"], Correspondence(nx, ny, tuple(rows)), lower


def gh_exact(
    X: FiniteMetricSpace, Y: FiniteMetricSpace, budget: Optional[int] = None
) -> DistanceCertificate:
    """Exact ``d_GH(X, Y)`` with an optimal correspondence.

    Among all optimal correspondences the one with the lexicographically
    smallest :meth:`Correspondence.bitstring` is returned.  ``budget`` caps the
    number of search nodes; exceeding it raises
    :class:`~ghexact.errors.SearchBudgetExceeded`.
    """
    dx, dy, scale = _integer_matrices(X, Y)
    counter = _Counter(budget, scale)
    best, R, lower = _branch_and_bound(dx, dy, counter)
    value = Fraction(best, 2 * scale)
    lb = Fraction(lower, 2 * scale)
    if best == lower:
        witness = f"diameter gap: |diam X - diam Y| = {Fraction(lower, scale)} = dis R"
    else:
        witness = (
            f"branch-and-bound exhausted: no correspondence has distortion "
            f"below {Fraction(best, scale)}"
        )
    return DistanceCertificate(value, R, lb, witness, counter.nodes, "branch-and-bound")


# --- engine (b): level search -----------------------------------------------

def _feasible(dx, dy, h, counter=None):
    """First correspondence (as a pair list) with distortion <= h, or None."""
    nx, ny = len(dx), len(dy)
    # compat[x][y][u]: mask of v such that (u, v) is compatible with (x, y)
    compat = [
        [
            [sum(1 << v for v in range(ny) if abs(dx[x][u] - dy[y][v]) <= h) for u in range(nx)]
            for y in range(ny)
        ]
        for x in range(nx)
    ]
    start = [(1 << ny) - 1] * nx
    chosen = []

    def rec(cand, covx, covy):
        if counter is not None:
            counter.tick()
        free_x = [x for x in range(nx) if not covx >> x & 1]
        free_y = [y for y in range(ny) if not covy >> y & 1]
        if not free_x and not free_y:
            return True
        for x in free_x:
            if not cand[x]:
                return False
        union = 0
        for c in cand:
            union |= c
        for y in free_y:
            if not union >> y & 1:
                return False
        if free_x:
            x = free_x[0]
            options = [(x, y) for y in range(ny) if cand[x] >> y & 1]
        else:
            y = free_y[0]
            options = [(x, y) for x in range(nx) if cand[x] >> y & 1]
        for x, y in options:
            row = compat[x][y]
            chosen.append((x, y))
            if rec([cand[u] & row[u] for u in range(nx)], covx | 1 << x, covy | 1 << y):
                return True
            chosen.pop()
        return False

    return list(chosen) if rec(start, 0, 0) else None


def feasible(X: FiniteMetricSpace, Y: FiniteMetricSpace, h) -> Optional[Correspondence]:
    """A correspondence with distortion at most ``h``, or None if none exists."""
    h = Fraction(h)
    if h < 0:
        raise errors.PreconditionError(f"distortion level must be >= 0, got {h}")
    dx, dy, scale = _integer_matrices(X, Y)
    h_int = math.floor(h * scale)
    pairs = _feasible(dx, dy, h_int)
    if pairs is None:
        return None
    return Correspondence.from_pairs(X.n, Y.n, pairs)


def candidate_levels(X: FiniteMetricSpace, Y: FiniteMetricSpace):
    """Every value ``| |xx'| - |yy'| |``, sorted; dis R always lies in this set."""
    xs = {v for row in X.d for v in row}
    ys = {v for row in Y.d for v in row}
    return sorted({abs(a - b) for a in xs for b in ys})


def gh_level_search(
    X: FiniteMetricSpace, Y: FiniteMetricSpace, budget: Optional[int] = None
) -> DistanceCertificate:
    """Exact ``d_GH`` as the smallest feasible distortion level."""
    dx, dy, scale = _integer_matrices(X, Y)
    xs = {v for row in dx for v in row}
    ys = {v for row in dy for v in row}
    levels = sorted({abs(a - b) for a in xs for b in ys})
    counter = _Counter(budget, scale)
    lo, hi = 0, len(levels) - 1
    best_pairs = None
    while lo < hi:
        counter.lower, counter.upper = levels[lo], levels[hi]
        mid = (lo + hi) // 2
        pairs = _feasible(dx, dy, levels[mid], counter)
        if pairs is not None:
            hi, best_pairs = mid, pairs
        else:
            lo = mid + 1
    if best_pairs is None:
        best_pairs = _feasible(dx, dy, levels[lo], counter)
    R = Correspondence.from_pairs(X.n, Y.n, best_pairs)
    level = Fraction(levels[lo], scale)
    assert distortion(X, Y, R) == level
    if lo == 0:
        witness = "distortion level 0 is feasible"
    else:
        witness = f"level search: distortion {Fraction(levels[lo - 1], scale)} infeasible"
    return DistanceCertificate(
        level / 2, R, gh_lower_bound(X, Y), witness, counter.nodes, "level-search"
    )
