"""Boundary-pair transfer between nested grids without full sets.

These operators compute the coarse (or fine) boundary pair of the
restricted (or interpolated) set directly from the input boundary pair.
No full set is ever materialized; all distance queries are local to a
small box around the queried point.
"""

from __future__ import annotations

from itertools import product
from typing import Dict, FrozenSet, Iterator, List, Optional, Tuple

from .geometry import (
    Point,
    ball_points,
    ceil_div,
    chebyshev,
    floor_div,
    moore_neighbors,
)
from .pairs import BoundaryPair, InvalidPairError, validate
from .transfer import GridRatio


class _PointIndex:
    """Nearest-distance queries against a finite point set.

    Points are bucketed by coarse cell so a query with a cutoff scans
    only the input points inside a local box around the query.
    """

    def __init__(self, points: FrozenSet[Point], cell: int):
        self.cell = cell
        self.buckets: Dict[Point, List[Point]] = {}
        for p in points:
            key = tuple(c // cell for c in p)
            self.buckets.setdefault(key, []).append(p)

    def min_dist_within(self, query: Point, cutoff: int) -> Optional[int]:
        """Exact distance to the set if it is <= cutoff, else None."""
        cell = self.cell
        ranges = [
            range((c - cutoff) // cell, (c + cutoff) // cell + 1)
            for c in query
        ]
        best: Optional[int] = None
        for key in product(*ranges):
            for p in self.buckets.get(key, ()):
                d = chebyshev(p, query)
                if best is None or d < best:
                    best = d
        if best is not None and best <= cutoff:
            return best
        return None


def _require_valid(pair: BoundaryPair, spacing: int, role: str) -> None:
    if pair.spacing != spacing:
        raise ValueError(
            f"{role} expects a pair with spacing {spacing}, got {pair.spacing}")
    report = validate(pair)
    if not report.valid:
        raise InvalidPairError(report)


def _lift_restrict_stages(
    pair: BoundaryPair, ratio: GridRatio
) -> Tuple[FrozenSet[Point], FrozenSet[Point], BoundaryPair]:
    """Coarsening with the two intermediate classification sets exposed.

    Test hook: the first two values are supersets of the output sets,
    sandwiched between the boundaries of the restricted set and the
    restricted set (respectively its complement).
    """
    n = ratio.n
    if pair.is_empty:
        empty = BoundaryPair(pair.dim, n, frozenset(), frozenset())
        return frozenset(), frozenset(), empty

    # All coarse points that can carry boundary information lie within
    # 3n/2 of the fine inner boundary.
    domain = set()
    for d in pair.d0:
        domain.update(ball_points(d, 3 * n, n))

    index0 = _PointIndex(pair.d0, n)
    index1 = _PointIndex(pair.d1, n)
    reach = (3 * n) // 2
    h0 = set()
    h1 = set()
    for x in domain:
        dist0 = index0.min_dist_within(x, reach)
        assert dist0 is not None  # every domain point is within reach of d0
        if 2 * dist0 <= n:
            h0.add(x)
        else:
            dist1 = index1.min_dist_within(x, dist0)
            if dist1 is not None:
                h1.add(x)

    # Coarse points are n apart, so distance exactly n means Moore
    # adjacency; h0 and h1 are disjoint by construction.
    d0_hat = frozenset(
        x for x in h0
        if any(q in h1 for q in moore_neighbors(x, n)))
    d1_hat = frozenset(
        x for x in h1
        if any(q in h0 for q in moore_neighbors(x, n)))
    result = BoundaryPair(pair.dim, n, d0_hat, d1_hat)
    return frozenset(h0), frozenset(h1), result


def lift_restrict(pair: BoundaryPair, ratio: GridRatio) -> BoundaryPair:
    """Boundary pair of the restriction of the set behind a fine pair.

    Equals tracing the restriction of the reconstructed set, but works
    on boundary data alone.  The empty pair maps to the empty pair.
    """
    _require_valid(pair, 1, "lift_restrict")
    _, _, result = _lift_restrict_stages(pair, ratio)
    return result


def _axis_range(constraints: List[Tuple[int, int]]) -> range:
    # Integers v with 2*|v - c| <= r for every (c, r) constraint.
    lo = max(ceil_div(2 * c - r, 2) for c, r in constraints)
    hi = min(floor_div(2 * c + r, 2) for c, r in constraints)
    return range(lo, hi + 1)


def _box_intersection(dim: int,
                      constraints: List[Tuple[Point, int]]) -> Iterator[Point]:
    # Fine points within radius r/2 of every center, radii in doubled units.
    per_axis = [
        _axis_range([(center[j], r) for center, r in constraints])
        for j in range(dim)
    ]
    return product(*per_axis)


def lift_interpolate(pair: BoundaryPair, ratio: GridRatio) -> BoundaryPair:
    """Boundary pair of the interpolation of the set behind a coarse pair.

    The output inner boundary collects, for each adjacent coarse pair
    (x in d0, z in d1), the fine points within n/2 of x and within
    (n+1)/2 of z.  The output outer layer collects fine points within
    n/2 of z and (n+2)/2 of x that avoid the half-step balls of every
    d0 point adjacent to z.  Radii are compared in doubled units
    (n, n+1, n+2); accumulation is into sets, so duplicates and
    iteration order cannot affect the result.
    """
    n = ratio.n
    _require_valid(pair, n, "lift_interpolate")
    if pair.is_empty:
        return BoundaryPair(pair.dim, 1, frozenset(), frozenset())

    out0 = set()
    out1 = set()
    for z in pair.d1:
        near0 = [x for x in moore_neighbors(z, n) if x in pair.d0]
        for x in near0:
            out0.update(_box_intersection(pair.dim, [(x, n), (z, n + 1)]))
            for v in _box_intersection(pair.dim, [(z, n), (x, n + 2)]):
                # drop v when it sits in the half-step box of any inner
                # point adjacent to z (inlined for speed)
                keep = True
                for other in near0:
                    inside = True
                    for a, b in zip(v, other):
                        d = a - b
                        if d < 0:
                            d = -d
                        if 2 * d > n:
                            inside = False
                            break
                    if inside:
                        keep = False
                        break
                if keep:
                    out1.add(v)
    return BoundaryPair(pair.dim, 1, frozenset(out0), frozenset(out1))
