"""Boundary layers of a grid set and the trace to its boundary pair.

Layer k of a set M is, for k >= 1, the slice of the complement at
distance exactly k steps from M, and for k <= 0 the slice of M at
distance exactly 1 - k steps from the complement.  Layer 0 is the inner
boundary, layer 1 the first outer layer.
"""

from __future__ import annotations

from typing import FrozenSet, Set, Tuple

from .geometry import Point, bounding_box, moore_neighbors
from .gridset import GridSet, Mode, Window, distance_map
from .pairs import BoundaryPair


def _finite(model: GridSet, points: Set[Point]) -> GridSet:
    return GridSet(model.dim, model.spacing, Mode.FINITE, frozenset(points))


def boundary0(gridset: GridSet) -> GridSet:
    """Members having at least one Moore neighbor outside the set.

    Empty exactly for the empty set and the full grid.
    """
    s = gridset.spacing
    if gridset.mode is Mode.FINITE:
        pts = {
            p for p in gridset.points
            if any(q not in gridset.points for q in moore_neighbors(p, s))
        }
    else:
        excluded = gridset.points
        pts = set()
        for e in excluded:
            pts.update(q for q in moore_neighbors(e, s) if q not in excluded)
    return _finite(gridset, pts)


def boundary1(gridset: GridSet) -> GridSet:
    """Non-members at distance exactly one step from the set."""
    s = gridset.spacing
    if gridset.mode is Mode.FINITE:
        pts = set()
        for p in gridset.points:
            pts.update(q for q in moore_neighbors(p, s)
                       if q not in gridset.points)
    else:
        excluded = gridset.points
        pts = {
            e for e in excluded
            if any(q not in excluded for q in moore_neighbors(e, s))
        }
    return _finite(gridset, pts)


def layer(gridset: GridSet, k: int) -> GridSet:
    """Layer k of the set, computed by multi-source distance propagation.

    For k >= 1 these are complement points at distance k steps from the
    set; for k <= 0, members at distance 1 - k steps from the complement.
    Both reductions are windowed: outside a box around the stored points
    every layer is empty.
    """
    if gridset.is_empty or gridset.is_full_grid:
        return _finite(gridset, set())
    s = gridset.spacing
    stored = gridset.points
    if gridset.mode is Mode.FINITE:
        if k >= 1:
            window = Window(*bounding_box(stored)).inflate(k * s)
            dmap = distance_map(stored, window, s, limit=k * s)
            pts = {p for p, d in dmap.items() if d == k * s}
        else:
            target = (1 - k) * s
            window = Window(*bounding_box(stored)).inflate(s)
            sources = [p for p in window.grid_points(s) if p not in stored]
            dmap = distance_map(sources, window, s, limit=target)
            pts = {p for p, d in dmap.items() if d == target}
    else:
        # Cofinite: all layers live near the excluded set.
        if k >= 1:
            window = Window(*bounding_box(stored)).inflate((k + 1) * s)
            sources = [p for p in window.grid_points(s) if p not in stored]
            dmap = distance_map(sources, window, s, limit=k * s)
            pts = {p for p in stored if dmap.get(p) == k * s}
        else:
            target = (1 - k) * s
            window = Window(*bounding_box(stored)).inflate(target)
            dmap = distance_map(stored, window, s, limit=target)
            pts = {p for p, d in dmap.items() if d == target}
    return _finite(gridset, pts)


def trace(gridset: GridSet) -> BoundaryPair:
    """The boundary pair (inner boundary, first outer layer) of a set.

    Rejects the empty set, whose boundary pair is not defined; the full
    grid traces to the empty pair.
    """
    if gridset.is_empty:
        raise ValueError("the empty set has no boundary pair")
    # one fused neighbor scan instead of separate boundary0/boundary1
    # passes; every boundary adjacency is seen from the stored side
    s = gridset.spacing
    stored = gridset.points
    inner: Set[Point] = set()
    outer: Set[Point] = set()
    for p in stored:
        for q in moore_neighbors(p, s):
            if q not in stored:
                inner.add(p)
                outer.add(q)
    if gridset.mode is Mode.FINITE:
        d0, d1 = inner, outer
    else:
        d0, d1 = outer, inner
    return BoundaryPair(gridset.dim, gridset.spacing,
                        frozenset(d0), frozenset(d1))


def recover_boundaries(h0: GridSet, h1: GridSet) -> Tuple[GridSet, GridSet]:
    """Recover a boundary pair from supersets of its two components.

    Assuming the inner boundary of some set M is sandwiched between h0
    and M, and its first outer layer between h1 and the complement of M,
    the boundaries are exactly the points of each superset at distance
    one step from the other superset.
    """
    if h0.mode is not Mode.FINITE or h1.mode is not Mode.FINITE:
        raise ValueError("boundary recovery expects finite sets")
    if h0.spacing != h1.spacing or h0.dim != h1.dim:
        raise ValueError("the two sets must live on the same grid")
    s = h0.spacing

    def at_one_step(source: FrozenSet[Point], other: FrozenSet[Point]) -> Set[Point]:
        result = set()
        for p in source:
            if p in other:
                continue
            if any(q in other for q in moore_neighbors(p, s)):
                result.add(p)
        return result

    return (
        _finite(h0, at_one_step(h0.points, h1.points)),
        _finite(h1, at_one_step(h1.points, h0.points)),
    )
