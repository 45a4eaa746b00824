"""Finite and cofinite subsets of a grid, with set algebra and metrics.

A GridSet represents a subset of the grid (spacing * Z^m) that is either
finite (the stored points are the members) or cofinite (the stored points
are the finitely many grid points *excluded* from the set).  Cofinite
sets close the data model under complement and make the full grid
representable.
"""

from __future__ import annotations

import enum
from collections import deque
from dataclasses import dataclass
from typing import Dict, FrozenSet, Iterable, Iterator, Optional, Tuple

from .geometry import (
    INFINITE,
    Distance,
    Point,
    ball_points,
    bounding_box,
    box_grid_points,
    chebyshev,
    moore_neighbors,
)


class Mode(enum.Enum):
    FINITE = "finite"
    COFINITE = "cofinite"


def _check_points(points: FrozenSet[Point], dim: int, spacing: int) -> None:
    for p in points:
        if len(p) != dim:
            raise ValueError(f"point {p} has dimension {len(p)}, expected {dim}")
        if any(c % spacing for c in p):
            raise ValueError(f"point {p} is not on the spacing-{spacing} grid")


@dataclass(frozen=True)
class GridSet:
    """A finite or cofinite subset of the grid spacing * Z^dim.

    In FINITE mode the stored points are the members; in COFINITE mode
    they are the excluded grid points.  FINITE with no points is the
    empty set, COFINITE with no points is the full grid.
    """

    dim: int
    spacing: int
    mode: Mode
    points: FrozenSet[Point]

    def __post_init__(self) -> None:
        if self.dim < 1:
            raise ValueError(f"dimension must be at least 1, got {self.dim}")
        if self.spacing < 1:
            raise ValueError(f"spacing must be positive, got {self.spacing}")
        if not isinstance(self.points, frozenset):
            object.__setattr__(self, "points", frozenset(self.points))
        _check_points(self.points, self.dim, self.spacing)

    @classmethod
    def finite(cls, points: Iterable[Point], spacing: int = 1,
               dim: Optional[int] = None) -> "GridSet":
        pts = frozenset(tuple(p) for p in points)
        if dim is None:
            if not pts:
                raise ValueError("dim is required for an empty point set")
            dim = len(next(iter(pts)))
        return cls(dim, spacing, Mode.FINITE, pts)

    @classmethod
    def cofinite(cls, excluded: Iterable[Point], spacing: int = 1,
                 dim: Optional[int] = None) -> "GridSet":
        pts = frozenset(tuple(p) for p in excluded)
        if dim is None:
            if not pts:
                raise ValueError("dim is required for an empty point set")
            dim = len(next(iter(pts)))
        return cls(dim, spacing, Mode.COFINITE, pts)

    @classmethod
    def empty(cls, dim: int, spacing: int = 1) -> "GridSet":
        return cls(dim, spacing, Mode.FINITE, frozenset())

    @classmethod
    def full_grid(cls, dim: int, spacing: int = 1) -> "GridSet":
        return cls(dim, spacing, Mode.COFINITE, frozenset())

    @property
    def is_empty(self) -> bool:
        return self.mode is Mode.FINITE and not self.points

    @property
    def is_full_grid(self) -> bool:
        return self.mode is Mode.COFINITE and not self.points


@dataclass(frozen=True)
class Window:
    """Inclusive axis-aligned box in fine units, used to bound enumerations."""

    lower: Point
    upper: Point

    def __post_init__(self) -> None:
        if len(self.lower) != len(self.upper):
            raise ValueError("window corners have different dimensions")
        if any(lo > hi for lo, hi in zip(self.lower, self.upper)):
            raise ValueError(f"degenerate window {self.lower}..{self.upper}")

    @property
    def dim(self) -> int:
        return len(self.lower)

    def inflate(self, amount: int) -> "Window":
        return Window(
            tuple(c - amount for c in self.lower),
            tuple(c + amount for c in self.upper),
        )

    def contains(self, point: Point) -> bool:
        return all(lo <= c <= hi
                   for lo, c, hi in zip(self.lower, point, self.upper))

    def grid_points(self, spacing: int) -> Iterator[Point]:
        return box_grid_points(self.lower, self.upper, spacing)


def window_of(points: Iterable[Point]) -> Window:
    lower, upper = bounding_box(points)
    return Window(lower, upper)


def member(gridset: GridSet, point: Point) -> bool:
    """Membership under the finite/cofinite semantics.

    The query point must lie on the set's grid.
    """
    point = tuple(point)
    if len(point) != gridset.dim:
        raise ValueError(f"point {point} has wrong dimension")
    if any(c % gridset.spacing for c in point):
        raise ValueError(f"point {point} is off the spacing-{gridset.spacing} grid")
    if gridset.mode is Mode.FINITE:
        return point in gridset.points
    return point not in gridset.points


def complement(gridset: GridSet) -> GridSet:
    """Complement within the grid; an exact involution."""
    mode = Mode.COFINITE if gridset.mode is Mode.FINITE else Mode.FINITE
    return GridSet(gridset.dim, gridset.spacing, mode, gridset.points)


def _nearest_on_grid_distance(point: Point, spacing: int) -> int:
    # Chebyshev distance from an integer point to the nearest grid point.
    best = 0
    for c in point:
        r = c % spacing
        best = max(best, min(r, spacing - r))
    return best


def dist_point_set(point: Point, gridset: GridSet) -> Distance:
    """Chebyshev distance from a point to a grid set; INFINITE for the empty set."""
    point = tuple(point)
    if gridset.mode is Mode.FINITE:
        if not gridset.points:
            return INFINITE
        return min(chebyshev(point, q) for q in gridset.points)
    # Cofinite: search outward ring by ring; the excluded set is finite,
    # so some ring contains a member.
    spacing = gridset.spacing
    radius = _nearest_on_grid_distance(point, spacing)
    while True:
        for q in ball_points(point, 2 * radius, spacing):
            if q not in gridset.points:
                return chebyshev(point, q) if radius else 0
        radius += 1


def hausdorff_semi(first: GridSet, second: GridSet) -> Distance:
    """One-sided Hausdorff distance sup_{x in first} dist(x, second).

    Exact for every finite/cofinite combination.  When both sets are
    cofinite they must share a spacing.
    """
    if first.is_empty:
        return 0
    if second.is_empty:
        return INFINITE
    if first.mode is Mode.FINITE:
        return max(dist_point_set(p, second) for p in first.points)
    if second.mode is Mode.FINITE:
        # A cofinite set has members arbitrarily far from any finite set.
        return INFINITE
    if first.spacing != second.spacing:
        raise ValueError("cofinite sets must share a spacing for Hausdorff distances")
    # Both cofinite: only members of `first` that are excluded from
    # `second` contribute a positive distance.
    contributors = second.points - first.points
    if not contributors:
        return 0
    return max(dist_point_set(p, second) for p in contributors)


def hausdorff(first: GridSet, second: GridSet) -> Distance:
    """Symmetric Hausdorff distance, max of the two semi-distances."""
    return max(hausdorff_semi(first, second), hausdorff_semi(second, first))


def is_connected(gridset: GridSet) -> bool:
    """Whether any two members are joined by a Moore path inside the set.

    Defined for finite nonempty sets only.
    """
    if gridset.mode is not Mode.FINITE or not gridset.points:
        raise ValueError("connectivity is defined for finite nonempty sets")
    points = gridset.points
    start = min(points)
    seen = {start}
    queue = deque([start])
    while queue:
        p = queue.popleft()
        for q in moore_neighbors(p, gridset.spacing):
            if q in points and q not in seen:
                seen.add(q)
                queue.append(q)
    return len(seen) == len(points)


def distance_map(sources: Iterable[Point], window: Window, spacing: int,
                 limit: Optional[int] = None) -> Dict[Point, int]:
    """Multi-source Chebyshev distances over the grid points of a box.

    Breadth-first propagation with Moore steps; each round adds one
    spacing to the distance.  Because Chebyshev geodesics between points
    of a box stay inside the box, the values equal the true distances to
    the source set whenever the box contains the sources.  `limit` stops
    the propagation beyond that distance.
    """
    dist: Dict[Point, int] = {}
    frontier = []
    for p in sources:
        if p not in dist:
            dist[p] = 0
            frontier.append(p)
    current = 0
    while frontier:
        current += spacing
        if limit is not None and current > limit:
            break
        new_frontier = []
        for p in frontier:
            for q in moore_neighbors(p, spacing):
                if q not in dist and window.contains(q):
                    dist[q] = current
                    new_frontier.append(q)
        frontier = new_frontier
    return dist


@dataclass(frozen=True)
class Component:
    """A connected piece of the grid complement of two finite sets.

    For unbounded components, `points` holds only the in-window part.
    """

    points: FrozenSet[Point]
    unbounded: bool
    adjacent_d0: bool
    adjacent_d1: bool


def components_within(window: Window, spacing: int,
                      d0: FrozenSet[Point],
                      d1: FrozenSet[Point]) -> Tuple[Component, ...]:
    """Connected components of the window grid minus d0 and d1.

    Components touching the window frame are merged into designated
    unbounded components: one for dim >= 2 (the exterior of a box is
    Moore-connected), two (left and right rays) for dim == 1.  Each
    component carries flags for Moore adjacency to d0 and to d1.

    The window must contain every point of d0 and d1 inflated by one
    grid step, so that all relevant adjacencies are realized inside it.
    """
    occupied = d0 | d1
    for p in occupied:
        if not all(lo + spacing <= c <= hi - spacing for lo, c, hi
                   in zip(window.lower, p, window.upper)):
            raise ValueError(
                f"window too small: {p} is within one step of the frame")

    cells = sorted(window.grid_points(spacing))
    if not cells:
        raise ValueError("window contains no grid points")
    axis_lo = tuple(min(c[j] for c in cells) for j in range(window.dim))
    axis_hi = tuple(max(c[j] for c in cells) for j in range(window.dim))

    def frame_axes(cell: Point) -> Tuple[bool, bool]:
        touches_lo = any(c == lo for c, lo in zip(cell, axis_lo))
        touches_hi = any(c == hi for c, hi in zip(cell, axis_hi))
        return touches_lo, touches_hi

    cell_set = set(cells)
    seen = set(occupied)
    raw = []
    for seed in cells:
        if seed in seen:
            continue
        comp = []
        touches_lo = touches_hi = False
        adj0 = adj1 = False
        queue = deque([seed])
        seen.add(seed)
        while queue:
            p = queue.popleft()
            comp.append(p)
            lo, hi = frame_axes(p)
            touches_lo |= lo
            touches_hi |= hi
            for q in moore_neighbors(p, spacing):
                occupied_hit = False
                if q in d0:
                    adj0 = True
                    occupied_hit = True
                if q in d1:  # not exclusive: callers may pass overlapping sets
                    adj1 = True
                    occupied_hit = True
                if not occupied_hit and q in cell_set and q not in seen:
                    seen.add(q)
                    queue.append(q)
        raw.append((frozenset(comp), touches_lo, touches_hi, adj0, adj1))

    bounded = [e for e in raw if not (e[1] or e[2])]
    if window.dim == 1:
        # In 1-D each window end is a single cell, so at most one
        # component touches each end.  A component touching both ends
        # joins the two rays into a single unbounded component.
        if any(e[1] and e[2] for e in raw):
            merged_lists = [[e for e in raw if e[1] or e[2]]]
        else:
            left = [e for e in raw if e[1]]
            right = [e for e in raw if e[2]]
            merged_lists = [g for g in (left, right) if g]
        components = [
            Component(
                frozenset().union(*(e[0] for e in group)),
                True,
                any(e[3] for e in group),
                any(e[4] for e in group),
            )
            for group in merged_lists
        ]
    else:
        frame_touching = [e for e in raw if e[1] or e[2]]
        components = []
        if frame_touching:
            components.append(Component(
                frozenset().union(*(e[0] for e in frame_touching)),
                True,
                any(e[3] for e in frame_touching),
                any(e[4] for e in frame_touching),
            ))

    components.extend(
        Component(pts, False, adj0, adj1)
        for pts, _, _, adj0, adj1 in sorted(bounded, key=lambda e: min(e[0]))
    )
    return tuple(components)
