"""Boundary pairs: axiom validation and reconstruction of the full set.

A boundary pair (D0, D1) consists of the inner boundary of a set (members
with a neighbor outside) and the first outer layer (non-members adjacent
to the set).  The five axioms checked by `validate` characterize exactly
the pairs arising this way, and `reconstruct` inverts the boundary
extraction.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import FrozenSet, Iterable, Optional, Tuple

from .geometry import Point, moore_neighbors
from .gridset import (
    GridSet,
    Mode,
    Window,
    components_within,
    distance_map,
    window_of,
)


@dataclass(frozen=True)
class BoundaryPair:
    """Two disjoint finite point sets on a common grid.

    d0 plays the role of the inner boundary, d1 of the first outer
    layer.  Construction only checks grid alignment; whether the pair is
    a genuine boundary pair is decided by `validate`.
    """

    dim: int
    spacing: int
    d0: FrozenSet[Point]
    d1: FrozenSet[Point]

    def __post_init__(self) -> None:
        if self.dim < 1:
            raise ValueError(f"dimension must be at least 1, got {self.dim}")
        if self.spacing < 1:
            raise ValueError(f"spacing must be positive, got {self.spacing}")
        for name in ("d0", "d1"):
            pts = getattr(self, name)
            if not isinstance(pts, frozenset):
                object.__setattr__(self, name, frozenset(pts))
                pts = getattr(self, name)
            for p in pts:
                if len(p) != self.dim:
                    raise ValueError(f"{name} point {p} has wrong dimension")
                if any(c % self.spacing for c in p):
                    raise ValueError(
                        f"{name} point {p} is off the spacing-{self.spacing} grid")

    @classmethod
    def of(cls, d0: Iterable[Point], d1: Iterable[Point], spacing: int = 1,
           dim: Optional[int] = None) -> "BoundaryPair":
        d0 = frozenset(tuple(p) for p in d0)
        d1 = frozenset(tuple(p) for p in d1)
        if dim is None:
            pool = d0 | d1
            if not pool:
                raise ValueError("dim is required for an empty pair")
            dim = len(next(iter(pool)))
        return cls(dim, spacing, d0, d1)

    @property
    def is_empty(self) -> bool:
        return not self.d0 and not self.d1


@dataclass(frozen=True)
class AxiomCheck:
    passed: bool
    witness: Optional[Point] = None


@dataclass(frozen=True)
class AxiomReport:
    """Outcome of the five boundary-pair axioms, with failure witnesses.

    The pair (empty, empty) is the distinguished boundary pair of the
    full grid and passes by definition.
    """

    is_empty_pair: bool
    nonempty: AxiomCheck
    disjoint: AxiomCheck
    d0_touches_d1: AxiomCheck
    d1_touches_d0: AxiomCheck
    separation: AxiomCheck

    _NAMES = ("nonempty", "disjoint", "d0_touches_d1", "d1_touches_d0",
              "separation")

    @property
    def valid(self) -> bool:
        return self.is_empty_pair or all(
            getattr(self, name).passed for name in self._NAMES)

    @property
    def failed(self) -> Tuple[str, ...]:
        if self.is_empty_pair:
            return ()
        return tuple(name for name in self._NAMES
                     if not getattr(self, name).passed)

    def describe(self) -> str:
        if self.is_empty_pair:
            return "empty pair: represents the full grid, valid by definition"
        lines = []
        for index, name in enumerate(self._NAMES, start=1):
            check = getattr(self, name)
            status = "pass" if check.passed else "FAIL"
            line = f"axiom {index} ({name}): {status}"
            if not check.passed and check.witness is not None:
                line += f"  witness: {check.witness}"
            lines.append(line)
        return "\n".join(lines)


class InvalidPairError(ValueError):
    """Raised when an operation requires a valid boundary pair."""

    def __init__(self, report: AxiomReport):
        self.report = report
        super().__init__(
            "invalid boundary pair; failed axioms: "
            + ", ".join(report.failed))


_PASS = AxiomCheck(True)


def _adjacency_check(origin: FrozenSet[Point], target: FrozenSet[Point],
                     spacing: int) -> AxiomCheck:
    for p in sorted(origin):
        if not any(q in target for q in moore_neighbors(p, spacing)):
            return AxiomCheck(False, p)
    return _PASS


def validate(pair: BoundaryPair) -> AxiomReport:
    """Check the five boundary-pair axioms and report per-axiom results.

    The separation axiom (no short-cut from d0 to d1 through free space)
    is decided through the connected components of the grid complement
    of d0 | d1: a violating path exists if and only if some component is
    Moore-adjacent to both sets.
    """
    if pair.is_empty:
        return AxiomReport(True, _PASS, _PASS, _PASS, _PASS, _PASS)

    if pair.d0 and pair.d1:
        nonempty = _PASS
    else:
        nonempty = AxiomCheck(False)

    overlap = pair.d0 & pair.d1
    disjoint = _PASS if not overlap else AxiomCheck(False, min(overlap))

    d0_touches_d1 = _adjacency_check(pair.d0, pair.d1, pair.spacing)
    d1_touches_d0 = _adjacency_check(pair.d1, pair.d0, pair.spacing)

    separation = _PASS
    window = window_of(pair.d0 | pair.d1).inflate(pair.spacing)
    for comp in components_within(window, pair.spacing, pair.d0, pair.d1):
        if comp.adjacent_d0 and comp.adjacent_d1:
            separation = AxiomCheck(False, min(comp.points))
            break

    return AxiomReport(False, nonempty, disjoint, d0_touches_d1,
                       d1_touches_d0, separation)


def reconstruct(pair: BoundaryPair) -> GridSet:
    """The unique grid set whose boundary pair is the given pair.

    Each complement component of d0 | d1 lies entirely inside or outside
    the set and, for a valid pair, is adjacent to exactly one of d0/d1;
    it is classified by that adjacency.  The result is finite when the
    unbounded components attach to d1 and cofinite when they attach to
    d0.  The empty pair reconstructs to the full grid.
    """
    report = validate(pair)
    if not report.valid:
        raise InvalidPairError(report)
    if pair.is_empty:
        return GridSet.full_grid(pair.dim, pair.spacing)

    window = window_of(pair.d0 | pair.d1).inflate(pair.spacing)
    components = components_within(window, pair.spacing, pair.d0, pair.d1)

    unbounded_sides = set()
    inside_bounded = []
    outside_bounded = []
    for comp in components:
        if not (comp.adjacent_d0 or comp.adjacent_d1):
            raise AssertionError("complement component adjacent to neither set")
        side_d0 = comp.adjacent_d0
        if comp.unbounded:
            unbounded_sides.add(side_d0)
        elif side_d0:
            inside_bounded.append(comp.points)
        else:
            outside_bounded.append(comp.points)

    if len(unbounded_sides) > 1:
        raise ValueError(
            "the two infinite rays reconstruct to different sides, so the "
            "set is neither finite nor cofinite and cannot be represented")
    if unbounded_sides == {True}:
        excluded = pair.d1.union(*outside_bounded) if outside_bounded else pair.d1
        return GridSet(pair.dim, pair.spacing, Mode.COFINITE, excluded)
    members = pair.d0.union(*inside_bounded) if inside_bounded else pair.d0
    return GridSet(pair.dim, pair.spacing, Mode.FINITE, members)


def closer_set_window(pair: BoundaryPair, window: Window) -> FrozenSet[Point]:
    """Window grid points strictly closer to d0 than to d1.

    Computed from two multi-source distance propagations over a box
    enclosing the window and both sets; serves as the distance-based
    oracle for `reconstruct`.
    """
    if not pair.d0 or not pair.d1:
        raise ValueError("both sets of the pair must be nonempty")
    everything = list(pair.d0 | pair.d1)
    everything.extend((window.lower, window.upper))
    lower = tuple(min(p[j] for p in everything) for j in range(pair.dim))
    upper = tuple(max(p[j] for p in everything) for j in range(pair.dim))
    domain = Window(lower, upper)
    dist0 = distance_map(pair.d0, domain, pair.spacing)
    dist1 = distance_map(pair.d1, domain, pair.spacing)
    return frozenset(
        p for p in window.grid_points(pair.spacing)
        if dist0[p] < dist1[p]
    )
