"""Brute-force reference implementations and random instance generators.

Everything here is deliberately independent of the efficient code paths
it is used to check: distances and adjacencies are recomputed from
scratch, even where the library offers the same functionality.  The
oracles may be exponential; they enforce explicit budgets.
"""

from __future__ import annotations

import enum
import random
from itertools import product
from typing import FrozenSet, List, Set

from .geometry import Point
from .gridset import GridSet, Mode, Window
from .layers import trace
from .pairs import BoundaryPair, reconstruct
from .transfer import GridRatio, interpolate, restrict

#: Limits for the path-enumeration oracle.
MAX_BRUTE_CELLS = 1600
MAX_BRUTE_LEN = 8

#: Limit for the best-approximation enumeration (2**12 subsets).
MAX_BRUTE_CANDIDATES = 12


class Direction(enum.Enum):
    RESTRICT = "restrict"
    INTERPOLATE = "interpolate"


def random_set(window: Window, density: float, seed: int,
               spacing: int = 1) -> GridSet:
    """A random finite subset of the window grid points.

    Each grid point is included independently with the given probability,
    drawn from a Mersenne Twister (random.Random) seeded with
    seed * 1_000_003 + attempt; an empty draw is retried with the next
    attempt counter, so the result is nonempty and reproducible.
    """
    if not 0 < density <= 1:
        raise ValueError(f"density must be in (0, 1], got {density}")
    cells = list(window.grid_points(spacing))
    if not cells:
        raise ValueError("window contains no grid points")
    attempt = 0
    while True:
        rng = random.Random(seed * 1_000_003 + attempt)
        points = frozenset(p for p in cells if rng.random() < density)
        if points:
            return GridSet(window.dim, spacing, Mode.FINITE, points)
        attempt += 1


def lifted_via_full(pair: BoundaryPair, ratio: GridRatio,
                    direction: Direction) -> BoundaryPair:
    """The definitional route: reconstruct, transfer the full set, trace.

    This is the composition the fast boundary-only operators are judged
    against.
    """
    full = reconstruct(pair)
    if direction is Direction.RESTRICT:
        moved = restrict(full, ratio)
    else:
        moved = interpolate(full, ratio)
    return trace(moved)


def _neighbors(p: Point, spacing: int) -> List[Point]:
    deltas = (-spacing, 0, spacing)
    return [
        tuple(c + d for c, d in zip(p, combo))
        for combo in product(deltas, repeat=len(p))
        if any(combo)
    ]


def separation_bruteforce(pair: BoundaryPair, max_len: int) -> bool:
    """Search for a path from d0 to d1 avoiding both sets in its interior.

    Enumerates simple paths of length up to max_len whose interior stays
    inside the bounding box of the pair inflated by one step; returns
    True when no such path of length above one exists.  Repeated nodes
    never help a violating path, so pruning revisits loses nothing.
    Only tiny instances are accepted (see MAX_BRUTE_CELLS, MAX_BRUTE_LEN).
    """
    if max_len > MAX_BRUTE_LEN:
        raise ValueError(f"max_len {max_len} exceeds budget {MAX_BRUTE_LEN}")
    if not pair.d0 or not pair.d1:
        return True
    s = pair.spacing
    occupied = pair.d0 | pair.d1
    lower = tuple(min(p[j] for p in occupied) - s for j in range(pair.dim))
    upper = tuple(max(p[j] for p in occupied) + s for j in range(pair.dim))
    size = 1
    for lo, hi in zip(lower, upper):
        size *= (hi - lo) // s + 1
    if size > MAX_BRUTE_CELLS:
        raise ValueError(f"instance with {size} cells exceeds budget")

    free = {
        p for p in Window(lower, upper).grid_points(s)
        if p not in occupied
    }

    def reaches_d1(p: Point) -> bool:
        return any(q in pair.d1 for q in _neighbors(p, s))

    def search(node: Point, depth: int, visited: Set[Point]) -> bool:
        # node is an interior point of a candidate path; depth counts
        # interior nodes used so far (path length = depth + 1).
        if depth + 1 > max_len:
            return False
        if reaches_d1(node):
            return True
        if depth + 2 > max_len:
            return False
        for q in _neighbors(node, s):
            if q in free and q not in visited:
                visited.add(q)
                if search(q, depth + 1, visited):
                    return True
                visited.remove(q)
        return False

    for x in sorted(pair.d0):
        for u in _neighbors(x, s):
            if u in free:
                if search(u, 1, {u}):
                    return False
    return True


def best_approx_bruteforce(gridset: GridSet, ratio: GridRatio,
                           window: Window) -> FrozenSet[FrozenSet[Point]]:
    """All nonempty coarse subsets of the window minimizing the Hausdorff
    distance to a fine set.

    The window must contain at most MAX_BRUTE_CANDIDATES coarse points;
    it should be large enough to contain every minimizer (inflating the
    bounding box of the set by half a coarse step suffices, because any
    minimizer stays within that distance).  Hausdorff distances are
    recomputed here with plain double loops.
    """
    if gridset.mode is not Mode.FINITE or not gridset.points:
        raise ValueError("the approximated set must be finite and nonempty")
    if gridset.spacing != 1:
        raise ValueError("the approximated set must live on the fine grid")
    candidates = sorted(window.grid_points(ratio.n))
    if len(candidates) > MAX_BRUTE_CANDIDATES:
        raise ValueError(
            f"{len(candidates)} candidate points exceed the budget of "
            f"{MAX_BRUTE_CANDIDATES}")
    members = sorted(gridset.points)

    def cheb(a: Point, b: Point) -> int:
        return max(abs(x - y) for x, y in zip(a, b))

    # distance tables: candidate -> dist to set, member x candidate matrix
    cand_to_set = [min(cheb(c, x) for x in members) for c in candidates]
    member_to_cand = [[cheb(x, c) for c in candidates] for x in members]

    best_value: float = float("inf")
    minimizers: List[FrozenSet[Point]] = []
    for mask in range(1, 1 << len(candidates)):
        chosen = [i for i in range(len(candidates)) if mask >> i & 1]
        semi_out = max(cand_to_set[i] for i in chosen)
        semi_in = max(min(row[i] for i in chosen) for row in member_to_cand)
        value = max(semi_out, semi_in)
        if value < best_value:
            best_value = value
            minimizers = []
        if value == best_value:
            minimizers.append(frozenset(candidates[i] for i in chosen))
    return frozenset(minimizers)
