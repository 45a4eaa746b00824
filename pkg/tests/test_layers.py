import random

import pytest

from gridpairs import formats
from gridpairs.geometry import chebyshev, moore_neighbors
from gridpairs.gridset import GridSet, Mode, Window, complement, member
from gridpairs.layers import (
    boundary0,
    boundary1,
    layer,
    recover_boundaries,
    trace,
)

from conftest import fixture_text

FIG1A_POINTS = {(x, y) for x in range(2, 10) for y in range(2, 7)} \
    - {(x, y) for x in range(3, 6) for y in range(3, 6)}


def random_gridset(rng, span=6, allow_cofinite=True):
    pts = frozenset(
        (rng.randrange(-span, span), rng.randrange(-span, span))
        for _ in range(rng.randrange(1, 14)))
    mode = Mode.COFINITE if allow_cofinite and rng.random() < 0.3 \
        else Mode.FINITE
    return GridSet(2, 1, mode, pts)


def layer_by_definition(gridset, k):
    """Independent route: distance to the inner boundary.

    For k >= 1, complement points at distance k steps from the inner
    boundary; for k <= -1, members at distance |k| steps from it.  This
    is the defining form, as opposed to the distance-to-set form the
    library propagates.
    """
    s = gridset.spacing
    b0 = boundary0(gridset).points
    if not b0:
        return frozenset()
    lo = tuple(min(p[j] for p in b0) - (abs(k) + 1) * s for j in range(2))
    hi = tuple(max(p[j] for p in b0) + (abs(k) + 1) * s for j in range(2))
    result = set()
    for cell in Window(lo, hi).grid_points(s):
        d = min(chebyshev(cell, b) for b in b0)
        if k >= 1 and not member(gridset, cell) and d == k * s:
            result.add(cell)
        elif k <= -1 and member(gridset, cell) and d == -k * s:
            result.add(cell)
    return frozenset(result)


class TestBoundary0:
    def test_singleton_is_all_boundary(self):
        M = GridSet.finite({(0, 0)})
        assert boundary0(M) == M

    def test_full_grid_has_none(self):
        assert boundary0(GridSet.full_grid(2)).points == frozenset()

    def test_rectangle_with_hole(self):
        pair = formats.parse_text(fixture_text("fig1trace.pair"))
        assert boundary0(GridSet.finite(FIG1A_POINTS)).points == pair.d0


class TestBoundary1:
    def test_singleton_moore_ring(self):
        M = GridSet.finite({(0, 0)})
        assert boundary1(M).points == frozenset(moore_neighbors((0, 0), 1))

    def test_full_grid_has_none(self):
        assert boundary1(GridSet.full_grid(2)).points == frozenset()

    def test_rectangle_with_hole(self):
        pair = formats.parse_text(fixture_text("fig1trace.pair"))
        assert boundary1(GridSet.finite(FIG1A_POINTS)).points == pair.d1


class TestLayer:
    def test_layer_one_equals_boundary1(self):
        rng = random.Random(3)
        for _ in range(40):
            M = random_gridset(rng)
            assert layer(M, 1) == boundary1(M)

    def test_layer_zero_equals_boundary0(self):
        rng = random.Random(4)
        for _ in range(40):
            M = random_gridset(rng)
            assert layer(M, 0) == boundary0(M)

    @pytest.mark.parametrize("s", [1, 3])
    def test_five_by_five_block(self, s):
        block = GridSet.finite(
            {(x * s, y * s) for x in range(5) for y in range(5)}, s)
        inner_ring = {(x * s, y * s) for x in range(1, 4) for y in range(1, 4)} \
            - {(2 * s, 2 * s)}
        assert layer(block, -1).points == frozenset(inner_ring)
        assert layer(block, -2).points == frozenset({(2 * s, 2 * s)})
        assert layer(block, -3).points == frozenset()

    def test_flip_between_set_and_complement(self):
        rng = random.Random(9)
        for _ in range(30):
            M = random_gridset(rng)
            if M.is_empty or M.is_full_grid:
                continue
            for k in range(-3, 5):
                assert layer(M, k) == layer(complement(M), 1 - k), (M, k)

    def test_agrees_with_definition_by_inner_boundary_distance(self):
        rng = random.Random(10)
        for _ in range(25):
            M = random_gridset(rng)
            if M.is_empty or M.is_full_grid:
                continue
            for k in range(-3, 5):
                if k == 0:
                    continue
                assert layer(M, k).points == layer_by_definition(M, k), (M, k)

    def test_trivial_sets_have_no_layers(self):
        for M in (GridSet.empty(2), GridSet.full_grid(2)):
            for k in range(-2, 3):
                assert layer(M, k).points == frozenset()


class TestTrace:
    def test_full_grid_traces_to_empty_pair(self):
        pair = trace(GridSet.full_grid(2))
        assert pair.is_empty

    def test_singleton(self):
        pair = trace(GridSet.finite({(0, 0)}))
        assert pair.d0 == frozenset({(0, 0)})
        assert len(pair.d1) == 8

    def test_figure_pair(self):
        expected = formats.parse_text(fixture_text("fig1trace.pair"))
        assert trace(GridSet.finite(FIG1A_POINTS)) == expected

    def test_empty_set_rejected(self):
        with pytest.raises(ValueError):
            trace(GridSet.empty(2))


class TestRecoverBoundaries:
    def test_idempotent_on_true_boundaries(self):
        M = GridSet.finite(FIG1A_POINTS)
        b0, b1 = boundary0(M), boundary1(M)
        assert recover_boundaries(b0, b1) == (b0, b1)

    def test_empty_h1(self):
        h0 = GridSet.finite({(0, 0), (1, 0)})
        h1 = GridSet.empty(2)
        r0, r1 = recover_boundaries(h0, h1)
        assert r0.points == frozenset() and r1.points == frozenset()

    def test_supersets_reduce_to_trace(self):
        rng = random.Random(21)
        for _ in range(30):
            M = random_gridset(rng, allow_cofinite=False)
            pts = M.points
            lo = tuple(min(p[j] for p in pts) - 2 for j in range(2))
            hi = tuple(max(p[j] for p in pts) + 2 for j in range(2))
            complement_window = frozenset(
                c for c in Window(lo, hi).grid_points(1) if c not in pts)
            h0 = GridSet.finite(pts, dim=2)
            h1 = GridSet(2, 1, Mode.FINITE, complement_window)
            r0, r1 = recover_boundaries(h0, h1)
            pair = trace(M)
            assert r0.points == pair.d0
            assert r1.points == pair.d1


class TestStructuralIdentities:
    def test_boundaries_empty_only_for_trivial_sets(self):
        rng = random.Random(13)
        for _ in range(40):
            M = random_gridset(rng)
            empty0 = not boundary0(M).points
            empty1 = not boundary1(M).points
            trivial = M.is_empty or M.is_full_grid
            assert empty0 == empty1 == trivial

    def test_boundary_swap_under_complement(self):
        rng = random.Random(14)
        for _ in range(40):
            M = random_gridset(rng)
            assert boundary0(M) == boundary1(complement(M))
            assert boundary1(M) == boundary0(complement(M))

    def test_membership_dichotomy_by_boundary_distances(self):
        # membership is equivalent to being strictly closer to the inner
        # boundary than to the outer layer
        rng = random.Random(15)
        for _ in range(25):
            M = random_gridset(rng)
            if M.is_empty or M.is_full_grid:
                continue
            b0, b1 = boundary0(M).points, boundary1(M).points
            lo = tuple(min(p[j] for p in M.points) - 2 for j in range(2))
            hi = tuple(max(p[j] for p in M.points) + 2 for j in range(2))
            for cell in Window(lo, hi).grid_points(1):
                d0 = min(chebyshev(cell, b) for b in b0)
                d1 = min(chebyshev(cell, b) for b in b1)
                assert member(M, cell) == (d0 < d1)

    def test_neighbor_characterization_of_boundaries(self):
        rng = random.Random(16)
        for _ in range(25):
            M = random_gridset(rng)
            if M.is_empty or M.is_full_grid:
                continue
            b0, b1 = boundary0(M).points, boundary1(M).points
            probe = set(b0) | set(b1)
            for p in b0 | b1:
                probe.update(moore_neighbors(p, 1))
            for cell in probe:
                in_b0 = any(q in b1 for q in moore_neighbors(cell, 1)) \
                    and member(M, cell)
                assert (cell in b0) == in_b0
                in_b1 = any(q in b0 for q in moore_neighbors(cell, 1)) \
                    and not member(M, cell)
                assert (cell in b1) == in_b1
