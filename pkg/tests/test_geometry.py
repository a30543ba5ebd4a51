from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from conftest import CUBE8, pts, rand_points
from cubeshell.errors import PreconditionError, UsageError
from cubeshell.geometry import (Box, center_domain, is_smallest_enclosing_cube,
                                linf_dist, normalize, point_set,
                                smallest_enclosing_box)

coord = st.fractions(min_value=-50, max_value=50, max_denominator=16)
triple = st.tuples(coord, coord, coord)


class TestLinfDist:
    def test_three_axes(self):
        assert linf_dist((0, 0, 0), (3, -1, 2)) == 3

    def test_identity(self):
        p = (Fraction(5, 3), Fraction(-2), Fraction(7))
        assert linf_dist(p, p) == 0

    def test_single_axis(self):
        assert linf_dist((1, 2), (1, 5)) == 3

    def test_dimension_mismatch(self):
        with pytest.raises(UsageError):
            linf_dist((1, 2), (1, 2, 3))

    @given(triple, triple, triple)
    def test_metric(self, a, b, c):
        assert linf_dist(a, b) >= 0
        assert linf_dist(a, b) == linf_dist(b, a)
        assert linf_dist(a, c) <= linf_dist(a, b) + linf_dist(b, c)
        assert (linf_dist(a, b) == 0) == (a == b)


class TestSmallestEnclosingBox:
    def test_two_points(self):
        box = smallest_enclosing_box(pts((0, 0, 0), (2, 1, 4)))
        assert box.lo == (0, 0, 0) and box.hi == (2, 1, 4)
        assert box.longest_side == 4

    def test_single_point(self):
        box = smallest_enclosing_box(pts((3, -1)))
        assert box.lo == box.hi == (3, -1)
        assert box.longest_side == 0

    def test_symmetric_pair(self):
        box = smallest_enclosing_box(pts((-1, -1), (1, 1)))
        assert box.lo == (-1, -1) and box.hi == (1, 1)
        assert box.longest_side == 2

    def test_empty_rejected(self):
        with pytest.raises(UsageError):
            point_set([])


class TestNormalize:
    def test_longest_already_last(self):
        psn, nrm = normalize(pts((0, 0, 0), (2, 1, 4)))
        assert psn.points == ((0, 0, -2), (2, 1, 2))
        assert nrm.axis_order == (0, 1, 2)

    def test_longest_axis_moved_last(self):
        psn, nrm = normalize(pts((0, 0, 0), (4, 1, 2)))
        assert psn.points == ((0, 0, -2), (1, 2, 2))
        assert nrm.axis_order == (1, 2, 0)

    def test_already_normalized_is_identity(self):
        psn, nrm = normalize(pts((0, 0, -2), (2, 1, 2)))
        assert nrm.axis_order == (0, 1, 2)
        assert all(t == 0 for t in nrm.translation)
        assert psn.points == ((0, 0, -2), (2, 1, 2))

    @given(st.lists(triple, min_size=1, max_size=12))
    def test_round_trip_identity(self, rows):
        ps = pts(*rows)
        psn, nrm = normalize(ps)
        for original, moved in zip(ps, psn):
            assert nrm.invert(moved) == original
            assert nrm.apply(original) == moved

    @given(st.lists(triple, min_size=2, max_size=12))
    def test_halving_plane_centered(self, rows):
        psn, _ = normalize(pts(*rows))
        box = smallest_enclosing_box(psn)
        assert box.lo[-1] + box.hi[-1] == 0
        assert box.side(psn.dimension - 1) == box.longest_side


class TestCenterDomain:
    def test_generic_pair(self):
        psn, _ = normalize(pts((0, 0, 0), (2, 1, 4)))
        dom = center_domain(psn)
        assert dom.half_side == 2
        assert dom.box.lo == (0, -1) and dom.box.hi == (2, 2)

    def test_cube_corners_degenerate_point(self):
        dom = center_domain(CUBE8)
        assert dom.half_side == 1
        assert dom.box.lo == dom.box.hi == (0, 0)
        assert dom.degeneracy_rank == 2

    def test_planar_interval(self):
        psn, _ = normalize(pts((0, -2), (0, 2)))
        dom = center_domain(psn)
        assert dom.half_side == 2
        assert dom.box.lo == (-2,) and dom.box.hi == (2,)

    @given(st.lists(triple, min_size=1, max_size=14))
    def test_every_center_encloses(self, rows):
        psn, _ = normalize(pts(*rows))
        dom = center_domain(psn)
        for c in dom.box.corners():
            center = c + (Fraction(0),)
            assert all(linf_dist(p, center) <= dom.half_side for p in psn)

    @given(st.lists(triple, min_size=2, max_size=10),
           st.fractions(min_value="1/1000", max_value=1))
    def test_shrinking_fails(self, rows, eps):
        psn, _ = normalize(pts(*rows))
        dom = center_domain(psn)
        if dom.half_side == 0:
            return
        shrunk = dom.half_side - min(eps, dom.half_side)
        for c in dom.box.corners():
            center = c + (Fraction(0),)
            assert any(linf_dist(p, center) > shrunk for p in psn)


class TestIsSmallestEnclosingCube:
    def test_cube_corners_tight(self):
        assert is_smallest_enclosing_cube(CUBE8, (0, 0, 0), 1)

    def test_slack_radius(self):
        assert not is_smallest_enclosing_cube(CUBE8, (0, 0, 0), 2)

    def test_one_axis_touching(self):
        ps = pts((0, 0, 0), (2, 1, 1))
        assert is_smallest_enclosing_cube(ps, (1, 1, 1), 1)

    def test_non_enclosing_rejected(self):
        with pytest.raises(PreconditionError):
            is_smallest_enclosing_cube(CUBE8, (0, 0, 0), Fraction(1, 2))

    @given(st.lists(triple, min_size=1, max_size=12))
    def test_true_at_domain_corners(self, rows):
        psn, _ = normalize(pts(*rows))
        dom = center_domain(psn)
        for c in dom.box.corners():
            assert is_smallest_enclosing_cube(psn, c + (Fraction(0),),
                                              dom.half_side)


def test_box_rejects_inverted_interval():
    with pytest.raises(PreconditionError):
        Box((Fraction(1),), (Fraction(0),))
