import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from conftest import CUBE8, pts, rand_points
from cubeshell.errors import UsageError
from cubeshell.geometry import Box, CenterDomain, center_domain, normalize
from cubeshell.oracle import (exact_oracle_3d, union_area_brute,
                              union_vertices_brute)
from cubeshell.shell import inner_radius_at
from cubeshell.squares import (Square, clip_ball, decide, uncovered_witness,
                               union_of_squares)

F = Fraction


def _sq(x, y, r) -> Square:
    return Square((F(x), F(y)), F(r))


class TestClipBall:
    def test_height_too_large(self):
        assert clip_ball((1, 2, 3), F(2)) is None

    def test_inside(self):
        sq = clip_ball((1, 2, 1), F(2))
        assert sq == Square((1, 2), F(2))

    def test_boundary_height_excluded(self):
        assert clip_ball((0, 0, 2), F(2)) is None

    def test_negative_radius_rejected(self):
        with pytest.raises(UsageError):
            clip_ball((0, 0, 0), F(-1))


class TestUnionOfSquares:
    def test_overlapping_pair_merges_to_rectangle(self):
        ub = union_of_squares([_sq(0, 0, 1), _sq(1, 0, 1)])
        assert ub.component_count == 1
        assert set(ub.vertices) == {(-1, -1), (-1, 1), (2, -1), (2, 1)}
        assert ub.area == 6

    def test_disjoint_pair(self):
        ub = union_of_squares([_sq(0, 0, 1), _sq(9, 0, 1)])
        assert ub.component_count == 2
        assert len(ub.vertices) == 8
        assert ub.area == 8

    def test_empty_input(self):
        ub = union_of_squares([])
        assert ub.vertices == () and ub.edges == ()
        assert ub.component_count == 0 and ub.area == 0

    def test_duplicates_collapse(self):
        ub = union_of_squares([_sq(0, 0, 1)] * 3)
        assert len(ub.vertices) == 4 and ub.area == 4

    def test_matches_arrangement_brute(self, rng):
        for _ in range(30):
            n = rng.randint(1, 20)
            w = F(rng.randint(1, 30), rng.choice((1, 2, 4)))
            sqs = [_sq(F(rng.randint(-50, 50), rng.choice((1, 2))),
                       F(rng.randint(-50, 50), rng.choice((1, 2))), w)
                   for _ in range(n)]
            ub = union_of_squares(sqs)
            assert ub.area == union_area_brute(sqs)
            assert set(ub.vertices) == union_vertices_brute(sqs)

    def test_vertex_count_linear(self, rng):
        for _ in range(10):
            n = rng.randint(5, 40)
            sqs = [_sq(rng.randint(-40, 40), rng.randint(-40, 40), 7)
                   for _ in range(n)]
            ub = union_of_squares(sqs)
            assert len(ub.vertices) <= 16 * n

    def test_edges_are_axis_parallel_and_closed(self, rng):
        sqs = [_sq(rng.randint(-20, 20), rng.randint(-20, 20), 5)
               for _ in range(12)]
        ub = union_of_squares(sqs)
        for a, b in ub.edges:
            assert (a[0] == b[0]) != (a[1] == b[1])
        degree: dict = {}
        for a, b in ub.edges:
            degree[a] = degree.get(a, 0) + 1
            degree[b] = degree.get(b, 0) + 1
        assert all(v % 2 == 0 for v in degree.values())


class TestUncoveredWitness:
    def test_open_interior_misses_corner(self):
        dom = CenterDomain(F(5), Box((F(0), F(0)), (F(2), F(2))), 0)
        assert uncovered_witness(dom, [_sq(1, 1, 1)], F(1)) == (0, 0)

    def test_point_domain_feasible(self):
        dom = center_domain(CUBE8)
        squares = [s for s in (clip_ball(p, F(1, 2)) for p in CUBE8) if s]
        assert uncovered_witness(dom, squares, F(1, 2)) == (0, 0)

    def test_point_domain_covered(self):
        dom = center_domain(CUBE8)
        squares = [s for s in (clip_ball(p, F(2)) for p in CUBE8) if s]
        assert uncovered_witness(dom, squares, F(2)) is None


class TestDecide:
    def test_cube_corners_at_level(self):
        assert decide(CUBE8, F(1)) == (True, (0, 0))

    def test_cube_corners_above_level(self):
        assert decide(CUBE8, F(3, 2)) == (False, None)

    def test_negative_level_rejected(self):
        with pytest.raises(UsageError):
            decide(CUBE8, F(-1))

    def test_threshold_against_oracle(self, rng):
        eps = F(1, 10**9)
        for _ in range(12):
            psn, _ = normalize(rand_points(rng, rng.randint(3, 25)))
            rstar, _ = exact_oracle_3d(psn)
            ok, witness = decide(psn, rstar)
            assert ok and inner_radius_at(psn, witness) >= rstar
            assert decide(psn, rstar + eps) == (False, None)

    def test_monotone(self, rng):
        for _ in range(15):
            psn, _ = normalize(rand_points(rng, rng.randint(3, 20)))
            levels = sorted(F(rng.randint(0, 300), 2) for _ in range(6))
            answers = [decide(psn, lv)[0] for lv in levels]
            # once infeasible, larger levels stay infeasible
            assert answers == sorted(answers, reverse=True)

    def test_witness_soundness(self, rng):
        for _ in range(15):
            psn, _ = normalize(rand_points(rng, rng.randint(3, 20)))
            level = F(rng.randint(0, 200), 2)
            ok, witness = decide(psn, level)
            if ok:
                assert inner_radius_at(psn, witness) >= level
                dom = center_domain(psn)
                assert dom.box.contains(witness)
