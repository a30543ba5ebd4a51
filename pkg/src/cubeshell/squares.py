"""Coverage of the center domain by equal squares.

Slicing every forbidden ball at a trial inner radius by the center plane
yields a set of equal open squares; a center admits that radius exactly
when it avoids all of their interiors. This module builds the boundary of
such a square union and answers the coverage decision with an exact
witness, via a left-to-right sweep over elementary strips.

All sweep arithmetic runs on scaled integers; public results are rationals.
"""

from __future__ import annotations

from bisect import bisect_left, insort
from dataclasses import dataclass
from fractions import Fraction
from math import lcm

import numpy as np

from .errors import PreconditionError, UsageError
from .geometry import (
    Box,
    CenterDomain,
    PlanarPoint,
    PointSet,
    center_domain,
    smallest_enclosing_box,
)
from .rational import Scalar

_NP_LIMIT = 2**60
_NP_MIN_SIZE = 512


@dataclass(frozen=True)
class Square:
    """Axis-aligned square given by center and radius (half side)."""

    center: PlanarPoint
    radius: Scalar
    source_index: int | None = None

    def __post_init__(self):
        if len(self.center) != 2:
            raise PreconditionError("square center must be planar")
        if self.radius <= 0:
            raise PreconditionError("square radius must be positive")


@dataclass(frozen=True)
class UnionBoundary:
    """Boundary of a union of equal closed squares.

    ``vertices`` are the points where the boundary turns or pinches;
    ``edges`` are the maximal axis-parallel segments between them.
    ``component_count`` counts connected components of the closed union.
    """

    vertices: tuple[PlanarPoint, ...]
    edges: tuple[tuple[PlanarPoint, PlanarPoint], ...]
    component_count: int
    area: Scalar


def clip_ball(p, w: Scalar, source_index: int | None = None) -> Square | None:
    """Planar cross-section of the open ball of radius w around p.

    Empty (None) exactly when the point's height is at least w.
    """
    if w < 0:
        raise UsageError("clip radius must be nonnegative")
    if len(p) != 3:
        raise UsageError("clip_ball expects a spatial point")
    if abs(p[-1]) >= w:
        return None
    return Square((p[0], p[1]), w, source_index)


# ---------------------------------------------------------------------------
# Union boundary sweep (integer coordinates).


def _merged(intervals):
    """Merge closed intervals, joining at touch points."""
    out = []
    for lo, hi in sorted(intervals):
        if out and lo <= out[-1][1]:
            if hi > out[-1][1]:
                out[-1][1] = hi
        else:
            out.append([lo, hi])
    return out


def _covers(merged, a, b):
    """True when some merged interval contains [a, b]."""
    i = bisect_left(merged, [a + 1]) - 1
    if i < 0:
        i = 0
    for lo, hi in merged[i:i + 2]:
        if lo <= a and b <= hi:
            return True
    return False


def _axis_runs(sq, w):
    """Vertical boundary runs and their vertices for deduped int squares."""
    enters: dict[int, list[int]] = {}
    exits: dict[int, list[int]] = {}
    for cx, cy in sq:
        enters.setdefault(cx - w, []).append(cy)
        exits.setdefault(cx + w, []).append(cy)
    events = sorted(set(enters) | set(exits))
    active: list[int] = []
    runs = []
    vertices = set()
    for x in events:
        left = [(cy - w, cy + w) for cy in active]
        for cy in exits.get(x, ()):
            active.remove(cy)
        for cy in enters.get(x, ()):
            active.append(cy)
        right = [(cy - w, cy + w) for cy in active]
        ml = _merged(left)
        mr = _merged(right)
        ys = sorted({v for lo, hi in ml + mr for v in (lo, hi)})
        run_start = None
        prev_side = None
        for k in range(len(ys) - 1):
            a, b = ys[k], ys[k + 1]
            cl = _covers(ml, a, b)
            cr = _covers(mr, a, b)
            if cl != cr:
                if run_start is None:
                    run_start = a
                elif prev_side != cl:
                    # pinch: the covered side flips through the breakpoint
                    runs.append((x, run_start, a))
                    vertices.add((x, run_start))
                    vertices.add((x, a))
                    run_start = a
                prev_side = cl
            elif run_start is not None:
                runs.append((x, run_start, a))
                vertices.add((x, run_start))
                vertices.add((x, a))
                run_start = None
        if run_start is not None:
            runs.append((x, run_start, ys[-1]))
            vertices.add((x, run_start))
            vertices.add((x, ys[-1]))
    return runs, vertices


def _union_area(sq, w) -> int:
    events = sorted({v for cx, _ in sq for v in (cx - w, cx + w)})
    total = 0
    for x, nx in zip(events, events[1:]):
        cover = _merged([(cy - w, cy + w) for cx, cy in sq
                         if cx - w <= x and nx <= cx + w])
        total += sum(hi - lo for lo, hi in cover) * (nx - x)
    return total


def _component_count(sq, w) -> int:
    parent = list(range(len(sq)))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for i in range(len(sq)):
        for j in range(i + 1, len(sq)):
            if abs(sq[i][0] - sq[j][0]) <= 2 * w and abs(sq[i][1] - sq[j][1]) <= 2 * w:
                pi, pj = find(i), find(j)
                if pi != pj:
                    parent[pi] = pj
    return sum(1 for i in range(len(sq)) if find(i) == i)


def union_of_squares(squares) -> UnionBoundary:
    """Boundary of the union of equal closed squares."""
    squares = list(squares)
    if not squares:
        return UnionBoundary((), (), 0, Fraction(0))
    radius = squares[0].radius
    if any(s.radius != radius for s in squares):
        raise PreconditionError("union requires equal radii")
    centers = sorted({(Fraction(s.center[0]), Fraction(s.center[1])) for s in squares})
    dens = {radius.denominator if isinstance(radius, Fraction) else 1}
    dens.update(v.denominator for c in centers for v in c)
    U = lcm(*dens)
    sq = [(int(x * U), int(y * U)) for x, y in centers]
    w = int(Fraction(radius) * U)

    v_runs, v_pts = _axis_runs(sq, w)
    h_runs, h_pts = _axis_runs([(cy, cx) for cx, cy in sq], w)

    def pt(x, y):
        return (Fraction(x, U), Fraction(y, U))

    vertices = {pt(x, y) for x, y in v_pts} | {pt(y, x) for x, y in h_pts}
    edges = [(pt(x, y0), pt(x, y1)) for x, y0, y1 in v_runs]
    edges += [(pt(x0, y), pt(x1, y)) for y, x0, x1 in h_runs]
    area = Fraction(_union_area(sq, w), U * U)
    return UnionBoundary(
        tuple(sorted(vertices)),
        tuple(sorted(edges)),
        _component_count(sq, w),
        area,
    )


# ---------------------------------------------------------------------------
# Exact coverage decision over the center domain.


class _Column:
    """Active square centers for one sweep strip, as a sorted y list.

    Tracks how many adjacent gaps leave an uncovered band that meets
    [Y0, Y1], so the per-strip coverage query is O(1).
    """

    __slots__ = ("ys", "w", "y0", "y1", "bad")

    def __init__(self, w, y0, y1):
        self.ys = []
        self.w = w
        self.y0 = y0
        self.y1 = y1
        self.bad = 0

    def _is_bad(self, a, b) -> bool:
        return b - a >= 2 * self.w and a + self.w <= self.y1 and b - self.w >= self.y0

    def add(self, y):
        i = bisect_left(self.ys, y)
        lo = self.ys[i - 1] if i > 0 else None
        hi = self.ys[i] if i < len(self.ys) else None
        if lo is not None and hi is not None and self._is_bad(lo, hi):
            self.bad -= 1
        if lo is not None and self._is_bad(lo, y):
            self.bad += 1
        if hi is not None and self._is_bad(y, hi):
            self.bad += 1
        self.ys.insert(i, y)

    def remove(self, y):
        i = bisect_left(self.ys, y)
        lo = self.ys[i - 1] if i > 0 else None
        hi = self.ys[i + 1] if i + 1 < len(self.ys) else None
        if lo is not None and self._is_bad(lo, y):
            self.bad -= 1
        if hi is not None and self._is_bad(y, hi):
            self.bad -= 1
        if lo is not None and hi is not None and self._is_bad(lo, hi):
            self.bad += 1
        self.ys.pop(i)

    def uncovered(self) -> bool:
        ys = self.ys
        if not ys:
            return True
        return (ys[0] - self.w >= self.y0
                or ys[-1] + self.w <= self.y1
                or self.bad > 0)

    def witness_y(self) -> int:
        ys = self.ys
        if not ys or ys[0] - self.w >= self.y0:
            return self.y0
        if ys[-1] + self.w <= self.y1:
            return ys[-1] + self.w
        for a, b in zip(ys, ys[1:]):
            if self._is_bad(a, b):
                return max(a + self.w, self.y0)
        raise AssertionError("witness requested on a covered strip")


def _prefilter(cxs, cys, w, box):
    """Drop squares that cannot cover any center; detect one covering all.

    Returns (xs, ys, covered_all). All coordinates are even integers.
    """
    X0, X1, Y0, Y1 = box
    n = len(cxs)
    if n >= _NP_MIN_SIZE and (n == 0 or max(max(map(abs, cxs)), max(map(abs, cys)), w) < _NP_LIMIT):
        ax = np.asarray(cxs, dtype=np.int64)
        ay = np.asarray(cys, dtype=np.int64)
        keep = (ax + w > X0) & (ax - w < X1) & (ay + w > Y0) & (ay - w < Y1)
        swallow = (ax - w < X0) & (ax + w > X1) & (ay - w < Y0) & (ay + w > Y1)
        if bool(swallow.any()):
            return [], [], True
        return ax[keep].tolist(), ay[keep].tolist(), False
    xs, ys = [], []
    for x, y in zip(cxs, cys):
        if x + w > X0 and x - w < X1 and y + w > Y0 and y - w < Y1:
            if x - w < X0 and x + w > X1 and y - w < Y0 and y + w > Y1:
                return [], [], True
            xs.append(x)
            ys.append(y)
    return xs, ys, False


def uncovered_scaled(cxs, cys, w, box):
    """Point of box not in any open square, or None. Even ints throughout."""
    X0, X1, Y0, Y1 = box
    cxs, cys, covered_all = _prefilter(cxs, cys, w, box)
    if covered_all:
        return None
    if not cxs:
        return (X0, Y0)
    enters: dict[int, list[int]] = {}
    exits: dict[int, list[int]] = {}
    col = _Column(w, Y0, Y1)
    for x, y in zip(cxs, cys):
        xl, xr = x - w, x + w
        if xl < X0:
            col.add(y)
        elif xl < X1:
            enters.setdefault(xl, []).append(y)
        if X0 < xr <= X1:
            exits.setdefault(xr, []).append(y)
    events = sorted({X0, X1} | set(enters) | set(exits))
    for i, x in enumerate(events):
        for y in exits.get(x, ()):
            col.remove(y)
        if col.uncovered():
            return (x, col.witness_y())
        for y in enters.get(x, ()):
            col.add(y)
        if i + 1 < len(events):
            if col.uncovered():
                return ((x + events[i + 1]) // 2, col.witness_y())
    return None


def _check_normalized(ps: PointSet):
    box = smallest_enclosing_box(ps)
    sides = box.sides
    if sides[-1] != max(sides) or box.lo[-1] + box.hi[-1] != 0:
        raise PreconditionError("point set is not normalized")


def decide(ps: PointSet, r: Scalar) -> tuple[bool, PlanarPoint | None]:
    """Whether some center in the domain keeps every point at distance >= r.

    True means a shell of inner radius r (width half-side minus r) exists;
    the witness center then satisfies the bound exactly.
    """
    if r < 0:
        raise UsageError("decision radius must be nonnegative")
    if ps.dimension != 3:
        raise UsageError("decide expects dimension 3")
    _check_normalized(ps)
    r = Fraction(r)
    dens = {c.denominator for p in ps for c in p}
    dens.add(r.denominator)
    U = 2 * lcm(*dens)
    w = int(r * U)
    dom = center_domain(ps)
    box = (int(dom.box.lo[0] * U), int(dom.box.hi[0] * U),
           int(dom.box.lo[1] * U), int(dom.box.hi[1] * U))
    cxs, cys = [], []
    for p in ps:
        if abs(int(p[2] * U)) < w:
            cxs.append(int(p[0] * U))
            cys.append(int(p[1] * U))
    hit = uncovered_scaled(cxs, cys, w, box)
    if hit is None:
        return (False, None)
    return (True, (Fraction(hit[0], U), Fraction(hit[1], U)))


def uncovered_witness(dom: CenterDomain, squares, w: Scalar) -> PlanarPoint | None:
    """Center in the domain outside every open square, if one exists.

    Tries the arrangement candidates (union-boundary vertices in the box,
    boundary-edge crossings with the box border, box corners) first, then
    falls back to the exact strip sweep; the uncovered set can have measure
    zero, which only the sweep is guaranteed to see.
    """
    squares = list(squares)
    w = Fraction(w)

    def clear(c) -> bool:
        return all(max(abs(c[0] - s.center[0]), abs(c[1] - s.center[1])) >= s.radius
                   for s in squares)

    box = dom.box
    candidates: list[PlanarPoint] = []
    if squares:
        ub = union_of_squares(squares)
        candidates.extend(v for v in ub.vertices if box.contains(v))
        candidates.extend(_border_hits(ub.edges, box))
    candidates.extend(box.corners())
    for c in candidates:
        if box.contains(c) and clear(c):
            return c
    dens = {w.denominator}
    dens.update(v.denominator for b in (box.lo, box.hi) for v in b)
    dens.update(Fraction(v).denominator for s in squares for v in (*s.center, s.radius))
    U = 2 * lcm(*dens)
    ibox = (int(box.lo[0] * U), int(box.hi[0] * U), int(box.lo[1] * U), int(box.hi[1] * U))
    cxs = [int(Fraction(s.center[0]) * U) for s in squares]
    cys = [int(Fraction(s.center[1]) * U) for s in squares]
    hit = uncovered_scaled(cxs, cys, int(w * U), ibox)
    if hit is None:
        return None
    return (Fraction(hit[0], U), Fraction(hit[1], U))


def _border_hits(edges, box: Box) -> list[PlanarPoint]:
    """Intersections of axis-parallel segments with a box border."""
    X0, Y0 = box.lo
    X1, Y1 = box.hi
    out = []
    borders = [
        ((X0, Y0), (X1, Y0)), ((X0, Y1), (X1, Y1)),
        ((X0, Y0), (X0, Y1)), ((X1, Y0), (X1, Y1)),
    ]
    for (a, b) in edges:
        for (c, d) in borders:
            out.extend(_seg_cross(a, b, c, d))
    return sorted(set(out))


def _seg_cross(a, b, c, d):
    """Crossing points of two axis-parallel segments (overlaps -> endpoints)."""
    a_vert = a[0] == b[0]
    c_vert = c[0] == d[0]
    if a_vert != c_vert:
        if a_vert:
            x, (ylo, yhi) = a[0], sorted((a[1], b[1]))
            y, (xlo, xhi) = c[1], sorted((c[0], d[0]))
        else:
            x, (ylo, yhi) = c[0], sorted((c[1], d[1]))
            y, (xlo, xhi) = a[1], sorted((a[0], b[0]))
        if xlo <= x <= xhi and ylo <= y <= yhi:
            return [(x, y)]
        return []
    if a_vert:
        if a[0] != c[0]:
            return []
        lo = max(min(a[1], b[1]), min(c[1], d[1]))
        hi = min(max(a[1], b[1]), max(c[1], d[1]))
        if lo > hi:
            return []
        return [(a[0], lo), (a[0], hi)]
    if a[1] != c[1]:
        return []
    lo = max(min(a[0], b[0]), min(c[0], d[0]))
    hi = min(max(a[0], b[0]), max(c[0], d[0]))
    if lo > hi:
        return []
    return [(lo, a[1]), (hi, a[1])]
