"""Points, boxes, the Chebyshev metric, and the center domain.

All coordinates are exact rationals, so every predicate here is decided
without rounding. Dimensions 1..3 are what the solvers accept, but the
primitives in this module work for any d >= 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Iterable, Iterator, Sequence

from .errors import PreconditionError, UsageError
from .rational import Scalar

Coords = tuple[Scalar, ...]
# A point of the halving plane; one coordinate fewer than the input points.
PlanarPoint = tuple[Scalar, ...]


def as_point(values: Iterable) -> Coords:
    """Coerce a coordinate sequence to a tuple of exact rationals."""
    return tuple(Fraction(v) for v in values)


@dataclass(frozen=True)
class PointSet:
    """An ordered, nonempty collection of points sharing one dimension."""

    points: tuple[Coords, ...]
    dimension: int

    def __post_init__(self):
        if not self.points:
            raise UsageError("point set must be nonempty")
        for p in self.points:
            if len(p) != self.dimension:
                raise UsageError(
                    f"point {p} has dimension {len(p)}, expected {self.dimension}"
                )

    def __len__(self) -> int:
        return len(self.points)

    def __iter__(self) -> Iterator[Coords]:
        return iter(self.points)


def point_set(rows: Iterable[Iterable]) -> PointSet:
    """Build a PointSet from raw coordinate rows, coercing to rationals."""
    pts = tuple(as_point(row) for row in rows)
    if not pts:
        raise UsageError("point set must be nonempty")
    return PointSet(pts, len(pts[0]))


@dataclass(frozen=True)
class Box:
    """Axis-aligned box given by closed per-axis intervals [lo_i, hi_i]."""

    lo: Coords
    hi: Coords

    def __post_init__(self):
        if len(self.lo) != len(self.hi):
            raise PreconditionError("box lo/hi dimension mismatch")
        for a, b in zip(self.lo, self.hi):
            if a > b:
                raise PreconditionError("box interval has lo > hi")

    @property
    def dimension(self) -> int:
        return len(self.lo)

    def side(self, axis: int) -> Scalar:
        return self.hi[axis] - self.lo[axis]

    @property
    def sides(self) -> Coords:
        return tuple(b - a for a, b in zip(self.lo, self.hi))

    @property
    def longest_side(self) -> Scalar:
        return max(self.sides, default=Fraction(0))

    @property
    def midpoint(self) -> Coords:
        return tuple((a + b) / 2 for a, b in zip(self.lo, self.hi))

    def contains(self, p: Coords) -> bool:
        if len(p) != self.dimension:
            raise UsageError("point/box dimension mismatch")
        return all(a <= x <= b for x, a, b in zip(p, self.lo, self.hi))

    def corners(self) -> tuple[Coords, ...]:
        """Distinct corners, lexicographically sorted (degenerate axes collapse)."""
        out = sorted(set(product(*zip(self.lo, self.hi))))
        return tuple(out)


def linf_dist(p: Coords, q: Coords) -> Scalar:
    """Chebyshev distance: the largest per-axis absolute difference."""
    if len(p) != len(q):
        raise UsageError(f"dimension mismatch: {len(p)} vs {len(q)}")
    return max(abs(a - b) for a, b in zip(p, q))


def smallest_enclosing_box(ps: PointSet) -> Box:
    lo = tuple(min(p[i] for p in ps) for i in range(ps.dimension))
    hi = tuple(max(p[i] for p in ps) for i in range(ps.dimension))
    return Box(lo, hi)


@dataclass(frozen=True)
class Normalization:
    """Axis relabeling plus a translation along the final axis.

    ``axis_order[j]`` is the source axis placed at position j; the box's
    longest axis always lands last, and the translation centers it at 0,
    so the halving plane becomes {last coordinate = 0}.
    """

    axis_order: tuple[int, ...]
    translation: Coords

    def apply(self, p: Coords) -> Coords:
        permuted = tuple(p[a] for a in self.axis_order)
        return tuple(x + t for x, t in zip(permuted, self.translation))

    def invert(self, p: Coords) -> Coords:
        shifted = tuple(x - t for x, t in zip(p, self.translation))
        out = [None] * len(shifted)
        for j, a in enumerate(self.axis_order):
            out[a] = shifted[j]
        return tuple(out)

    def apply_set(self, ps: PointSet) -> PointSet:
        return PointSet(tuple(self.apply(p) for p in ps), ps.dimension)

    def invert_set(self, ps: PointSet) -> PointSet:
        return PointSet(tuple(self.invert(p) for p in ps), ps.dimension)


def normalize(ps: PointSet) -> tuple[PointSet, Normalization]:
    """Relabel axes so the longest box side is axis d, centered at 0.

    Ties among longest sides go to the smallest axis index. The returned
    transform maps original points to normalized ones; ``invert`` undoes it.
    """
    box = smallest_enclosing_box(ps)
    sides = box.sides
    h = box.longest_side
    longest = min(i for i, s in enumerate(sides) if s == h)
    order = tuple(i for i in range(ps.dimension) if i != longest) + (longest,)
    mid = (box.lo[longest] + box.hi[longest]) / 2
    translation = (Fraction(0),) * (ps.dimension - 1) + (-mid,)
    norm = Normalization(order, translation)
    return norm.apply_set(ps), norm


@dataclass(frozen=True)
class CenterDomain:
    """Centers of all smallest enclosing hypercubes, as a box in the plane.

    ``box`` lives in the halving plane {x_d = 0} (dimension d-1);
    ``half_side`` is the shared outer radius h/2; ``degeneracy_rank``
    counts the box axes with zero extent.
    """

    half_side: Scalar
    box: Box
    degeneracy_rank: int

    @property
    def diameter(self) -> Scalar:
        return self.box.longest_side


def center_domain(psn: PointSet) -> CenterDomain:
    """Center domain of a normalized point set.

    Per axis i < d the interval is [max_i - h/2, min_i + h/2]; every such
    interval is nonempty because h is the longest box side.
    """
    box = smallest_enclosing_box(psn)
    h = box.longest_side
    half = h / 2
    lo = []
    hi = []
    for i in range(psn.dimension - 1):
        lo.append(box.hi[i] - half)
        hi.append(box.lo[i] + half)
    cbox = Box(tuple(lo), tuple(hi))
    rank = sum(1 for a, b in zip(cbox.lo, cbox.hi) if a == b)
    return CenterDomain(half, cbox, rank)


def is_smallest_enclosing_cube(ps: PointSet, center: Coords, radius: Scalar) -> bool:
    """True iff the cube B(center, radius) encloses ps as tightly as possible.

    Tight means some axis has points on both of its facets. Raises if the
    cube does not enclose the set at all.
    """
    if len(center) != ps.dimension:
        raise UsageError("center/point dimension mismatch")
    for p in ps:
        if linf_dist(p, center) > radius:
            raise PreconditionError("cube does not enclose the point set")
    for i in range(ps.dimension):
        lo_face = center[i] - radius
        hi_face = center[i] + radius
        if any(p[i] == lo_face for p in ps) and any(p[i] == hi_face for p in ps):
            return True
    return False
