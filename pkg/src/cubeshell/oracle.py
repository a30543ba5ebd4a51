"""Independent brute-force reference solver for cross-checking.

Everything here recomputes answers from first principles: candidate points
are enumerated exhaustively (pair bisector pieces, triple equidistances,
domain corners, per-level square arrangements) and the envelope is
evaluated at each. Deliberately shares nothing with the sweep or the
Voronoi construction beyond the scalar/point primitives, so a bug there
cannot hide here.

Internally coordinates are scaled to integers; results convert back to
exact rationals.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from fractions import Fraction
from math import lcm

import numpy as np

from .errors import PreconditionError, UsageError
from .geometry import Box, CenterDomain, PlanarPoint, PointSet, center_domain, smallest_enclosing_box
from .rational import Scalar

ORACLE_CAP_ENV = "CUBESHELL_ORACLE_MAX_N"
_DEFAULT_CAP = 60
_NP_LIMIT = 2**60

TAG_TRIPLE = "tripleEquidistant"
TAG_PAIR = "pairBisectorOnBoundary"
TAG_CORNER = "cCorner"
TAG_PLATEAU = "plateauArrangement"


@dataclass(frozen=True)
class CandidatePool:
    """Candidate centers with the enumeration class each came from."""

    points: tuple[tuple[PlanarPoint, str], ...]


def _check_normalized_3d(psn: PointSet):
    if psn.dimension != 3:
        raise UsageError("this oracle handles dimension 3 only")
    box = smallest_enclosing_box(psn)
    sides = box.sides
    if sides[-1] != max(sides) or box.lo[-1] + box.hi[-1] != 0:
        raise PreconditionError("point set is not normalized")


def _cap() -> int:
    return int(os.environ.get(ORACLE_CAP_ENV, str(_DEFAULT_CAP)))


class _Frame:
    """Integer view of a normalized instance: coordinates times U."""

    def __init__(self, psn: PointSet):
        dens = {c.denominator for p in psn for c in p}
        self.U = 4 * lcm(*dens)
        U = self.U
        self.xs = [int(p[0] * U) for p in psn]
        self.ys = [int(p[1] * U) for p in psn]
        self.za = [abs(int(p[2] * U)) for p in psn]
        dom = center_domain(psn)
        self.X0 = int(dom.box.lo[0] * U)
        self.X1 = int(dom.box.hi[0] * U)
        self.Y0 = int(dom.box.lo[1] * U)
        self.Y1 = int(dom.box.hi[1] * U)
        self.half = int(dom.half_side * U)
        # distinct projections with the largest |z| sharing each
        proj: dict[tuple[int, int], int] = {}
        for x, y, z in zip(self.xs, self.ys, self.za):
            key = (x, y)
            proj[key] = max(proj.get(key, 0), z)
        self.sites = sorted(proj)
        self.site_zmax = proj
        self.np_ok = max(
            (max(abs(v) for v in self.xs + self.ys) if self.xs else 0),
            self.half,
            abs(self.X0), abs(self.X1), abs(self.Y0), abs(self.Y1),
        ) < _NP_LIMIT

    def to_scalar(self, v: int | Fraction) -> Scalar:
        return Fraction(v, 1) / self.U if isinstance(v, int) else v / self.U

    def point_out(self, q) -> PlanarPoint:
        return (self.to_scalar(q[0]), self.to_scalar(q[1]))


# ---------------------------------------------------------------------------
# True bisector pieces of a projected site pair. Each piece is a parametric
# run base + t*dir with dir components in {-1,0,1}, clipped to a box; all
# arithmetic stays integral because the site coordinates are multiples of 4.


def _apply_ops(ops, pt):
    x, y = pt
    for op in ops:
        if op == "swap":
            x, y = y, x
        elif op == "fx":
            x = -x
        else:
            y = -y
    return (x, y)


def _unapply_ops(ops, pt):
    x, y = pt
    for op in reversed(ops):
        if op == "swap":
            x, y = y, x
        elif op == "fx":
            x = -x
        else:
            y = -y
    return (x, y)


def _clip_run(base, d, t0, t1, box):
    """Clip base + t*d, t in [t0, t1] (None = unbounded) to a box. Integral."""
    X0, X1, Y0, Y1 = box
    for b, dc, lo, hi in ((base[0], d[0], X0, X1), (base[1], d[1], Y0, Y1)):
        if dc == 0:
            if not lo <= b <= hi:
                return None
        else:
            ta = (lo - b) * dc
            tb = (hi - b) * dc
            enter, leave = min(ta, tb), max(ta, tb)
            t0 = enter if t0 is None else max(t0, enter)
            t1 = leave if t1 is None else min(t1, leave)
    if t0 is None or t1 is None or t0 > t1:
        return None
    p0 = (base[0] + t0 * d[0], base[1] + t0 * d[1])
    p1 = (base[0] + t1 * d[0], base[1] + t1 * d[1])
    return (p0, p1)


def _pair_runs(a, b):
    """Unclipped bisector pieces of two distinct planar sites (integer coords).

    Covers the full equidistant set: the zigzag for generic pairs, the whole
    diagonal line for |dx| = |dy|, and for axis-aligned pairs the midline
    segment joining the two cone apexes plus the four cone-boundary rays.
    """
    dx = b[0] - a[0]
    dy = b[1] - a[1]
    mx = (a[0] + b[0]) // 2
    my = (a[1] + b[1]) // 2
    runs = []
    if dy == 0:
        o = abs(dx) // 2
        runs.append(((mx, my - o), (0, 1), 0, 2 * o))
        for sx in (1, -1):
            runs.append(((mx, my + o), (sx, 1), 0, None))
            runs.append(((mx, my - o), (sx, -1), 0, None))
    elif dx == 0:
        o = abs(dy) // 2
        runs.append(((mx - o, my), (1, 0), 0, 2 * o))
        for sy in (1, -1):
            runs.append(((mx + o, my), (1, sy), 0, None))
            runs.append(((mx - o, my), (-1, sy), 0, None))
    elif abs(dx) == abs(dy):
        d = (1, -1) if (dx > 0) == (dy > 0) else (1, 1)
        runs.append(((mx, my), d, None, None))
    else:
        ops = []
        cx, cy = dx, dy
        if abs(cy) > abs(cx):
            ops.append("swap")
            cx, cy = cy, cx
        if cx < 0:
            ops.append("fx")
            cx = -cx
        if cy < 0:
            ops.append("fy")
            cy = -cy
        cmx, cmy = _apply_ops(ops, (mx, my))
        g = (cx - cy) // 2
        canonical = [
            ((cmx, cmy - g), (0, 1), 0, 2 * g),
            ((cmx, cmy + g), (-1, 1), 0, None),
            ((cmx, cmy - g), (1, -1), 0, None),
        ]
        for base, d, t0, t1 in canonical:
            runs.append((_unapply_ops(ops, base), _unapply_ops(ops, d), t0, t1))
    return runs


def _pair_pieces(a, b, box):
    out = []
    for base, d, t0, t1 in _pair_runs(a, b):
        seg = _clip_run(base, d, t0, t1, box)
        if seg is not None:
            out.append(seg)
    return out


def _dist(q, s) -> Fraction:
    return max(abs(q[0] - s[0]), abs(q[1] - s[1]))


def _roots_on_segment(p0, p1, a, k):
    """Points on segment p0-p1 (within a bisector of pair containing a)
    where the distance to k equals the distance to a. Exact."""
    vx = p1[0] - p0[0]
    vy = p1[1] - p0[1]
    if vx == 0 and vy == 0:
        q = (Fraction(p0[0]), Fraction(p0[1]))
        return [q] if _dist(q, k) == _dist(q, a) else []
    cuts = {Fraction(0), Fraction(1)}
    for s in (a, k):
        # regime switches of the piecewise-linear distance along the run
        if vx != 0:
            cuts.add(Fraction(s[0] - p0[0], vx))
        if vy != 0:
            cuts.add(Fraction(s[1] - p0[1], vy))
        den = vx - vy
        if den != 0:
            cuts.add(Fraction((s[0] - p0[0]) - (s[1] - p0[1]), den))
        den = vx + vy
        if den != 0:
            cuts.add(Fraction((s[0] - p0[0]) + (s[1] - p0[1]), den))
    ts = sorted(t for t in cuts if 0 <= t <= 1)

    def at(t):
        return (p0[0] + t * vx, p0[1] + t * vy)

    vals = [(t, _dist(at(t), k) - _dist(at(t), a)) for t in ts]
    roots = []
    for i, (t, g) in enumerate(vals):
        if g == 0:
            roots.append(at(t))
        elif i + 1 < len(vals):
            t2, g2 = vals[i + 1]
            if (g < 0 < g2) or (g2 < 0 < g):
                tr = t + (t2 - t) * g / (g - g2)
                roots.append(at(tr))
    return roots


def _in_box(q, box) -> bool:
    X0, X1, Y0, Y1 = box
    return X0 <= q[0] <= X1 and Y0 <= q[1] <= Y1


def _on_border(q, box) -> bool:
    X0, X1, Y0, Y1 = box
    return q[0] == X0 or q[0] == X1 or q[1] == Y0 or q[1] == Y1


# ---------------------------------------------------------------------------
# Envelope evaluation at pooled points (integer batches where safe).


def _phi_at(fr: _Frame, q) -> Fraction:
    """Envelope value at a point given in frame units (ints or Fractions)."""
    qx, qy = Fraction(q[0]), Fraction(q[1])
    den = lcm(qx.denominator, qy.denominator)
    nx, ny = int(qx * den), int(qy * den)
    best = None
    for x, y, z in zip(fr.xs, fr.ys, fr.za):
        v = max(abs(x * den - nx), abs(y * den - ny), z * den)
        if best is None or v < best:
            best = v
    return Fraction(best, den)


def _phi_many(fr: _Frame, points) -> list[Fraction]:
    def integral(v) -> bool:
        return isinstance(v, int) or v.denominator == 1

    if fr.np_ok and len(points) > 64:
        ints = [(int(q[0]), int(q[1])) for q in points
                if integral(q[0]) and integral(q[1])]
        if len(ints) == len(points):
            px = np.asarray(fr.xs, dtype=np.int64)
            py = np.asarray(fr.ys, dtype=np.int64)
            pz = np.asarray(fr.za, dtype=np.int64)
            qx = np.asarray([q[0] for q in ints], dtype=np.int64)
            qy = np.asarray([q[1] for q in ints], dtype=np.int64)
            d = np.maximum(np.abs(qx[:, None] - px[None, :]),
                           np.abs(qy[:, None] - py[None, :]))
            vals = np.maximum(d, pz[None, :]).min(axis=1)
            return [Fraction(int(v)) for v in vals]
    return [_phi_at(fr, q) for q in points]


# ---------------------------------------------------------------------------
# Per-level square-arrangement scan (the case-(i) part of the search).


def _level_scan(fr: _Frame, stop_below: Fraction | None):
    """Largest |z| level whose uncovered set within C is nonempty.

    Scans levels in descending order and returns (level, lex-min witness)
    in frame units, or None. ``stop_below`` prunes levels strictly smaller
    than an already-known envelope value.
    """
    box = (fr.X0, fr.X1, fr.Y0, fr.Y1)
    levels = sorted(set(fr.za), reverse=True)
    for w in levels:
        if stop_below is not None and w < stop_below:
            return None
        squares = sorted({(x, y) for x, y, z in zip(fr.xs, fr.ys, fr.za) if z < w})
        vs = sorted({v for v in (fr.X0, fr.X1,
                                 *(sx - w for sx, _ in squares),
                                 *(sx + w for sx, _ in squares))
                     if fr.X0 <= v <= fr.X1})
        hs = sorted({v for v in (fr.Y0, fr.Y1,
                                 *(sy - w for _, sy in squares),
                                 *(sy + w for _, sy in squares))
                     if fr.Y0 <= v <= fr.Y1})
        witness = None
        if not squares:
            witness = (fr.X0, fr.Y0)
        elif fr.np_ok and w < _NP_LIMIT:
            qx = np.asarray(vs, dtype=np.int64)
            qy = np.asarray(hs, dtype=np.int64)
            covered = np.zeros((len(vs), len(hs)), dtype=bool)
            for sx, sy in squares:
                covered |= (np.abs(qx - sx)[:, None] < w) & (np.abs(qy - sy)[None, :] < w)
            free = np.argwhere(~covered)
            if free.size:
                i, j = free[0]
                witness = (vs[int(i)], hs[int(j)])
        else:
            for qx_ in vs:
                for qy_ in hs:
                    if all(max(abs(qx_ - sx), abs(qy_ - sy)) >= w for sx, sy in squares):
                        witness = (qx_, qy_)
                        break
                if witness:
                    break
        if witness is not None:
            return (w, witness)
    return None


# ---------------------------------------------------------------------------
# Candidate pool and the oracle proper.


def _structural_pool(sites, box):
    """Corner, pair-bisector and triple-equidistant pool points (frame units).

    Returns a dict point -> tag; insertion order fixes the tag when a point
    belongs to several classes.
    """
    X0, X1, Y0, Y1 = box
    pool: dict[tuple, str] = {}
    for cx in (X0, X1):
        for cy in (Y0, Y1):
            pool.setdefault((cx, cy), TAG_CORNER)
    m = len(sites)
    pieces_by_pair: dict[tuple[int, int], list] = {}
    for i in range(m):
        for j in range(i + 1, m):
            pcs = _pair_pieces(sites[i], sites[j], box)
            if pcs:
                pieces_by_pair[(i, j)] = pcs
                for p0, p1 in pcs:
                    pool.setdefault(p0, TAG_PAIR)
                    pool.setdefault(p1, TAG_PAIR)
    for (i, j), pcs in pieces_by_pair.items():
        a = sites[i]
        for k in range(m):
            if k == i or k == j:
                continue
            c = sites[k]
            for p0, p1 in pcs:
                for q in _roots_on_segment(p0, p1, a, c):
                    key = (q[0], q[1])
                    if _in_box(key, box):
                        pool.setdefault(key, TAG_TRIPLE)
    return pool, pieces_by_pair


def candidate_pool(psn: PointSet) -> CandidatePool:
    """All enumeration-class candidates, in exact original coordinates."""
    _check_normalized_3d(psn)
    if len(psn) > _cap():
        raise UsageError(f"oracle refuses n > {_cap()} (set {ORACLE_CAP_ENV} to raise)")
    fr = _Frame(psn)
    pool, _ = _structural_pool(fr.sites, (fr.X0, fr.X1, fr.Y0, fr.Y1))
    level = _level_scan(fr, None)
    if level is not None:
        pool.setdefault(level[1], TAG_PLATEAU)
    pts = tuple((fr.point_out(q), tag) for q, tag in sorted(pool.items()))
    return CandidatePool(pts)


def exact_oracle_3d(psn: PointSet) -> tuple[Scalar, PlanarPoint]:
    """Ground-truth optimum: the largest envelope value over the center
    domain together with its lexicographically smallest attaining center."""
    _check_normalized_3d(psn)
    if len(psn) > _cap():
        raise UsageError(f"oracle refuses n > {_cap()} (set {ORACLE_CAP_ENV} to raise)")
    fr = _Frame(psn)
    pool, _ = _structural_pool(fr.sites, (fr.X0, fr.X1, fr.Y0, fr.Y1))
    points = sorted(pool)
    values = _phi_many(fr, points)
    best_v = None
    best_q = None
    for q, v in zip(points, values):
        if best_v is None or v > best_v or (v == best_v and q < best_q):
            best_v, best_q = v, q
    level = _level_scan(fr, best_v)
    if level is not None:
        w, wit = level
        if w > best_v or (w == best_v and tuple(wit) < tuple(best_q)):
            best_v, best_q = Fraction(w), wit
    return fr.to_scalar(best_v), fr.point_out(best_q)


def oracle_plateau_level(psn: PointSet) -> tuple[Scalar, PlanarPoint] | None:
    """Largest |z| level that still leaves an uncovered center, if any."""
    _check_normalized_3d(psn)
    fr = _Frame(psn)
    res = _level_scan(fr, None)
    if res is None:
        return None
    w, wit = res
    return fr.to_scalar(w), fr.point_out(wit)


def oracle_voronoi_level(psn: PointSet) -> tuple[Scalar, PlanarPoint] | None:
    """Best structural candidate over the low projections, case-(ii) mirror.

    The level part fixes which points count as low (height at most the
    largest feasible level); candidates are triple-equidistant points in C,
    pair-equidistant points on C's border, and C corners, all computed over
    the low projections only. A candidate's value is its nearest low
    projection distance, which there automatically dominates every
    relevant height.
    """
    _check_normalized_3d(psn)
    fr = _Frame(psn)
    lev = _level_scan(fr, None)
    if lev is None:
        return None
    box = (fr.X0, fr.X1, fr.Y0, fr.Y1)
    low = sorted({(x, y) for x, y, z in zip(fr.xs, fr.ys, fr.za)
                  if z <= lev[0]})
    pool, _ = _structural_pool(low, box)
    cands = []
    for q, tag in pool.items():
        if tag == TAG_TRIPLE or tag == TAG_CORNER or _on_border(q, box):
            cands.append(q)
    best = None
    for q in sorted(cands):
        d = min(max(abs(q[0] - sx), abs(q[1] - sy)) for sx, sy in low)
        if best is None or d > best[0]:
            best = (d, q)
    return fr.to_scalar(best[0]), fr.point_out(best[1])


def grid_oracle(psn: PointSet, resolution: int) -> Scalar:
    """Max envelope value over a regular grid on C (corners included)."""
    _check_normalized_3d(psn)
    if resolution < 2:
        raise UsageError("grid resolution must be >= 2")
    fr = _Frame(psn)
    steps = resolution - 1
    xs = [fr.X0 + Fraction(k * (fr.X1 - fr.X0), steps) for k in range(resolution)]
    ys = [fr.Y0 + Fraction(k * (fr.Y1 - fr.Y0), steps) for k in range(resolution)]
    pts = [(x, y) for x in xs for y in ys]
    vals = _phi_many(fr, pts)
    return max(v for v in vals) / fr.U


# ---------------------------------------------------------------------------
# Helpers for cross-checking other modules (still independent code paths).


def union_area_brute(squares) -> Scalar:
    """Exact union area of equal closed squares by compressed-grid coverage.

    Accepts anything with .center/.radius or (center, radius) tuples.
    """
    items = []
    for s in squares:
        c, r = (s.center, s.radius) if hasattr(s, "center") else (s[0], s[1])
        items.append((Fraction(c[0]), Fraction(c[1]), Fraction(r)))
    if not items:
        return Fraction(0)
    den = lcm(*(v.denominator for it in items for v in it))
    sq = [(int(x * den), int(y * den), int(r * den)) for x, y, r in items]
    xs = sorted({x - r for x, _, r in sq} | {x + r for x, _, r in sq})
    ys = sorted({y - r for _, y, r in sq} | {y + r for _, y, r in sq})
    if max(abs(v) for v in xs + ys) < _NP_LIMIT // 4:
        cx = np.asarray([a + b for a, b in zip(xs, xs[1:])], dtype=np.int64)
        cy = np.asarray([a + b for a, b in zip(ys, ys[1:])], dtype=np.int64)
        wx = np.asarray([b - a for a, b in zip(xs, xs[1:])], dtype=object)
        wy = np.asarray([b - a for a, b in zip(ys, ys[1:])], dtype=object)
        covered = np.zeros((len(cx), len(cy)), dtype=bool)
        for x, y, r in sq:
            covered |= (np.abs(cx - 2 * x)[:, None] <= 2 * r) & (np.abs(cy - 2 * y)[None, :] <= 2 * r)
        total = 0
        ii, jj = np.nonzero(covered)
        for i, j in zip(ii.tolist(), jj.tolist()):
            total += int(wx[i]) * int(wy[j])
        return Fraction(total, den * den)
    total = 0
    for i in range(len(xs) - 1):
        for j in range(len(ys) - 1):
            mx2, my2 = xs[i] + xs[i + 1], ys[j] + ys[j + 1]
            if any(abs(mx2 - 2 * x) <= 2 * r and abs(my2 - 2 * y) <= 2 * r for x, y, r in sq):
                total += (xs[i + 1] - xs[i]) * (ys[j + 1] - ys[j])
    return Fraction(total, den * den)


def union_vertices_brute(squares) -> frozenset:
    """Turn/pinch points of a union of equal closed squares, O(n^2).

    Candidates are square corners plus crossings of perpendicular square
    edges. Around each the four quadrant germs are classified exactly:
    a germ is covered iff a single square covers it (for axis-aligned
    boxes a union covers a germ iff some member does). A boundary point
    is a vertex unless exactly two adjacent germs are covered, which is
    a straight run.
    """
    items = []
    for s in squares:
        c, r = (s.center, s.radius) if hasattr(s, "center") else (s[0], s[1])
        items.append((Fraction(c[0]), Fraction(c[1]), Fraction(r)))
    if not items:
        return frozenset()
    den = lcm(*(v.denominator for it in items for v in it))
    sq = sorted({(int(x * den), int(y * den)) for x, y, _ in items})
    w = int(items[0][2] * den)

    cands: set[tuple[int, int]] = set()
    for cx, cy in sq:
        cands.update({(cx - w, cy - w), (cx - w, cy + w),
                      (cx + w, cy - w), (cx + w, cy + w)})
    for i, (ax, ay) in enumerate(sq):
        for bx, by in sq[i + 1:]:
            for vx in (ax - w, ax + w):
                for hy in (by - w, by + w):
                    if abs(vx - bx) <= w and abs(hy - ay) <= w:
                        cands.add((vx, hy))
            for vx in (bx - w, bx + w):
                for hy in (ay - w, ay + w):
                    if abs(vx - ax) <= w and abs(hy - by) <= w:
                        cands.add((vx, hy))

    def germ_covered(vx, vy, sx, sy) -> bool:
        for cx, cy in sq:
            if sx > 0:
                okx = cx - w <= vx < cx + w
            else:
                okx = cx - w < vx <= cx + w
            if not okx:
                continue
            if sy > 0:
                if cy - w <= vy < cy + w:
                    return True
            else:
                if cy - w < vy <= cy + w:
                    return True
        return False

    out = set()
    for vx, vy in cands:
        if not any(abs(vx - cx) <= w and abs(vy - cy) <= w for cx, cy in sq):
            continue
        g = [germ_covered(vx, vy, sx, sy)
             for sx, sy in ((1, 1), (-1, 1), (-1, -1), (1, -1))]
        covered = sum(g)
        if covered in (0, 4):
            continue
        if covered == 2 and any(g[k] and g[(k + 1) % 4] for k in range(4)):
            continue
        out.add((Fraction(vx, den), Fraction(vy, den)))
    return frozenset(out)


def vd_candidate_oracle(locations, box: Box) -> frozenset:
    """Brute enumeration of nearest-equidistance candidates within a box.

    Returns the set of: triple-equidistant nearest points inside the box,
    pair-equidistant nearest points on the box border, and box corners.
    Matches the diagram-based candidate extraction on tie-free inputs.
    """
    locs = [(Fraction(p[0]), Fraction(p[1])) for p in locations]
    den = lcm(*(v.denominator for p in locs for v in p))
    U = 4 * den
    sites = sorted({(int(x * U), int(y * U)) for x, y in locs})
    bx = (int(box.lo[0] * U), int(box.hi[0] * U), int(box.lo[1] * U), int(box.hi[1] * U))

    def nearest_ok(q, members) -> bool:
        d = min(max(abs(Fraction(q[0]) - sx), abs(Fraction(q[1]) - sy)) for sx, sy in sites)
        return all(max(abs(Fraction(q[0]) - sx), abs(Fraction(q[1]) - sy)) == d for sx, sy in members)

    out = set()
    for cx in (bx[0], bx[1]):
        for cy in (bx[2], bx[3]):
            out.add((Fraction(cx, U), Fraction(cy, U)))
    m = len(sites)
    for i in range(m):
        for j in range(i + 1, m):
            pcs = _pair_pieces(sites[i], sites[j], bx)
            for p0, p1 in pcs:
                for q in (p0, p1):
                    if _on_border(q, bx) and nearest_ok(q, (sites[i], sites[j])):
                        out.add((Fraction(q[0], U), Fraction(q[1], U)))
                for k in range(m):
                    if k in (i, j):
                        continue
                    for q in _roots_on_segment(p0, p1, sites[i], sites[k]):
                        if _in_box(q, bx) and nearest_ok(q, (sites[i], sites[j], sites[k])):
                            out.add((Fraction(q[0]) / U, Fraction(q[1]) / U))
    return frozenset(out)


def exact_oracle_2d(psn: PointSet) -> tuple[Scalar, PlanarPoint]:
    """Breakpoint brute force for the planar problem (normalized input)."""
    if psn.dimension != 2:
        raise UsageError("this oracle handles dimension 2 only")
    dens = {c.denominator for p in psn for c in p}
    U = 2 * lcm(*dens)
    xs = [int(p[0] * U) for p in psn]
    za = [abs(int(p[1] * U)) for p in psn]
    dom = center_domain(psn)
    A = int(dom.box.lo[0] * U)
    B = int(dom.box.hi[0] * U)
    cands = {A, B}
    n = len(xs)
    for i in range(n):
        for j in range(n):
            cands.add(xs[i] + za[j])
            cands.add(xs[i] - za[j])
            if (xs[i] + xs[j]) % 2 == 0:
                cands.add((xs[i] + xs[j]) // 2)
            else:
                cands.add(Fraction(xs[i] + xs[j], 2))
    best_v = None
    best_c = None
    for c in sorted(cands, key=lambda v: Fraction(v)):
        if not A <= c <= B:
            continue
        v = min(max(abs(x - c), z) for x, z in zip(xs, za))
        if best_v is None or v > best_v or (v == best_v and Fraction(c) < Fraction(best_c)):
            best_v, best_c = v, c
    return Fraction(best_v) / U, (Fraction(best_c) / U,)
