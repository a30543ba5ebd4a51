"""Minimum-width shell solvers for dimensions 1, 2, and 3.

The d = 3 solver normalizes the input, then maximizes the inner radius
over the center domain two ways: a binary search over the plateau levels
(driven by the coverage decision procedure) and a scan of nearest-site
diagram candidates, keeping whichever is larger. d = 2 reduces to the
maximum of a one-dimensional lower envelope over an interval; d = 1 is
closed form.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm

from .errors import UnsupportedDimensionError, UsageError
from .geometry import (
    CenterDomain,
    Normalization,
    PlanarPoint,
    PointSet,
    center_domain,
    linf_dist,
    normalize,
    smallest_enclosing_box,
)
from .rational import Scalar
from .shell import Shell, lift, lifted_dist, planar_dist
from .squares import decide
from .voronoi import Site, build_voronoi, vd_candidates_in_rect


@dataclass(frozen=True)
class SolveResult:
    """Shell in original coordinates plus how it was found.

    inner_level is the normalized-frame inner radius (same value as
    shell.inner_radius); contacts index into the input point order.
    """

    shell: Shell
    inner_level: Scalar
    case_tag: str
    candidate_count: int
    outer_contacts: tuple[int, ...]
    inner_contacts: tuple[int, ...]
    plateau_value: Scalar | None = None
    voronoi_value: Scalar | None = None

    @property
    def width(self) -> Scalar:
        return self.shell.width


def solve_plateau_case(psn: PointSet):
    """Largest height level at which the decision procedure still says yes.

    Monotonicity of the decision in the radius makes the binary search
    over the sorted distinct levels valid. Returns (level, center) or None
    when even the smallest level is infeasible.
    """
    levels = sorted({abs(p[-1]) for p in psn})
    lo, hi = 0, len(levels) - 1
    best = None
    while lo <= hi:
        mid = (lo + hi) // 2
        ok, witness = decide(psn, levels[mid])
        if ok:
            best = (levels[mid], witness)
            lo = mid + 1
        else:
            hi = mid - 1
    return best


def _dist_to_box(p, box) -> Scalar:
    d = Fraction(0)
    for v, a, b in zip(p, box.lo, box.hi):
        if v < a:
            d = max(d, a - v)
        elif v > b:
            d = max(d, v - b)
    return d


def solve_voronoi_case(psn: PointSet, level: Scalar | None = None):
    """Best center among nearest-site diagram candidates in the domain.

    Returns ((value, center) or None, number of candidates examined).

    The decision search fixes the largest feasible height level; between
    that level and the next one up, only points at or below it can pull
    the inner radius down, and they do so through their projected
    distance alone. So the diagram is built over exactly those low
    points, and a candidate's value is its nearest projected distance
    (which by construction is at least every relevant height, making the
    lifted and projected distances agree at the maximizer). With no level
    given, every point counts as low; the result is then still a valid
    lower bound on the optimum.
    """
    dom = center_domain(psn)
    merged: dict[tuple, list[int]] = {}
    for i, p in enumerate(psn):
        if level is None or abs(p[-1]) <= level:
            merged.setdefault((p[0], p[1]), []).append(i)
    if not merged:
        return None, 0
    # sites further from the domain than this bound are never nearest
    # anywhere inside it, so dropping them changes no candidate
    c0 = dom.box.midpoint
    d_mid = min(max(abs(x - c0[0]), abs(y - c0[1])) for x, y in merged)
    cutoff = d_mid + dom.diameter
    kept = sorted(loc for loc in merged if _dist_to_box(loc, dom.box) <= cutoff)
    sites = [Site(loc, tuple(merged[loc])) for loc in kept]

    vd = build_voronoi(sites, frame=dom.box)
    cands = vd_candidates_in_rect(vd, dom)
    best = None
    for pt, near in cands:
        rep = sites[min(near)].location
        d = max(abs(pt[0] - rep[0]), abs(pt[1] - rep[1]))
        if best is None or d > best[0]:
            best = (d, pt)
    return best, len(cands)


def _contacts(psn: PointSet, center_planar: PlanarPoint, h2: Scalar, rstar: Scalar):
    center_full = lift(center_planar)
    outer = tuple(i for i, p in enumerate(psn)
                  if linf_dist(p, center_full) == h2)
    inner = tuple(i for i, p in enumerate(psn)
                  if lifted_dist(p, center_planar) == rstar)
    return outer, inner


def _finish(nrm: Normalization, psn: PointSet, dom: CenterDomain,
            rstar: Scalar, center_planar: PlanarPoint, tag: str,
            count: int, plateau_value: Scalar | None = None,
            voronoi_value: Scalar | None = None) -> SolveResult:
    outer, inner = _contacts(psn, center_planar, dom.half_side, rstar)
    center = nrm.invert(lift(center_planar))
    shell = Shell(center, dom.half_side, rstar)
    return SolveResult(shell, rstar, tag, count, outer, inner,
                       plateau_value, voronoi_value)


def solve3d(ps: PointSet) -> SolveResult:
    if ps.dimension != 3:
        raise UsageError("solve3d expects dimension 3")
    psn, nrm = normalize(ps)
    dom = center_domain(psn)
    if len(psn) <= 2:
        # one or two points always admit a width-0 shell
        c = dom.box.corners()[0]
        return _finish(nrm, psn, dom, dom.half_side, c, "plateau", 0)
    case1 = solve_plateau_case(psn)
    case2, count = solve_voronoi_case(psn, case1[0] if case1 else None)
    if case1 is None and case2 is None:
        # unreachable for distinct points; degenerate width-0 fallback
        return _finish(nrm, psn, dom, dom.half_side, dom.box.corners()[0],
                       "both", count)
    r1 = case1[0] if case1 is not None else None
    r2 = case2[0] if case2 is not None else None
    if case2 is None or (case1 is not None and case1[0] > case2[0]):
        rstar, c = case1
        tag = "plateau"
    elif case1 is None or case2[0] > case1[0]:
        rstar, c = case2
        tag = "voronoi"
    else:
        rstar, c = case2
        tag = "both"
    return _finish(nrm, psn, dom, rstar, c, tag, count, r1, r2)


# ---------------------------------------------------------------------------
# d = 2: maximum of the lower envelope of cone functions over an interval.


def _switch_point(xi, wi, xj, wj):
    """First position where the later cone drops to or below the earlier.

    Both functions are max(|c - x|, w); with xi < xj there is exactly one
    crossing, and it happens where an arm meets an arm or a plateau.
    """
    for t in sorted({(xi + xj) // 2, xj - wi, xi + wj}):
        if max(abs(t - xj), wj) <= max(abs(t - xi), wi):
            return t
    raise AssertionError("cone functions failed to cross")


def solve2d(ps: PointSet) -> SolveResult:
    if ps.dimension != 2:
        raise UsageError("solve2d expects dimension 2")
    psn, nrm = normalize(ps)
    dom = center_domain(psn)
    if len(psn) <= 2:
        c = dom.box.corners()[0]
        return _finish(nrm, psn, dom, dom.half_side, c, "plateau", 0)

    dens = {c.denominator for p in psn for c in p}
    U = 2 * lcm(*dens)
    lo_c = int(dom.box.lo[0] * U)
    hi_c = int(dom.box.hi[0] * U)
    narrow: dict[int, int] = {}
    for p in psn:
        x = int(p[0] * U)
        w = abs(int(p[1] * U))
        if x not in narrow or w < narrow[x]:
            narrow[x] = w

    funcs = sorted(narrow.items())

    # lower envelope: active regions appear in x order, one per cone
    stack: list[tuple[int, int, int | None]] = []
    for x, w in funcs:
        start = None
        while stack:
            t = _switch_point(stack[-1][0], stack[-1][1], x, w)
            if stack[-1][2] is not None and t <= stack[-1][2]:
                stack.pop()
            else:
                start = t
                break
        stack.append((x, w, start))

    best_v = None
    best_c = None
    count = 0
    for k, (x, w, start) in enumerate(stack):
        seg_lo = lo_c if start is None else max(lo_c, start)
        seg_hi = hi_c if k + 1 == len(stack) else min(hi_c, stack[k + 1][2])
        if seg_lo > seg_hi:
            continue
        cands = {seg_lo, seg_hi}
        for kink in (x - w, x + w):
            if seg_lo <= kink <= seg_hi:
                cands.add(kink)
        for c in cands:
            v = max(abs(c - x), w)
            count += 1
            if best_v is None or v > best_v or (v == best_v and c < best_c):
                best_v, best_c = v, c

    rstar = Fraction(best_v, U)
    c_star = (Fraction(best_c, U),)
    plateau_hit = any(abs(p[-1]) == rstar for p in psn
                      if lifted_dist(p, c_star) == rstar)
    voronoi_hit = any(planar_dist(p, c_star) == rstar for p in psn
                      if lifted_dist(p, c_star) == rstar)
    tag = "both" if plateau_hit and voronoi_hit else (
        "plateau" if plateau_hit else "voronoi")
    return _finish(nrm, psn, dom, rstar, c_star, tag, count)


def solve1d(ps: PointSet) -> SolveResult:
    if ps.dimension != 1:
        raise UsageError("solve1d expects dimension 1")
    box = smallest_enclosing_box(ps)
    mid = box.midpoint[0]
    h2 = box.longest_side / 2
    inner = min(abs(p[0] - mid) for p in ps)
    outer_idx = tuple(i for i, p in enumerate(ps) if abs(p[0] - mid) == h2)
    inner_idx = tuple(i for i, p in enumerate(ps) if abs(p[0] - mid) == inner)
    shell = Shell((mid,), h2, inner)
    return SolveResult(shell, inner, "plateau", len(ps), outer_idx, inner_idx)


def solve(ps: PointSet) -> SolveResult:
    """Dimension dispatch; d must be 1, 2, or 3."""
    if ps.dimension == 1:
        return solve1d(ps)
    if ps.dimension == 2:
        return solve2d(ps)
    if ps.dimension == 3:
        return solve3d(ps)
    raise UnsupportedDimensionError(ps.dimension)
