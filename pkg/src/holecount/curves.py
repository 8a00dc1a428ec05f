"""Boundary contour tracing and per-curve corner accounting.

Each component has one outer contour plus one contour per enclosed
complement region. A contour is walked on component pixels with a
4-directional left-hand rule keeping its complement region on the left;
this weaves inward corner points (which touch the region only diagonally)
into the cycle, so for valid components the contours partition the
boundary point set. Outer contours come out clockwise in (row, col)
screen orientation, hole contours counterclockwise.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .corners import classify_corners, component_mask, neighbor_counts
from .errors import (
    ContourOverlapError,
    CurveError,
    EmptyComponentError,
    ThinComponentError,
)
from .grid import BinaryGrid, DIRECT_OFFSETS, Point2
from .labeling import label_mask

OUTER = "outer"
HOLE = "hole"

_N, _E, _S, _W = (-1, 0), (0, 1), (1, 0), (0, -1)
_LEFT = {_E: _N, _N: _W, _W: _S, _S: _E}
_RIGHT = {v: k for k, v in _LEFT.items()}


@dataclass(frozen=True)
class Contour:
    """One simple closed boundary curve, as a cyclic point sequence."""

    points: tuple[Point2, ...]
    kind: str
    enclosed_region: frozenset[Point2]


@dataclass(frozen=True)
class CurveCensus:
    """Component-relative corner classes restricted to one contour."""

    cp2: int
    cp3: int
    cp4: int

    @property
    def total(self) -> int:
        return self.cp2 + self.cp3 + self.cp4


@dataclass(frozen=True)
class CurveLemmaResult:
    cp2: int
    cp3: int
    cp4: int
    holds: bool


@dataclass(frozen=True)
class AccountingResult:
    """The per-curve accounting identity over all contours of a component."""

    lhs: int  # cp4 total - cp2 total
    rhs: int  # -4 + 4 * number of hole contours
    holds: bool
    hole_count: int
    census_match: bool
    curve_censuses: tuple[CurveCensus, ...]


def _walk(mask: np.ndarray, start: Point2, heading: Point2) -> list[Point2]:
    """Left-hand-rule pixel walk; returns the cycle starting at `start`."""
    h, w = mask.shape

    def fg(r, c):
        return 0 <= r < h and 0 <= c < w and mask[r, c]

    path = [start]
    p, d = start, heading
    while True:
        r, c = p
        q = None
        for nd in (_LEFT[d], d, _RIGHT[d], (-d[0], -d[1])):
            nr, nc = r + nd[0], c + nd[1]
            if fg(nr, nc):
                q = (nr, nc)
                break
        if q is None or q == start:
            return path
        path.append(q)
        p, d = q, nd


def trace_contours(g: BinaryGrid, component) -> tuple[Contour, ...]:
    """Trace the outer contour and one contour per enclosed region.

    Raises ThinComponentError when a boundary point has fewer than 2 direct
    neighbors, and ContourOverlapError when a traced point is revisited or
    the contours fail to partition the boundary point set.
    """
    mask = component_mask(g, component)
    if not mask.any():
        raise EmptyComponentError("cannot trace an empty component")
    direct, full = neighbor_counts(mask)
    bnd = mask & (full < 8)
    thin = bnd & (direct < 2)
    if thin.any():
        r, c = np.argwhere(thin)[0]
        raise ThinComponentError((int(r), int(c)))

    padded = np.pad(mask, 1, constant_values=False)
    regions, nregions = label_mask(~padded)
    # The padded ring is background, so region 1 holds (0, 0) and is the
    # unbounded one; 2..n are enclosed regions in scan order.
    assert regions[0, 0] == 1

    contours = []
    rows, cols = np.nonzero(padded)
    start = (int(rows[0]), int(cols[0]))
    contours.append((_walk(padded, start, _E), OUTER, None))
    for rid in range(2, nregions + 1):
        rr, cc = np.argwhere(regions == rid)[0]
        hole_first = (int(rr), int(cc))
        start = (hole_first[0] - 1, hole_first[1])
        assert padded[start]
        contours.append((_walk(padded, start, _W), HOLE, rid))

    seen: dict[Point2, int] = {}
    for i, (path, _, _) in enumerate(contours):
        for p in path:
            if p in seen:
                raise ContourOverlapError((p[0] - 1, p[1] - 1))
            seen[p] = i
    expected = {(int(r), int(c)) for r, c in np.argwhere(bnd)}
    traced = {(p[0] - 1, p[1] - 1) for p in seen}
    if traced != expected:
        p = min(expected.symmetric_difference(traced))
        raise ContourOverlapError(p)

    outer_region = regions == 1
    result = []
    for path, kind, rid in contours:
        pts = tuple((r - 1, c - 1) for r, c in path)
        if kind == OUTER:
            pset = set(path)
            enclosed = frozenset(
                (int(r) - 1, int(c) - 1)
                for r, c in np.argwhere(~outer_region)
                if (int(r), int(c)) not in pset
            )
        else:
            enclosed = frozenset(
                (int(r) - 1, int(c) - 1) for r, c in np.argwhere(regions == rid)
            )
        result.append(Contour(points=pts, kind=kind, enclosed_region=enclosed))
    return tuple(result)


def curve_census(g: BinaryGrid, component, contour: Contour) -> CurveCensus:
    """Component-relative class counts over one contour's points."""
    mask = component_mask(g, component)
    direct, _ = neighbor_counts(mask)
    counts = {2: 0, 3: 0, 4: 0}
    for r, c in contour.points:
        if not (0 <= r < mask.shape[0] and 0 <= c < mask.shape[1]) or not mask[r, c]:
            raise ValueError(f"contour point {(r, c)} not in component")
        counts[int(direct[r, c])] += 1
    return CurveCensus(cp2=counts[2], cp3=counts[3], cp4=counts[4])


def _fill_interior(points: list[Point2]) -> set[Point2]:
    """Interior of a closed curve: flood the outside from beyond the bbox."""
    rs = [p[0] for p in points]
    cs = [p[1] for p in points]
    r0, c0 = min(rs) - 1, min(cs) - 1
    h = max(rs) - r0 + 2
    w = max(cs) - c0 + 2
    curve = np.zeros((h, w), dtype=bool)
    for r, c in points:
        curve[r - r0, c - c0] = True
    regions, _ = label_mask(~curve)
    outside = regions[0, 0]
    interior = ~curve & (regions != outside)
    return {(int(r) + r0, int(c) + c0) for r, c in np.argwhere(interior)}


def check_curve_lemma(points, interior=None) -> CurveLemmaResult:
    """Classify a standalone simple closed curve and test cp2 == cp4 + 4.

    `points` is the cyclic point sequence; `interior` (the enclosed point
    set) is computed by filling when not supplied. Classes count direct
    neighbors in curve-union-interior.
    """
    points = [tuple(p) for p in points]
    if len(points) < 4:
        raise CurveError(f"curve too short ({len(points)} points)")
    if len(set(points)) != len(points):
        raise CurveError("curve is self-intersecting")
    for a, b in zip(points, points[1:] + points[:1]):
        if max(abs(a[0] - b[0]), abs(a[1] - b[1])) != 1:
            raise CurveError(f"curve not closed: {a} and {b} are not 8-neighbors")
    if interior is None:
        interior = _fill_interior(points)
    filled = set(points) | set(map(tuple, interior))

    # The pathological diagonal patterns must not occur in the filled set.
    rs = [p[0] for p in filled]
    cs = [p[1] for p in filled]
    r0, c0 = min(rs) - 1, min(cs) - 1
    arr = np.zeros((max(rs) - r0 + 2, max(cs) - c0 + 2), dtype=bool)
    for r, c in filled:
        arr[r - r0, c - c0] = True
    a = arr[:-1, :-1]
    b = arr[:-1, 1:]
    c = arr[1:, :-1]
    d = arr[1:, 1:]
    if ((a & d & ~b & ~c) | (b & c & ~a & ~d)).any():
        raise CurveError("pathological 2x2 window on the curve")

    counts = {0: 0, 1: 0, 2: 0, 3: 0, 4: 0}
    for r, c2_ in points:
        k = sum((r + dr, c2_ + dc) in filled for dr, dc in DIRECT_OFFSETS)
        counts[k] += 1
    if counts[0] or counts[1]:
        raise CurveError("curve point with fewer than 2 neighbors in the filled set")
    return CurveLemmaResult(
        cp2=counts[2],
        cp3=counts[3],
        cp4=counts[4],
        holds=counts[2] == counts[4] + 4,
    )


def second_proof_accounting(g: BinaryGrid, component) -> AccountingResult:
    """Sum per-curve censuses and test cp4 - cp2 == -4 + 4h."""
    contours = trace_contours(g, component)
    censuses = tuple(curve_census(g, component, ct) for ct in contours)
    cp2 = sum(cc.cp2 for cc in censuses)
    cp3 = sum(cc.cp3 for cc in censuses)
    cp4 = sum(cc.cp4 for cc in censuses)
    hole_count = sum(1 for ct in contours if ct.kind == HOLE)
    comp = classify_corners(g, component).census
    census_match = (cp2, cp3, cp4) == (comp.c2, comp.c3, comp.c4)
    lhs = cp4 - cp2
    rhs = -4 + 4 * hole_count
    return AccountingResult(
        lhs=lhs,
        rhs=rhs,
        holds=lhs == rhs,
        hole_count=hole_count,
        census_match=census_match,
        curve_censuses=censuses,
    )
