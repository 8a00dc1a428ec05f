"""Boundary extraction, corner census, and component validity checks.

A boundary point of a component S is a point of S whose 8-neighborhood
(out-of-grid positions included, counting as background) is not entirely
inside S. Its corner class is the number of direct neighbors it has inside
S: class 2 is an outward corner, 3 a straight-line point, 4 an inward
corner. Classes 0 and 1 are degenerate and make the component invalid.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import EmptyComponentError
from .grid import BinaryGrid, DIRECT_OFFSETS, DIAGONAL_OFFSETS, Point2

ISOLATED_OR_THIN_POINT = "isolated_or_thin_point"
PATHOLOGICAL_WINDOW = "pathological_window"
CONTOUR_OVERLAP = "contour_overlap"
BORDER_CONTACT = "border_contact"


@dataclass(frozen=True)
class CornerCensus:
    """Counts of boundary-point corner classes of one component."""

    c2: int
    c3: int
    c4: int
    boundary_total: int

    @property
    def degenerate(self) -> int:
        return self.boundary_total - (self.c2 + self.c3 + self.c4)

    def __add__(self, other: "CornerCensus") -> "CornerCensus":
        return CornerCensus(
            self.c2 + other.c2,
            self.c3 + other.c3,
            self.c4 + other.c4,
            self.boundary_total + other.boundary_total,
        )


@dataclass(frozen=True)
class CornerClassification:
    """Census plus the per-point class map behind it."""

    census: CornerCensus
    classes: dict[Point2, int]
    degenerate_points: tuple[Point2, ...]


@dataclass(frozen=True)
class PathologyReport:
    windows: tuple[Point2, ...]
    clean: bool
    windows_scanned: int


@dataclass(frozen=True)
class ValidityReport:
    valid: bool
    reasons: tuple[tuple[str, Point2], ...]


def component_mask(g: BinaryGrid, component) -> np.ndarray:
    """Bool mask of the component over the grid's shape."""
    if isinstance(component, np.ndarray):
        if component.shape != g.cells.shape:
            raise ValueError("component mask shape mismatch")
        return component.astype(bool)
    mask = np.zeros(g.cells.shape, dtype=bool)
    if len(component) == 0:
        return mask
    pts = np.array(sorted(component), dtype=int)
    mask[pts[:, 0], pts[:, 1]] = True
    return mask


def _shifted(padded: np.ndarray, dr: int, dc: int, shape) -> np.ndarray:
    h, w = shape
    return padded[1 + dr : 1 + dr + h, 1 + dc : 1 + dc + w]


def neighbor_counts(mask: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Per-cell counts of direct and of all 8 neighbors inside the mask."""
    padded = np.pad(mask, 1, constant_values=False)
    direct = np.zeros(mask.shape, dtype=np.int8)
    for dr, dc in DIRECT_OFFSETS:
        direct += _shifted(padded, dr, dc, mask.shape)
    full = direct.copy()
    for dr, dc in DIAGONAL_OFFSETS:
        full += _shifted(padded, dr, dc, mask.shape)
    return direct, full


def boundary_mask(mask: np.ndarray) -> np.ndarray:
    _, full = neighbor_counts(mask)
    return mask & (full < 8)


def boundary_points(g: BinaryGrid, component) -> frozenset[Point2]:
    """Points of the component with some 8-neighbor position outside it."""
    mask = component_mask(g, component)
    if not mask.any():
        raise EmptyComponentError("boundary of an empty component")
    bnd = boundary_mask(mask)
    return frozenset((int(r), int(c)) for r, c in np.argwhere(bnd))


def classify_corners(g: BinaryGrid, component) -> CornerClassification:
    """Corner census of a component plus its per-point class map.

    Degenerate boundary points (fewer than 2 direct neighbors in the
    component) are counted in boundary_total and listed separately rather
    than raised, so validity reporting can consume them.
    """
    mask = component_mask(g, component)
    if not mask.any():
        raise EmptyComponentError("census of an empty component")
    direct, full = neighbor_counts(mask)
    bnd = mask & (full < 8)
    classes = {}
    degenerate = []
    for r, c in np.argwhere(bnd):
        p = (int(r), int(c))
        k = int(direct[r, c])
        classes[p] = k
        if k < 2:
            degenerate.append(p)
    census = CornerCensus(
        c2=int((bnd & (direct == 2)).sum()),
        c3=int((bnd & (direct == 3)).sum()),
        c4=int((bnd & (direct == 4)).sum()),
        boundary_total=int(bnd.sum()),
    )
    return CornerClassification(
        census=census, classes=classes, degenerate_points=tuple(sorted(degenerate))
    )


def find_pathological(g: BinaryGrid, component) -> PathologyReport:
    """Scan 2x2 windows for diagonal-pair intersections with the component.

    A window is pathological when exactly its two main-diagonal or exactly
    its two anti-diagonal cells belong to the component. Windows are visited
    once each (the report records how many), over the component's bounding
    box grown by one cell.
    """
    mask = component_mask(g, component)
    if not mask.any():
        return PathologyReport(windows=(), clean=True, windows_scanned=0)
    rows, cols = np.nonzero(mask)
    r0 = max(int(rows.min()) - 1, 0)
    r1 = min(int(rows.max()), mask.shape[0] - 2)
    c0 = max(int(cols.min()) - 1, 0)
    c1 = min(int(cols.max()), mask.shape[1] - 2)
    if r1 < r0 or c1 < c0:
        return PathologyReport(windows=(), clean=True, windows_scanned=0)
    a = mask[r0 : r1 + 1, c0 : c1 + 1]
    b = mask[r0 : r1 + 1, c0 + 1 : c1 + 2]
    c = mask[r0 + 1 : r1 + 2, c0 : c1 + 1]
    d = mask[r0 + 1 : r1 + 2, c0 + 1 : c1 + 2]
    diag = a & d & ~b & ~c
    anti = b & c & ~a & ~d
    hits = diag | anti
    windows = tuple(
        (int(r) + r0, int(cc) + c0) for r, cc in np.argwhere(hits)
    )
    return PathologyReport(
        windows=windows, clean=not windows, windows_scanned=int(hits.size)
    )


def validate_component(g: BinaryGrid, component) -> ValidityReport:
    """Check the simple-closed-curve hypothesis for one component.

    Valid means: no boundary point with fewer than 2 direct neighbors, no
    pathological 2x2 window, and the traced contours partition the boundary
    point set with no point shared between contours.
    """
    reasons = []
    cls = classify_corners(g, component)
    for p in cls.degenerate_points:
        reasons.append((ISOLATED_OR_THIN_POINT, p))
    pathology = find_pathological(g, component)
    for w in pathology.windows:
        reasons.append((PATHOLOGICAL_WINDOW, w))
    if not reasons:
        # Contour structure is only meaningful once the local checks pass.
        from .curves import ContourOverlapError, ThinComponentError, trace_contours

        try:
            trace_contours(g, component)
        except ContourOverlapError as exc:
            reasons.append((CONTOUR_OVERLAP, exc.point))
        except ThinComponentError as exc:  # pragma: no cover - caught above
            reasons.append((ISOLATED_OR_THIN_POINT, exc.point))
    return ValidityReport(valid=not reasons, reasons=tuple(reasons))


def image_census(g: BinaryGrid) -> tuple[CornerCensus, int]:
    """Whole-image corner census in one bounded-constant pass.

    Classes are taken relative to the full foreground, so this equals the
    sum of per-component censuses. Returns the census and a pixel-touch
    count: one read of each cell for itself plus one per 8-neighbor shift,
    9 touches per pixel total.
    """
    fg = g.cells
    touches = fg.size  # self
    direct, full = neighbor_counts(fg)
    touches += 8 * fg.size  # one shifted read per neighbor direction
    bnd = fg & (full < 8)
    census = CornerCensus(
        c2=int((bnd & (direct == 2)).sum()),
        c3=int((bnd & (direct == 3)).sum()),
        c4=int((bnd & (direct == 4)).sum()),
        boundary_total=int(bnd.sum()),
    )
    return census, touches
