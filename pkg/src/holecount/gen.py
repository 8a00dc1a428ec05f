"""Synthetic shape generation with known ground truth.

Randomness uses numpy's PCG64 generator seeded through SeedSequence, so a
spec reproduces the exact same grid bytes on any platform.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .corners import validate_component
from .errors import GenError
from .grid import BinaryGrid, grid_from_rows
from .labeling import label_mask

RECT_WITH_HOLES = "rect_with_holes"
RANDOM_BLOB = "random_blob"

# The two worked example components, transcribed digit for digit, and the
# corner-class annotation grid for the first one (2 = outward corner,
# 4 = inward corner, 1 = other component point).
_M5 = """
00000000
00111100
01111100
01110000
00110000
00111000
00111000
00000000
"""

_M6 = """
00000000
00211200
02441200
02410000
00110000
00142000
00212000
00000000
"""

_M7 = """
00000000
00111111
01111111
01110011
01110011
00111111
00111111
00000000
"""


def paper_fixtures() -> dict:
    """Named reference grids: 'm5', 'm7', and 'm6_annotations'."""
    ann = tuple(
        tuple(int(ch) for ch in line)
        for line in _M6.split()
    )
    return {
        "m5": grid_from_rows(_M5.split()),
        "m7": grid_from_rows(_M7.split()),
        "m6_annotations": ann,
    }


@dataclass(frozen=True)
class ShapeSpec:
    kind: str
    dims: tuple[int, int]
    holes: tuple = ()  # ((row, col), (height, width)) per hole
    seed: int = 0
    target_area: int | None = None


def _check_hole_layout(dims, holes):
    h, w = dims
    boxes = []
    for (r, c), (hh, ww) in holes:
        if hh < 1 or ww < 1:
            raise GenError(f"hole at {(r, c)} has empty size {(hh, ww)}")
        # The hole's 8-neighborhood ring must avoid the rect's perimeter.
        if r - 1 < 1 or c - 1 < 1 or r + hh > h - 2 or c + ww > w - 2:
            raise GenError(f"hole at {(r, c)} touches the boundary ring")
        boxes.append((r, c, hh, ww))
    for i in range(len(boxes)):
        for j in range(i + 1, len(boxes)):
            ri, ci, hi, wi = boxes[i]
            rj, cj, hj, wj = boxes[j]
            # Walls between holes must be at least 2 thick (expanded-by-1
            # boxes disjoint), else a wall pixel borders two hole regions
            # and the hole contours overlap.
            if (
                ri - 1 <= rj + hj
                and rj - 1 <= ri + hi
                and ci - 1 <= cj + wj
                and cj - 1 <= ci + wi
            ):
                raise GenError(
                    f"holes at {(ri, ci)} and {(rj, cj)} are closer than 2 cells"
                )


def gen_rect_with_holes(spec: ShapeSpec) -> BinaryGrid:
    """Solid rectangle with rectangular cavities; hole count is known."""
    h, w = spec.dims
    if h < 2 or w < 2:
        raise GenError(f"rectangle {h}x{w} too small")
    _check_hole_layout(spec.dims, spec.holes)
    arr = np.ones((h, w), dtype=bool)
    for (r, c), (hh, ww) in spec.holes:
        arr[r : r + hh, c : c + ww] = False
    return BinaryGrid(arr)


def random_rect_spec(seed: int, dims, hole_count: int, max_hole=3) -> ShapeSpec:
    """Seeded random hole layout satisfying the separation invariants."""
    h, w = dims
    rng = np.random.Generator(np.random.PCG64(np.random.SeedSequence([seed, 0xA5])))
    holes = []
    attempts = 0
    while len(holes) < hole_count:
        attempts += 1
        if attempts > 10_000:
            raise GenError(
                f"cannot place {hole_count} holes in a {h}x{w} rectangle"
            )
        hh = int(rng.integers(1, max_hole + 1))
        ww = int(rng.integers(1, max_hole + 1))
        if h - 1 - hh < 1 or w - 1 - ww < 1:
            continue
        r = int(rng.integers(1, h - hh))
        c = int(rng.integers(1, w - ww))
        trial = holes + [((r, c), (hh, ww))]
        try:
            _check_hole_layout(dims, trial)
        except GenError:
            continue
        holes = trial
    return ShapeSpec(
        kind=RECT_WITH_HOLES, dims=(h, w), holes=tuple(holes), seed=seed
    )


def _grow_blob(rng, shape, target) -> np.ndarray:
    """Randomized accretion of a 4-connected blob from the center."""
    h, w = shape
    mask = np.zeros(shape, dtype=bool)
    start = (h // 2, w // 2)
    mask[start] = True
    frontier = []
    in_frontier = set()

    def push_neighbors(r, c):
        for nr, nc in ((r - 1, c), (r + 1, c), (r, c - 1), (r, c + 1)):
            if 0 <= nr < h and 0 <= nc < w and not mask[nr, nc]:
                if (nr, nc) not in in_frontier:
                    in_frontier.add((nr, nc))
                    frontier.append((nr, nc))

    push_neighbors(*start)
    area = 1
    while area < target and frontier:
        i = int(rng.integers(len(frontier)))
        r, c = frontier[i]
        frontier[i] = frontier[-1]
        frontier.pop()
        in_frontier.discard((r, c))
        if mask[r, c]:
            continue
        mask[r, c] = True
        area += 1
        push_neighbors(r, c)
    return mask


def _fill_pathological(mask: np.ndarray, cap: int = 200) -> np.ndarray:
    """Fill the row-major-first background cell of each offending window,
    iterating to a fixpoint."""
    mask = mask.copy()
    for _ in range(cap):
        a = mask[:-1, :-1]
        b = mask[:-1, 1:]
        c = mask[1:, :-1]
        d = mask[1:, 1:]
        hits = np.argwhere((a & d & ~b & ~c) | (b & c & ~a & ~d))
        if len(hits) == 0:
            return mask
        for r, col in hits:
            cells = [(r, col), (r, col + 1), (r + 1, col), (r + 1, col + 1)]
            for rr, cc in cells:
                if not mask[rr, cc]:
                    mask[rr, cc] = True
                    break
    raise GenError("pathological-window repair did not converge")


def gen_random_blob(spec: ShapeSpec) -> BinaryGrid:
    """Seeded random valid component by accretion, upscaling, and repair.

    The blob is grown at half resolution and upscaled 2x so no point can be
    thin; remaining pathological windows are filled to a fixpoint. If the
    result still fails validation the growth is redone with a derived seed.
    Deterministic for a fixed spec. Hole count is not prescribed; ground
    truth comes from the complement oracle.
    """
    h, w = spec.dims
    if h < 4 or w < 4:
        raise GenError(f"blob grid {h}x{w} too small")
    target_area = spec.target_area or (h * w) // 4
    coarse_target = max(1, target_area // 4)
    for attempt in range(64):
        rng = np.random.Generator(
            np.random.PCG64(np.random.SeedSequence([spec.seed, attempt]))
        )
        coarse = _grow_blob(rng, (h // 2, w // 2), coarse_target)
        try:
            # Repairing diagonal pinches at half resolution keeps the
            # upscaled blob built from 2x2 blocks, so no point can be thin
            # and the fine grid needs at most a final fixpoint pass.
            coarse = _fill_pathological(coarse)
        except GenError:
            continue
        mask = np.zeros((h, w), dtype=bool)
        up = coarse.repeat(2, axis=0).repeat(2, axis=1)
        mask[: up.shape[0], : up.shape[1]] = up
        try:
            mask = _fill_pathological(mask)
        except GenError:
            continue
        g = BinaryGrid(mask)
        labels, n = label_mask(mask)
        if n != 1:
            continue
        if validate_component(g, mask).valid:
            return g
    raise GenError(f"no valid blob for seed {spec.seed} within attempt cap")
