"""Connected-component labeling and the complement-component hole oracle.

Components are maximal sets of cells joined by direct-adjacency (4-connected)
paths. Ids are assigned by first occurrence in row-major scan order, starting
at 1; 0 is "not in the target set".
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
from scipy import ndimage

from .errors import BorderContactError, UnknownComponentError
from .grid import BinaryGrid, Point2

# 4-connectivity structuring element.
_FOUR = np.array([[0, 1, 0], [1, 1, 1], [0, 1, 0]], dtype=bool)


def label_mask(mask: np.ndarray) -> tuple[np.ndarray, int]:
    """4-connected labeling of a bool mask with deterministic ids.

    Ids are 1..n by first occurrence in row-major order.
    """
    raw, n = ndimage.label(mask, structure=_FOUR)
    if n == 0:
        return raw, 0
    flat = raw.ravel()
    values, first = np.unique(flat, return_index=True)
    nonzero = values != 0
    values, first = values[nonzero], first[nonzero]
    order = np.argsort(first, kind="stable")
    remap = np.zeros(n + 1, dtype=raw.dtype)
    remap[values[order]] = np.arange(1, n + 1)
    return remap[raw], n


@dataclass(frozen=True)
class LabelMap:
    """Partition of target cells into 4-connected components."""

    labels: np.ndarray = field(repr=False)
    component_count: int
    component_points: dict[int, frozenset[Point2]] = field(repr=False)

    def points_of(self, component_id: int) -> frozenset[Point2]:
        try:
            return self.component_points[component_id]
        except KeyError:
            raise UnknownComponentError(
                f"component {component_id} not in 1..{self.component_count}"
            ) from None

    def mask_of(self, component_id: int) -> np.ndarray:
        self.points_of(component_id)
        return self.labels == component_id


def label_components(g: BinaryGrid, target: str = "foreground") -> LabelMap:
    """Label the foreground or the background of a grid."""
    if target == "foreground":
        mask = g.cells
    elif target == "background":
        mask = ~g.cells
    else:
        raise ValueError(f"unknown target {target!r}")
    labels, n = label_mask(mask)
    labels.setflags(write=False)
    points: dict[int, set[Point2]] = {i: set() for i in range(1, n + 1)}
    if n:
        rows, cols = np.nonzero(labels)
        for r, c, v in zip(rows.tolist(), cols.tolist(), labels[rows, cols].tolist()):
            points[v].add((r, c))
    frozen = {i: frozenset(s) for i, s in points.items()}
    return LabelMap(labels=labels, component_count=n, component_points=frozen)


def holes_in_mask(mask: np.ndarray) -> int:
    """Number of enclosed complement regions of the mask's cells.

    The mask is taken as one isolated object: it is padded by one background
    ring, the complement is 4-connected-labeled, and every region other than
    the unbounded one counts as a hole.
    """
    padded = np.pad(mask, 1, constant_values=False)
    _, n = label_mask(~padded)
    return n - 1


def count_holes_oracle(g: BinaryGrid, component_id: int, labels: LabelMap | None = None) -> int:
    """Brute-force hole count of one foreground component.

    Builds a scratch image containing only that component, pads it, and
    counts 4-connected complement regions; result is that count minus one.
    Other foreground components are ignored so they can neither merge nor
    split the complement regions of this one.
    """
    if labels is None:
        labels = label_components(g, "foreground")
    mask = labels.mask_of(component_id)
    if mask[0, :].any() or mask[-1, :].any() or mask[:, 0].any() or mask[:, -1].any():
        raise BorderContactError(
            f"component {component_id} touches the image border; pad_background first"
        )
    return holes_in_mask(mask)
