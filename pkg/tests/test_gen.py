import numpy as np
import pytest

import holecount as hc
from holecount import gen
from holecount.errors import GenError
from holecount.labeling import holes_in_mask, label_mask


def test_fixture_names():
    fx = gen.paper_fixtures()
    assert set(fx) == {"m5", "m7", "m6_annotations"}
    assert (fx["m5"].height, fx["m5"].width) == (8, 8)
    assert (fx["m7"].height, fx["m7"].width) == (8, 8)
    assert len(fx["m6_annotations"]) == 8
    assert all(len(row) == 8 for row in fx["m6_annotations"])


def test_fixture_annotation_grid_matches_m5(m5, m6_annotations):
    # Nonzero annotation cells are exactly the component cells.
    ann_fg = {
        (r, c)
        for r, row in enumerate(m6_annotations)
        for c, v in enumerate(row)
        if v != 0
    }
    assert ann_fg == m5.foreground_points()


def test_rect_5x5_center_hole():
    spec = hc.ShapeSpec(
        kind=gen.RECT_WITH_HOLES, dims=(5, 5), holes=(((2, 2), (1, 1)),)
    )
    g = hc.gen_rect_with_holes(spec)
    assert not g.is_foreground((2, 2))
    c = hc.classify_corners(g, g.foreground_points()).census
    assert (c.c2, c.c4) == (4, 4)
    assert hc.holes_by_formula(c) == 1 == holes_in_mask(g.cells)


def test_rect_8x8_no_holes():
    g = hc.gen_rect_with_holes(hc.ShapeSpec(kind=gen.RECT_WITH_HOLES, dims=(8, 8)))
    assert g.foreground_count() == 64
    c = hc.classify_corners(g, g.foreground_points()).census
    assert (c.c2, c.c4) == (4, 0)
    assert hc.holes_by_formula(c) == 0


def test_rect_9x9_two_holes():
    spec = hc.ShapeSpec(
        kind=gen.RECT_WITH_HOLES,
        dims=(9, 9),
        holes=(((2, 2), (1, 1)), ((5, 5), (2, 2))),
    )
    g = hc.gen_rect_with_holes(spec)
    c = hc.classify_corners(g, g.foreground_points()).census
    assert (c.c2, c.c4) == (4, 8)
    assert hc.holes_by_formula(c) == 2 == holes_in_mask(g.cells)


@pytest.mark.parametrize(
    "holes",
    [
        (((0, 2), (1, 1)),),  # in the top row
        (((1, 1), (1, 1)),),  # ring touches the perimeter
        (((2, 2), (1, 1)), ((2, 4), (1, 1))),  # 1-wide wall between holes
        (((2, 2), (0, 2)),),  # empty hole
    ],
)
def test_rect_rejects_bad_layouts(holes):
    with pytest.raises(GenError):
        hc.gen_rect_with_holes(
            hc.ShapeSpec(kind=gen.RECT_WITH_HOLES, dims=(9, 9), holes=holes)
        )


def test_rect_rejects_tiny_dims():
    with pytest.raises(GenError):
        hc.gen_rect_with_holes(hc.ShapeSpec(kind=gen.RECT_WITH_HOLES, dims=(1, 5)))


@pytest.mark.parametrize("hole_count", [0, 1, 3, 5])
def test_random_rect_spec_places_requested_holes(hole_count):
    spec = hc.random_rect_spec(7, (20, 20), hole_count)
    g = hc.gen_rect_with_holes(spec)
    assert len(spec.holes) == hole_count
    assert holes_in_mask(g.cells) == hole_count
    rep = hc.analyze_component(g, 1)
    assert rep.validity.valid
    assert rep.holes_formula == hole_count


def test_random_rect_spec_deterministic():
    a = hc.random_rect_spec(42, (25, 25), 4)
    b = hc.random_rect_spec(42, (25, 25), 4)
    assert a == b
    assert np.array_equal(
        hc.gen_rect_with_holes(a).cells, hc.gen_rect_with_holes(b).cells
    )


def test_random_rect_spec_impossible_raises():
    with pytest.raises(GenError):
        hc.random_rect_spec(0, (6, 6), 10)


@pytest.mark.parametrize("seed", range(5))
def test_blob_deterministic(seed):
    spec = hc.ShapeSpec(kind=gen.RANDOM_BLOB, dims=(32, 32), seed=seed)
    a = hc.gen_random_blob(spec)
    b = hc.gen_random_blob(spec)
    assert a == b


def test_blob_seeds_differ():
    a = hc.gen_random_blob(hc.ShapeSpec(kind=gen.RANDOM_BLOB, dims=(32, 32), seed=0))
    b = hc.gen_random_blob(hc.ShapeSpec(kind=gen.RANDOM_BLOB, dims=(32, 32), seed=1))
    assert a != b


@pytest.mark.parametrize("seed", range(8))
def test_blob_is_single_valid_component(seed):
    g = hc.gen_random_blob(
        hc.ShapeSpec(kind=gen.RANDOM_BLOB, dims=(24, 24), seed=seed)
    )
    _, n = label_mask(g.cells)
    assert n == 1
    assert hc.validate_component(g, g.cells).valid


def test_blob_respects_target_area():
    g = hc.gen_random_blob(
        hc.ShapeSpec(kind=gen.RANDOM_BLOB, dims=(40, 40), seed=3, target_area=600)
    )
    # Coarse growth plus repair can only add cells beyond the target.
    assert g.foreground_count() >= 500


def test_blob_rejects_tiny_dims():
    with pytest.raises(GenError):
        hc.gen_random_blob(hc.ShapeSpec(kind=gen.RANDOM_BLOB, dims=(3, 8), seed=0))


def test_fill_pathological_repairs_checkerboard():
    mask = np.zeros((6, 6), dtype=bool)
    mask[2, 2] = mask[3, 3] = True
    fixed = gen._fill_pathological(mask)
    g = hc.BinaryGrid(fixed)
    assert hc.find_pathological(g, fixed).clean
    assert fixed[2, 2] and fixed[3, 3]  # repair only adds cells
