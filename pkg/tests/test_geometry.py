import math

import numpy as np
import pytest

from anacap.errors import (
    DegenerateShapeError,
    OverlapError,
    SceneConfigError,
    ZeroScaleError,
)
from anacap.geometry import (
    ArcChain,
    CircularArc,
    Disk,
    Ellipse,
    Polygon,
    Segment,
    arc_length,
    arcs,
    corners,
    interior_anchor,
    point_in_shape,
    scene,
    scene_from_config,
    scene_to_config,
    transform,
    validate_scene,
)

SQUARE = Polygon((1 + 0j, 1j, -1 + 0j, -1j))


def half_disk(center=3 + 0j, r=1.0) -> ArcChain:
    return ArcChain((
        Segment(center - r, center + r),
        CircularArc(center, r, 0.0, math.pi),
    ))


# --- validate_scene ---------------------------------------------------------

def test_two_unit_disks_gap():
    sc = validate_scene(scene([Disk(2, 1.0), Disk(-2, 1.0)]))
    assert sc.min_gap == pytest.approx(2.0, abs=1e-12)


def test_overlapping_disks_rejected():
    with pytest.raises(OverlapError):
        validate_scene(scene([Disk(0, 1.0), Disk(1.5, 1.0)]))


def test_grid_of_25_disks_valid():
    shapes = [Disk(complex(i, j), 0.4) for i in range(5) for j in range(5)]
    sc = validate_scene(scene(shapes))
    # oracle: minimal pairwise center distance is 1, so gap is 1 - 0.8
    centers = np.array([s.center for s in shapes])
    d = np.abs(centers[:, None] - centers[None, :])
    np.fill_diagonal(d, np.inf)
    assert d.min() == pytest.approx(1.0)
    assert sc.min_gap == pytest.approx(0.2, abs=1e-12)


def test_contained_shape_rejected():
    with pytest.raises(OverlapError):
        validate_scene(scene([Disk(0, 2.0), Disk(0.3, 0.5)]))


def test_validate_idempotent(two_disks):
    once = validate_scene(two_disks)
    twice = validate_scene(once)
    assert once == twice


def test_single_shape_gap_infinite():
    sc = validate_scene(scene([Disk(0, 1.0)]))
    assert sc.min_gap == math.inf


def test_degenerate_shapes_rejected():
    with pytest.raises(DegenerateShapeError):
        validate_scene(scene([Disk(0, 0.0)]))
    with pytest.raises(DegenerateShapeError):
        validate_scene(scene([Polygon((0, 1 + 0j))]))
    with pytest.raises(DegenerateShapeError):  # negatively oriented
        validate_scene(scene([Polygon((1 + 0j, -1j, -1 + 0j, 1j))]))
    with pytest.raises(DegenerateShapeError):  # self-intersecting bow-tie
        validate_scene(scene([Polygon((0j, 1 + 1j, 1 + 0j, 1j))]))
    with pytest.raises(DegenerateShapeError):  # collinear adjacent vertices
        validate_scene(scene([Polygon((0j, 1 + 0j, 2 + 0j, 1 + 1j))]))


def test_bad_labels_rejected():
    with pytest.raises(SceneConfigError):
        scene([Disk(0, 1.0)], labels=("X",))


# --- corners ----------------------------------------------------------------

def test_disk_and_ellipse_have_no_corners():
    assert corners(Disk(0, 1.0)) == []
    assert corners(Ellipse(0, 2.0, 1.0)) == []


def test_square_corners_omega():
    cs = corners(SQUARE)
    assert len(cs) == 4
    assert {c.location for c in cs} == {1 + 0j, 1j, -1 + 0j, -1j}
    for c in cs:
        assert c.omega_angle == pytest.approx(1.5 * math.pi, abs=1e-12)


def test_half_disk_corners():
    # interior angle pi/2 where the diameter meets the semicircle, so the
    # complement occupies 3*pi/2; oracle is the tangent-vector computation
    cs = corners(half_disk())
    assert len(cs) == 2
    locs = sorted([c.location for c in cs], key=lambda z: z.real)
    assert locs[0] == pytest.approx(2 + 0j, abs=1e-12)
    assert locs[1] == pytest.approx(4 + 0j, abs=1e-12)
    for c in cs:
        assert c.omega_angle == pytest.approx(1.5 * math.pi, abs=1e-9)


@pytest.mark.parametrize("poly", [
    SQUARE,
    Polygon((0j, 1 + 0j, 1j)),
    Polygon((0j, 3 + 0j, 3 + 1j, 2 + 1j, 2 + 2j, 0 + 2j)),  # L-shape (non-convex)
])
def test_polygon_turning_angles_sum(poly):
    # sum of (omega - pi) over corners equals 2*pi for every simple polygon
    total = sum(c.omega_angle - math.pi for c in corners(poly))
    assert total == pytest.approx(2 * math.pi, abs=1e-9)


# --- arcs -------------------------------------------------------------------

def test_disk_arc_parametrization():
    (arc,) = arcs(Disk(2, 1.0))
    t = np.linspace(0, 1, 7)
    assert np.allclose(arc.point(t), 2 + np.exp(2j * math.pi * t))


def test_ellipse_arc_parametrization():
    (arc,) = arcs(Ellipse(0, 2.0, 1.0))
    t = np.linspace(0, 1, 9)
    expect = 2 * np.cos(2 * math.pi * t) + 1j * np.sin(2 * math.pi * t)
    assert np.allclose(arc.point(t), expect)


def test_square_has_four_segment_arcs():
    segs = arcs(SQUARE)
    assert len(segs) == 4
    assert segs[0].start == 1 + 0j and segs[0].end == 1j


@pytest.mark.parametrize("shape,perimeter", [
    (Disk(1 + 2j, 1.5), 2 * math.pi * 1.5),
    (SQUARE, 4 * math.sqrt(2)),
    (Ellipse(0, 2.0, 1.0), 9.688448220547675),
    (half_disk(), 2 + math.pi),
])
def test_arc_length_closed_forms(shape, perimeter):
    assert arc_length(shape) == pytest.approx(perimeter, abs=1e-12)


def test_ellipse_perimeter_elliptic_oracle():
    # independent oracle: complete elliptic integral of the second kind
    from scipy.special import ellipe

    a, b = 2.0, 1.0
    expect = 4 * a * ellipe(1 - (b / a) ** 2)
    assert arc_length(Ellipse(0, a, b)) == pytest.approx(expect, abs=1e-12)


# --- interior_anchor --------------------------------------------------------

def test_anchor_examples():
    assert interior_anchor(Disk(2, 1.0)) == 2
    assert interior_anchor(SQUARE) == 0
    tri = Polygon((0j, 1 + 0j, 1j))
    anchor = interior_anchor(tri)
    assert anchor == pytest.approx((1 + 1j) / 3, abs=1e-12)
    assert point_in_shape(tri, anchor)


def test_anchor_inside_every_shape():
    for shape in [Ellipse(3 + 1j, 2.0, 0.5, 0.7),
                  half_disk(),
                  Polygon((0j, 4 + 0j, 4 + 1j, 1 + 1j, 1 + 3j, 0 + 3j))]:
        assert point_in_shape(shape, interior_anchor(shape))


# --- transform --------------------------------------------------------------

def test_transform_identity(two_disks):
    sc = transform(two_disks, 1.0)
    assert sc.shapes == two_disks.shapes


def test_transform_scales_disks(two_disks):
    sc = transform(two_disks, 2.0)
    assert sc.shapes[0] == Disk(4 + 0j, 2.0)
    assert sc.shapes[1] == Disk(-4 + 0j, 2.0)


def test_transform_rotates_square_corners():
    mapped = transform(scene([SQUARE]), 1j, 0).shapes[0]
    orig = {c.location * 1j for c in corners(SQUARE)}
    new = {c.location for c in corners(mapped)}
    assert all(min(abs(a - b) for b in new) < 1e-12 for a in orig)
    for c in corners(mapped):
        assert c.omega_angle == pytest.approx(1.5 * math.pi, abs=1e-12)


def test_transform_preserves_corner_angles_generic():
    a = 0.7 - 1.3j
    tri = Polygon((0j, 2 + 0j, 1 + 2j))
    before = sorted(c.omega_angle for c in corners(tri))
    after = sorted(c.omega_angle for c in corners(transform(scene([tri]), a, 5j).shapes[0]))
    assert np.allclose(before, after, atol=1e-12)


def test_transform_zero_scale_rejected(two_disks):
    with pytest.raises(ZeroScaleError):
        transform(two_disks, 0.0)


def test_transform_min_gap_scales(two_disks):
    sc = validate_scene(two_disks)
    assert transform(sc, 3.0).min_gap == pytest.approx(6.0)


# --- config round-trip ------------------------------------------------------

def test_config_round_trip():
    sc = scene([Disk(2, 1.0), SQUARE, Ellipse(6j, 2.0, 1.0, 0.3), half_disk(-5 + 0j)],
               labels=("E", "F", "E", "F"))
    obj = scene_to_config(sc)
    back = scene_from_config(obj)
    assert back.shapes == sc.shapes
    assert back.labels == sc.labels


def test_config_unknown_fields_rejected():
    with pytest.raises(SceneConfigError):
        scene_from_config({"shapes": [{"type": "disk", "center": [0, 0],
                                       "radius": 1.0, "colour": "red"}]})
    with pytest.raises(SceneConfigError):
        scene_from_config({"shapes": [], "extra": 1})
    with pytest.raises(SceneConfigError):
        scene_from_config({"shapes": [{"type": "blob"}]})
    with pytest.raises(SceneConfigError):
        scene_from_config({"shapes": [{"type": "disk", "center": [0], "radius": 1.0}]})
    with pytest.raises(SceneConfigError):
        scene_from_config({"shapes": [{"type": "disk", "center": [0, 0],
                                       "radius": 1.0, "label": "G"}]})
