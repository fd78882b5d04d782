import cmath
import math

import numpy as np
import pytest

from anacap.basis import (
    BasisSet,
    CornerAdapted,
    Powers,
    PowerPole,
    Rings,
    SimplePole,
    build_basis,
    corner_exponent,
    disk_pole_layout,
    schedule_from_config,
    schedule_to_config,
)
from anacap.errors import BranchCutError, PoleEvaluationError, SceneConfigError
from anacap.geometry import Disk, Ellipse, Polygon, scene, validate_scene

SQUARE = Polygon((1 + 0j, 1j, -1 + 0j, -1j))


# --- evaluation -------------------------------------------------------------

def test_simple_pole_value():
    assert SimplePole(2 + 0j).eval(3 + 0j) == 1.0


def test_power_pole_value():
    assert PowerPole(0j, 2).eval(1 + 1j) == pytest.approx(-0.5j, abs=1e-15)


def test_corner_function_tends_to_one_at_infinity():
    f = CornerAdapted(0j, 1 + 0j, -1 / 6, 0)
    assert f.eval(1e9 + 0j) == pytest.approx(1.0, abs=1e-8)


def test_pole_evaluation_errors():
    with pytest.raises(PoleEvaluationError):
        SimplePole(2 + 0j).eval(2 + 0j)
    with pytest.raises(PoleEvaluationError):
        PowerPole(1j, 3).eval(1j)
    with pytest.raises(PoleEvaluationError):
        CornerAdapted(0j, 1 + 0j, -1 / 6, 1).eval(1 + 0j)


def test_branch_cut_error_between_corner_and_anchor():
    f = CornerAdapted(0j, 1 + 0j, -1 / 6, 1)
    with pytest.raises(BranchCutError):
        f.eval(0.5 + 0j)  # midpoint of the cut segment (a, c)


def test_corner_function_safe_on_convex_boundary():
    # with the anchor at the interior anchor point, boundary evaluation of a
    # convex shape never touches the branch cut
    fs = [CornerAdapted(0j, a, -1 / 6, 1) for a in (1, 1j, -1, -1j)]
    t = np.linspace(1e-6, 1 - 1e-6, 400)
    for seg_start, seg_end in [(1, 1j), (1j, -1), (-1, -1j), (-1j, 1)]:
        for z in seg_start + t * (seg_end - seg_start):
            for f in fs:
                f.eval(complex(z))  # must not raise


# --- d_infinity -------------------------------------------------------------

def numeric_d_infinity(b):
    # oracle: z*eval(b, z) sampled at growing |z| and Richardson-extrapolated
    vals = []
    for R in (1e4, 1e5, 1e6):
        z = R * cmath.exp(0.37j)
        vals.append(z * b.eval(z))
    # successive differences decay by 10x; extrapolate linearly in 1/R
    v1, v2, v3 = vals
    return v3 + (v3 - v2) / 9.0


@pytest.mark.parametrize("b,expect", [
    (SimplePole(1.5 - 2j), 1.0),
    (PowerPole(0.5j, 1), 1.0),
    (PowerPole(0.5j, 3), 0.0),
    (CornerAdapted(0j, 1 + 0j, -1 / 6, 1), 1.0),
    (CornerAdapted(0.2j, 1 + 0j, 0.25, 2), 0.0),
])
def test_d_infinity_against_numeric_limit(b, expect):
    assert b.d_infinity() == expect
    assert numeric_d_infinity(b) == pytest.approx(expect, abs=1e-6)


# --- layouts ----------------------------------------------------------------

def test_layout_single_pole_is_center():
    assert disk_pole_layout(Disk(2, 1.0), 0) == [2]


def test_layout_one_layer():
    pts = disk_pole_layout(Disk(0, 1.0), 1)
    assert set(pts) == {0, 0.5, -0.5, 0.5j, -0.5j}


def test_layout_counts_and_interiority():
    for layers in range(6):
        d = Disk(1 + 1j, 2.0)
        pts = disk_pole_layout(d, layers)
        assert len(pts) == 4 * layers + 1
        assert len(set(pts)) == len(pts)
        rmax = max(abs(p - d.center) for p in pts)
        if layers:
            assert rmax == pytest.approx(d.radius * layers / (layers + 1))
        assert rmax < d.radius


# --- build_basis ------------------------------------------------------------

def test_two_disk_single_pole_basis(two_disks):
    basis = build_basis(validate_scene(two_disks), Rings(0))
    assert basis == [SimplePole(2 + 0j), SimplePole(-2 + 0j)]


def test_square_monomials():
    basis = build_basis(validate_scene(scene([SQUARE])), Powers(2))
    assert basis == [PowerPole(0j, 1), PowerPole(0j, 2)]


def test_square_with_corner_functions():
    basis = build_basis(validate_scene(scene([SQUARE])), Powers(1, with_corners=True))
    assert basis[0] == PowerPole(0j, 1)
    cs = [b for b in basis if isinstance(b, CornerAdapted)]
    assert len(cs) == 4
    for b in cs:
        assert b.beta == pytest.approx(-1 / 6, abs=1e-15)
        assert b.k == 1
        assert b.c == 0j


def test_corner_exponent_range():
    assert corner_exponent(1.5 * math.pi) == pytest.approx(-1 / 6)
    assert corner_exponent(0.5 * math.pi) == pytest.approx(0.5)
    # omega in (0, 2pi) keeps beta above -1/4
    for omega in np.linspace(0.05, 2 * math.pi - 0.05, 50):
        assert corner_exponent(omega) > -0.25


def test_rings_on_polygon_rejected():
    with pytest.raises(SceneConfigError):
        build_basis(validate_scene(scene([SQUARE])), Rings(1))


def test_rings_on_ellipse():
    e = Ellipse(0, 2.0, 1.0)
    basis = build_basis(validate_scene(scene([e])), Rings(1))
    assert len(basis) == 5
    from anacap.geometry import point_in_shape

    for b in basis:
        assert point_in_shape(e, b.a)


def test_non_star_shape_with_corners_rejected():
    # a thin U-shaped polygon is not star-shaped about its anchor
    u_shape = Polygon((0j, 5 + 0j, 5 + 3j, 4 + 3j, 4 + 1j, 1 + 1j, 1 + 3j, 0 + 3j))
    sc = validate_scene(scene([u_shape]))
    with pytest.raises(SceneConfigError):
        build_basis(sc, Powers(1, with_corners=True))


def test_vanishing_at_infinity(two_disks):
    sq = validate_scene(scene([SQUARE]))
    basis = build_basis(sq, Powers(2, with_corners=True))
    basis += build_basis(validate_scene(two_disks), Rings(1))
    R = 1e8
    for b in basis:
        for theta in (0.1, 2.0, 4.0):
            assert abs(b.eval(R * cmath.exp(1j * theta))) < 1e-6


def test_per_shape_schedules(two_disks):
    sc = validate_scene(two_disks)
    basis = build_basis(sc, [Rings(0), Rings(1)])
    assert len(basis) == 1 + 5


# --- BasisSet ---------------------------------------------------------------

def test_basis_set_matches_scalar_eval(rng):
    basis = [SimplePole(0.3 + 0.1j), PowerPole(-2 + 0j, 3),
             CornerAdapted(0j, 1 + 0j, -1 / 6, 2), SimplePole(-1j)]
    bs = BasisSet(basis)
    assert bs.n == 4
    for _ in range(20):
        z = complex(rng.uniform(2, 4), rng.uniform(0.5, 3))
        vals = bs.eval_all(z)
        for i, b in enumerate(basis):
            assert vals[i] == pytest.approx(b.eval(z), rel=1e-13)


def test_basis_set_array_eval():
    basis = [SimplePole(1j), PowerPole(0j, 2)]
    bs = BasisSet(basis)
    z = np.array([3 + 0j, 4j, -5 + 1j])
    vals = bs.eval_all(z)
    assert vals.shape == (2, 3)
    assert vals[0, 0] == pytest.approx(1 / (3 - 1j))


def test_d_vector_order():
    basis = [PowerPole(0j, 2), SimplePole(1j), PowerPole(0j, 1)]
    assert list(BasisSet(basis).d_vector()) == [0, 1, 1]


# --- schedule config --------------------------------------------------------

def test_schedule_round_trip():
    for sched in (Rings(4), Powers(6, True), Powers(2, False)):
        assert schedule_from_config(schedule_to_config(sched)) == sched


def test_schedule_config_rejects():
    with pytest.raises(SceneConfigError):
        schedule_from_config({"mode": "rings"})
    with pytest.raises(SceneConfigError):
        schedule_from_config({"mode": "rings", "layers": 1, "bogus": 2})
    with pytest.raises(SceneConfigError):
        schedule_from_config({"mode": "spiral", "layers": 1})
    with pytest.raises(SceneConfigError):
        schedule_from_config({"layers": 1})
