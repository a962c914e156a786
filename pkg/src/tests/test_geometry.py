#plugsim\src\tests\test_geometry.py
import math

import numpy as np
import pytest
from pydantic import ValidationError

from src.core.errors import InvalidInputError, PoseOutOfRangeError
from src.geometry.frames import (
    MisalignmentAngles,
    Pose,
    Rotation,
    extract_misalignment,
    misalignment_series,
    rotation_about_axis,
    rotation_from_misalignment,
    rotations_from_misalignment_series,
)


def test_identity_is_aligned():
    angles = Pose().misalignment()
    assert angles.theta_x == 0.0
    assert angles.theta_y == 0.0


@pytest.mark.parametrize("axis, field", [("x", "theta_x"), ("y", "theta_y")])
def test_single_axis_rotation_gives_that_angle(axis, field):
    angle = math.radians(7.0)
    angles = extract_misalignment(rotation_about_axis(axis, angle).apply([0.0, 0.0, 1.0]))
    assert getattr(angles, field) == pytest.approx(angle, abs=1e-12)
    other = "theta_y" if field == "theta_x" else "theta_x"
    assert getattr(angles, other) == pytest.approx(0.0, abs=1e-12)


def test_positive_theta_x_tips_axis_toward_negative_y():
    z = rotation_about_axis("x", 0.1).apply([0.0, 0.0, 1.0])
    assert z[1] < 0


@pytest.mark.parametrize("tx_deg, ty_deg", [(4.0, 4.0), (-9.5, 6.8), (30.0, -45.0), (0.0, 80.0)])
def test_rotation_from_misalignment_inverts_extraction(tx_deg, ty_deg):
    target = MisalignmentAngles.from_degrees(tx_deg, ty_deg)
    rot = rotation_from_misalignment(target)
    back = extract_misalignment(rot.matrix[:, 2])
    assert back.theta_x == pytest.approx(target.theta_x, abs=1e-12)
    assert back.theta_y == pytest.approx(target.theta_y, abs=1e-12)


def test_vectorised_rotations_match_scalar():
    tx = np.radians([1.0, -3.0, 12.0])
    ty = np.radians([-2.0, 5.0, 0.5])
    stacked = rotations_from_misalignment_series(tx, ty)
    for i in range(3):
        single = rotation_from_misalignment(MisalignmentAngles(theta_x=tx[i], theta_y=ty[i]))
        np.testing.assert_allclose(stacked[i], single.matrix, atol=1e-14)

    sx, sy = misalignment_series(stacked[:, :, 2])
    np.testing.assert_allclose(sx, tx, atol=1e-12)
    np.testing.assert_allclose(sy, ty, atol=1e-12)


def test_non_unit_axis_rejected():
    with pytest.raises(InvalidInputError):
        extract_misalignment([0.0, 0.0, 2.0])


@pytest.mark.parametrize("axis", [[1.0, 0.0, 0.0], [0.0, 0.6, -0.8]])
def test_axis_facing_away_rejected(axis):
    with pytest.raises(PoseOutOfRangeError):
        extract_misalignment(axis)


def test_series_rejects_backward_sample():
    with pytest.raises(PoseOutOfRangeError):
        misalignment_series([[0.0, 0.0, 1.0], [0.0, 0.0, -1.0]])


def test_unknown_axis_and_bad_angle():
    with pytest.raises(InvalidInputError):
        rotation_about_axis("w", 0.1)
    with pytest.raises(InvalidInputError):
        rotation_about_axis("x", float("nan"))


def test_misalignment_angle_domain():
    with pytest.raises(ValidationError):
        MisalignmentAngles(theta_x=math.pi / 2, theta_y=0.0)
    assert MisalignmentAngles.from_degrees(3.0, 4.0).total == pytest.approx(math.radians(5.0))


def test_rotation_rejects_non_orthonormal():
    with pytest.raises(ValidationError):
        Rotation(matrix=np.diag([1.0, 1.0, 2.0]))
    with pytest.raises(ValidationError):
        Rotation(matrix=np.diag([1.0, 1.0, -1.0]))


def test_quaternion_convention_is_scalar_first():
    # 90 deg about z: (cos 45, 0, 0, sin 45)
    half = math.sqrt(0.5)
    rot = Rotation.from_quaternion(half, 0.0, 0.0, half)
    np.testing.assert_allclose(rot.apply([1.0, 0.0, 0.0]), [0.0, 1.0, 0.0], atol=1e-12)
    qw, qx, qy, qz = rot.as_quaternion()
    assert abs(qw) == pytest.approx(half)
    assert abs(qz) == pytest.approx(half)


def test_pose_compose_applies_inner_first():
    outer = Pose(rotation=rotation_about_axis("z", math.pi / 2), translation=(1.0, 0.0, 0.0))
    inner = Pose(translation=(1.0, 0.0, 0.0))
    composed = outer.compose(inner)
    np.testing.assert_allclose(composed.translation, (1.0, 1.0, 0.0), atol=1e-12)
    assert composed.rotation == outer.rotation


@pytest.mark.parametrize("axis", ["x", "y"])
def test_extraction_is_odd(axis):
    plus = extract_misalignment(rotation_about_axis(axis, 0.2).apply([0.0, 0.0, 1.0]))
    minus = extract_misalignment(rotation_about_axis(axis, -0.2).apply([0.0, 0.0, 1.0]))
    assert minus.theta_x == -plus.theta_x
    assert minus.theta_y == -plus.theta_y


def test_apply_preserves_norm():
    rot = rotation_from_misalignment(MisalignmentAngles.from_degrees(7.0, -3.0))
    v = np.array([3.0, -4.0, 12.0])
    assert np.linalg.norm(rot.apply(v)) == pytest.approx(13.0, abs=1e-9)


GRID_DEG = np.linspace(-15.0, 15.0, 13)


@pytest.mark.parametrize("ty_deg", GRID_DEG)
def test_composed_rotation_extraction_closed_form(ty_deg):
    ty = math.radians(ty_deg)
    for tx_deg in GRID_DEG:
        tx = math.radians(tx_deg)
        rot = rotation_about_axis("y", ty).compose(rotation_about_axis("x", tx))
        angles = extract_misalignment(rot.apply([0.0, 0.0, 1.0]))
        assert angles.theta_y == pytest.approx(ty, abs=1e-12)
        assert angles.theta_x == pytest.approx(math.atan(math.tan(tx) / math.cos(ty)), abs=1e-12)


def test_small_composed_rotations_recover_applied_angles():
    grid = np.linspace(-6.0, 6.0, 13)
    worst = 0.0
    for tx_deg in grid:
        for ty_deg in grid:
            rot = rotation_about_axis("y", math.radians(ty_deg)).compose(
                rotation_about_axis("x", math.radians(tx_deg))
            )
            got_x, got_y = extract_misalignment(rot.apply([0.0, 0.0, 1.0])).to_degrees()
            worst = max(worst, abs(got_x - tx_deg), abs(got_y - ty_deg))
    assert worst < 0.05


def test_quarter_turn_about_x_maps_z_to_negative_y():
    v = rotation_about_axis("x", math.pi / 2).apply([0.0, 0.0, 1.0])
    np.testing.assert_allclose(v, [0.0, -1.0, 0.0], atol=1e-15)


def test_half_turn_about_z_keeps_axis_aligned():
    v = rotation_about_axis("z", math.pi).apply([0.0, 0.0, 1.0])
    np.testing.assert_allclose(v, [0.0, 0.0, 1.0], atol=1e-15)
    angles = extract_misalignment(v)
    assert angles.theta_x == pytest.approx(0.0, abs=1e-15)
    assert angles.theta_y == pytest.approx(0.0, abs=1e-15)


def test_five_then_ten_degree_composition():
    rot = rotation_about_axis("y", math.radians(5.0)).compose(rotation_about_axis("x", math.radians(10.0)))
    angles = extract_misalignment(rot.apply([0.0, 0.0, 1.0]))
    assert angles.theta_y == pytest.approx(math.radians(5.0), abs=1e-12)
    expected_x = math.atan(math.tan(math.radians(10.0)) / math.cos(math.radians(5.0)))
    assert angles.theta_x == pytest.approx(expected_x, abs=1e-12)
