#plugsim\src\geometry\frames.py
"""
Charger/socket frames and the projection-based misalignment angles.

Sign convention (used by the plant and controller wiring as well):
theta_x is positive when the charger axis z_c tips toward -y_s, i.e. a
right-handed rotation about x_s; theta_y is positive when z_c tips toward
+x_s, a right-handed rotation about y_s. Angles are radians internally,
translations are millimetres.
"""

import math
from typing import Literal, Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, field_validator
from scipy.spatial.transform import Rotation as ScipyRotation

from src.core.errors import InvalidInputError, PoseOutOfRangeError

ORTHONORMAL_TOL = 1e-9
UNIT_NORM_TOL = 1e-6

Axis = Literal["x", "y", "z"]


class Rotation(BaseModel):
    """3x3 proper rotation mapping charger-frame vectors into the socket frame."""

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    matrix: np.ndarray = Field(description="Orthonormal 3x3 matrix with determinant +1")

    @field_validator("matrix", mode="before")
    @classmethod
    def _check_matrix(cls, value):
        m = np.array(value, dtype=float)
        if m.shape != (3, 3) or not np.all(np.isfinite(m)):
            raise ValueError("rotation matrix must be a finite 3x3 array")
        if not np.allclose(m.T @ m, np.eye(3), atol=ORTHONORMAL_TOL, rtol=0.0):
            raise ValueError("rotation matrix columns are not orthonormal")
        if abs(np.linalg.det(m) - 1.0) > ORTHONORMAL_TOL:
            raise ValueError("rotation matrix determinant is not +1")
        m.setflags(write=False)
        return m

    @classmethod
    def identity(cls) -> "Rotation":
        return cls(matrix=np.eye(3))

    @classmethod
    def from_quaternion(cls, qw: float, qx: float, qy: float, qz: float) -> "Rotation":
        # scipy expects scalar-last order
        return cls(matrix=ScipyRotation.from_quat([qx, qy, qz, qw]).as_matrix())

    def as_quaternion(self) -> Tuple[float, float, float, float]:
        qx, qy, qz, qw = ScipyRotation.from_matrix(self.matrix).as_quat()
        return float(qw), float(qx), float(qy), float(qz)

    def compose(self, other: "Rotation") -> "Rotation":
        """self after other: (self.compose(other)).apply(v) == self.apply(other.apply(v))."""
        return Rotation(matrix=self.matrix @ other.matrix)

    def apply(self, v) -> np.ndarray:
        return apply(self, v)

    def __hash__(self) -> int:
        return hash(self.matrix.tobytes())

    def __eq__(self, other) -> bool:
        return isinstance(other, Rotation) and np.array_equal(self.matrix, other.matrix)


class MisalignmentAngles(BaseModel):
    model_config = ConfigDict(frozen=True)

    theta_x: float = Field(description="Rotation about the socket x axis, radians")
    theta_y: float = Field(description="Rotation about the socket y axis, radians")

    @field_validator("theta_x", "theta_y")
    @classmethod
    def _within_half_turn(cls, value: float) -> float:
        if not math.isfinite(value) or abs(value) >= math.pi / 2:
            raise ValueError("misalignment angle must lie in (-pi/2, pi/2)")
        return value

    @classmethod
    def zero(cls) -> "MisalignmentAngles":
        return cls(theta_x=0.0, theta_y=0.0)

    @classmethod
    def from_degrees(cls, theta_x_deg: float, theta_y_deg: float) -> "MisalignmentAngles":
        return cls(theta_x=math.radians(theta_x_deg), theta_y=math.radians(theta_y_deg))

    def to_degrees(self) -> Tuple[float, float]:
        return math.degrees(self.theta_x), math.degrees(self.theta_y)

    @property
    def total(self) -> float:
        """Combined tilt magnitude, radians."""
        return math.hypot(self.theta_x, self.theta_y)


class Pose(BaseModel):
    model_config = ConfigDict(frozen=True)

    rotation: Rotation = Field(default_factory=Rotation.identity)
    translation: Tuple[float, float, float] = Field(
        default=(0.0, 0.0, 0.0), description="Charger origin in the socket frame, mm"
    )

    @field_validator("translation")
    @classmethod
    def _finite(cls, value):
        if not all(math.isfinite(c) for c in value):
            raise ValueError("pose translation must be finite")
        return value

    def compose(self, other: "Pose") -> "Pose":
        t = self.rotation.apply(other.translation) + np.asarray(self.translation)
        return Pose(rotation=self.rotation.compose(other.rotation), translation=tuple(float(c) for c in t))

    @property
    def z_axis(self) -> np.ndarray:
        return self.rotation.matrix[:, 2].copy()

    def misalignment(self) -> MisalignmentAngles:
        return extract_misalignment(self.z_axis)


def rotation_about_axis(axis: Axis, angle: float) -> Rotation:
    """Right-handed rotation by `angle` radians about a socket axis."""
    if not math.isfinite(angle):
        raise InvalidInputError(f"rotation angle must be finite, got {angle}")
    c, s = math.cos(angle), math.sin(angle)
    if axis == "x":
        m = [[1.0, 0.0, 0.0], [0.0, c, -s], [0.0, s, c]]
    elif axis == "y":
        m = [[c, 0.0, s], [0.0, 1.0, 0.0], [-s, 0.0, c]]
    elif axis == "z":
        m = [[c, -s, 0.0], [s, c, 0.0], [0.0, 0.0, 1.0]]
    else:
        raise InvalidInputError(f"unknown axis '{axis}' (expected x, y or z)")
    return Rotation(matrix=m)


def apply(rotation: Rotation, v) -> np.ndarray:
    return rotation.matrix @ np.asarray(v, dtype=float)


def extract_misalignment(z_c_in_socket) -> MisalignmentAngles:
    """Project the charger axis onto the z_s-y_s and z_s-x_s planes."""
    z = np.asarray(z_c_in_socket, dtype=float)
    if z.shape != (3,) or not np.all(np.isfinite(z)):
        raise InvalidInputError("charger axis must be a finite 3-vector")
    norm = float(np.linalg.norm(z))
    if abs(norm - 1.0) > UNIT_NORM_TOL:
        raise InvalidInputError(f"charger axis must be a unit vector (norm={norm:.9f})")
    if z[2] <= 0.0:
        raise PoseOutOfRangeError(f"charger axis faces away from the socket (z={z[2]:.6f})")
    return MisalignmentAngles(
        theta_x=math.atan2(-z[1], z[2]),
        theta_y=math.atan2(z[0], z[2]),
    )


def misalignment_series(z_axes) -> Tuple[np.ndarray, np.ndarray]:
    """Vectorised extract_misalignment over an (N, 3) array of charger axes."""
    z = np.asarray(z_axes, dtype=float)
    if z.ndim != 2 or z.shape[1] != 3:
        raise InvalidInputError(f"expected an (N, 3) array of axes, got shape {z.shape}")
    norms = np.linalg.norm(z, axis=1)
    if np.any(np.abs(norms - 1.0) > UNIT_NORM_TOL):
        raise InvalidInputError("charger axes must be unit vectors")
    if np.any(z[:, 2] <= 0.0):
        raise PoseOutOfRangeError("charger axis faces away from the socket in at least one sample")
    return np.arctan2(-z[:, 1], z[:, 2]), np.arctan2(z[:, 0], z[:, 2])


def rotation_from_misalignment(angles: MisalignmentAngles) -> Rotation:
    """
    Inverse of extract_misalignment: R = R_y(theta_y) . R_x(a) with
    a = atan(tan(theta_x) * cos(theta_y)), so that the projected angles of
    R . e_z are exactly (theta_x, theta_y).
    """
    a = math.atan(math.tan(angles.theta_x) * math.cos(angles.theta_y))
    return rotation_about_axis("y", angles.theta_y).compose(rotation_about_axis("x", a))


def rotations_from_misalignment_series(theta_x, theta_y) -> np.ndarray:
    """Stacked (N, 3, 3) matrices of rotation_from_misalignment, vectorised."""
    tx = np.asarray(theta_x, dtype=float)
    ty = np.asarray(theta_y, dtype=float)
    a = np.arctan(np.tan(tx) * np.cos(ty))
    ca, sa, cy, sy = np.cos(a), np.sin(a), np.cos(ty), np.sin(ty)
    zeros, ones = np.zeros_like(a), np.ones_like(a)
    r_y = np.stack([
        np.stack([cy, zeros, sy], axis=-1),
        np.stack([zeros, ones, zeros], axis=-1),
        np.stack([-sy, zeros, cy], axis=-1),
    ], axis=-2)
    r_x = np.stack([
        np.stack([ones, zeros, zeros], axis=-1),
        np.stack([zeros, ca, -sa], axis=-1),
        np.stack([zeros, sa, ca], axis=-1),
    ], axis=-2)
    return r_y @ r_x
