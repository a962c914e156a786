#plugsim\src\plant\socket_plant.py
"""
Kinematic charger in a socket with a lumped contact-force model.

Lateral reaction forces grow with insertion depth and tilt, axial reaction
opposes the commanded motion (static + viscous + tilt-dependent friction),
and a stiff ramp in the last 5 mm makes F_z reach its minimum at full depth.
"""

import math
from typing import Optional, Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, model_validator

from src.control.controller import ControllerCommand
from src.core.errors import InvalidInputError, JamFault
from src.geometry.frames import MisalignmentAngles

BOTTOM_RAMP_MM = 5.0
MAX_DT = 0.1


class SocketModel(BaseModel):
    model_config = ConfigDict(frozen=True)

    depth: float = Field(default=34.8, gt=0, description="Insertion depth, mm")
    chamfer_angle: float = Field(default=30.0, gt=0, lt=90, description="Entry chamfer, deg")
    chamfer_length: float = Field(default=3.0, gt=0, description="Chamfer length, mm")
    k_lateral: float = Field(default=60.0, gt=0, description="Lateral stiffness, N/rad per mm inserted")
    k_viscous_z: float = Field(default=0.5, gt=0, description="Axial viscous friction, N/(mm/s)")
    f_base: float = Field(default=50.0, gt=0, description="Static axial resistance, N")
    k_depth: float = Field(default=1.0, gt=0, description="Bottom ramp stiffness, N/mm")
    max_tilt: float = Field(default=12.0, gt=0, description="Admissible tilt once inserted, deg")

    @model_validator(mode="after")
    def _depth_beyond_chamfer(self):
        if self.depth <= self.chamfer_length:
            raise ValueError("socket depth must exceed the chamfer length")
        return self

    @property
    def capture_radius(self) -> float:
        """Lateral offset the chamfer can still guide in, mm."""
        return self.chamfer_length * math.tan(math.radians(self.chamfer_angle))


class ChargerState(BaseModel):
    model_config = ConfigDict(frozen=True)

    theta: MisalignmentAngles = Field(default_factory=MisalignmentAngles.zero)
    z: float = Field(default=0.0, description="Insertion depth, mm; 0 = entry plane, positive = inserted")
    lateral: Tuple[float, float] = Field(default=(0.0, 0.0), description="Lateral offset, mm")


class ContactForces(BaseModel):
    model_config = ConfigDict(frozen=True)

    force: Tuple[float, float, float] = (0.0, 0.0, 0.0)
    torque: Tuple[float, float, float] = (0.0, 0.0, 0.0)

    @classmethod
    def zero(cls) -> "ContactForces":
        return cls()


def contact_forces(socket: SocketModel, state: ChargerState, v_z_cmd: float) -> ContactForces:
    """Noise-free reaction wrench in the end-effector frame."""
    z = state.z
    if z <= 0.0:
        return ContactForces.zero()

    tx, ty = state.theta.theta_x, state.theta.theta_y
    tilt = math.hypot(tx, ty)
    if tilt > math.radians(socket.max_tilt):
        raise JamFault(
            f"jam: tilt {math.degrees(tilt):.2f} deg exceeds {socket.max_tilt:.2f} deg at z={z:.2f} mm"
        )
    offset = math.hypot(*state.lateral)
    if offset > socket.capture_radius:
        raise JamFault(
            f"jam: lateral offset {offset:.2f} mm exceeds chamfer capture {socket.capture_radius:.2f} mm"
        )

    kz = socket.k_lateral * z
    fx = -kz * ty
    fy = kz * tx

    axial = socket.f_base + socket.k_viscous_z * abs(v_z_cmd) + kz * (abs(tx) + abs(ty)) / 4.0
    ramp = 0.0
    if v_z_cmd > 0.0:
        ramp = socket.k_depth * max(0.0, z - (socket.depth - BOTTOM_RAMP_MM))
    fz = -float(np.sign(v_z_cmd)) * axial - ramp

    return ContactForces(force=(float(fx), float(fy), float(fz)))


def step_plant(
    state: ChargerState,
    cmd: ControllerCommand,
    dt: float,
    socket: Optional[SocketModel] = None,
) -> ChargerState:
    """Ideal velocity source; depth is hard-stopped at the socket bottom."""
    if not (0.0 < dt <= MAX_DT):
        raise InvalidInputError(f"dt must lie in (0, {MAX_DT}], got {dt}")
    socket = socket or SocketModel()
    theta = MisalignmentAngles(
        theta_x=state.theta.theta_x + cmd.omega_x * dt,
        theta_y=state.theta.theta_y + cmd.omega_y * dt,
    )
    z = min(state.z + cmd.v_z * dt, socket.depth)
    return ChargerState(theta=theta, z=z, lateral=state.lateral)
