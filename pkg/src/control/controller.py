#plugsim\src\control\controller.py
"""
Three-channel admittance controller: measured wrench in, TCP velocity out.

Channel inputs are force errors u = f_meas - f_ref. With cross-axis wiring the
F_y-driven channel commands omega_x and the F_x-driven channel commands
omega_y, signed so the commanded rotation reduces the contact that produced
the force (see src.plant.socket_plant for the matching force signs).
"""

import logging
from enum import Enum
from typing import Callable, Sequence, Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, field_validator

from src.control.impedance import ChannelState, ImpedanceParams, channel_step

logger = logging.getLogger(__name__)


class Wiring(str, Enum):
    CROSS_AXIS = "cross_axis"
    SAME_AXIS = "same_axis"


class CommandLimits(BaseModel):
    model_config = ConfigDict(frozen=True)

    max_omega: float = Field(default=0.5, gt=0, description="Max |omega| per axis, rad/s")
    max_v_z: float = Field(default=50.0, gt=0, description="Max |v_z|, mm/s")


class ControllerConfig(BaseModel):
    model_config = ConfigDict(frozen=True)

    params_rot_x: ImpedanceParams
    params_rot_y: ImpedanceParams
    params_lin_z: ImpedanceParams
    f_ref: Tuple[float, float, float] = Field(
        default=(0.0, 0.0, -75.6), description="(F_x_ref, F_y_ref, F_z_ref), N"
    )
    wiring: Wiring = Wiring.CROSS_AXIS
    limits: CommandLimits = Field(default_factory=CommandLimits)

    def with_f_z_ref(self, f_z_ref: float) -> "ControllerConfig":
        return self.model_copy(update={"f_ref": (self.f_ref[0], self.f_ref[1], float(f_z_ref))})

    @property
    def max_settling_time(self) -> float:
        return max(p.settling_time for p in (self.params_rot_x, self.params_rot_y, self.params_lin_z))


class ChannelStates(BaseModel):
    model_config = ConfigDict(frozen=True)

    rot_x: ChannelState = Field(default_factory=ChannelState.rest)
    rot_y: ChannelState = Field(default_factory=ChannelState.rest)
    lin_z: ChannelState = Field(default_factory=ChannelState.rest)

    @classmethod
    def rest(cls) -> "ChannelStates":
        return cls()


class ControllerCommand(BaseModel):
    """TCP velocity command, end-effector frame."""

    model_config = ConfigDict(frozen=True)

    omega_x: float = 0.0
    omega_y: float = 0.0
    v_z: float = 0.0

    @field_validator("omega_x", "omega_y", "v_z")
    @classmethod
    def _finite(cls, value: float) -> float:
        if not np.isfinite(value):
            raise ValueError("command must be finite")
        return value

    @classmethod
    def zero(cls) -> "ControllerCommand":
        return cls()


UpdateFn = Callable[
    [ControllerConfig, ChannelStates, Sequence[float], float],
    Tuple[ChannelStates, ControllerCommand],
]


def controller_update(
    cfg: ControllerConfig,
    states: ChannelStates,
    f_meas: Sequence[float],
    dt: float,
) -> Tuple[ChannelStates, ControllerCommand]:
    fx, fy, fz = (float(f) for f in f_meas)
    ux = fx - cfg.f_ref[0]
    uy = fy - cfg.f_ref[1]
    uz = fz - cfg.f_ref[2]

    if cfg.wiring == Wiring.CROSS_AXIS:
        u_rot_x, u_rot_y = uy, ux
    else:
        u_rot_x, u_rot_y = ux, uy

    rot_x = channel_step(cfg.params_rot_x, states.rot_x, u_rot_x, dt)
    rot_y = channel_step(cfg.params_rot_y, states.rot_y, u_rot_y, dt)
    lin_z = channel_step(cfg.params_lin_z, states.lin_z, uz, dt)

    if cfg.wiring == Wiring.CROSS_AXIS:
        # +F_y comes from a +theta_x tilt, so rotate back about -x
        omega_x, omega_y = -rot_x.vel, rot_y.vel
    else:
        omega_x, omega_y = rot_x.vel, rot_y.vel

    lim = cfg.limits
    command = ControllerCommand(
        omega_x=float(np.clip(omega_x, -lim.max_omega, lim.max_omega)),
        omega_y=float(np.clip(omega_y, -lim.max_omega, lim.max_omega)),
        v_z=float(np.clip(lin_z.vel, -lim.max_v_z, lim.max_v_z)),
    )
    return ChannelStates(rot_x=rot_x, rot_y=rot_y, lin_z=lin_z), command


def reset(states: ChannelStates) -> ChannelStates:
    logger.debug("resetting controller channels from %s", states)
    return ChannelStates.rest()
