#plugsim\src\control\impedance.py
"""
Second-order impedance channel: m_d * x'' + d_d * x' + k_d * x = u

Parameters are synthesised from a (zeta, t_s, K_w) design target using the
settling rule t_s = 4 / (zeta * omega_n). The channel is advanced by exact
zero-order-hold discretisation, so a held input reproduces the analytic step
response at every sample.
"""

import math
from functools import lru_cache
from typing import Tuple, Union

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, field_validator
from scipy.signal import cont2discrete

from src.core.errors import InvalidInputError

MAX_DT = 0.1
CRITICAL_TOL = 1e-9


class DesignSpec(BaseModel):
    """Design target for one channel."""

    model_config = ConfigDict(frozen=True, populate_by_name=True)

    zeta: float = Field(gt=0, description="Damping ratio")
    t_s: float = Field(gt=0, description="Settling time, s")
    k_w: float = Field(gt=0, alias="K_w", description="DC gain, rad/N or mm/N")


class ImpedanceParams(BaseModel):
    """(M_d, D_d, K_d) of one channel. Units per rad for rotation, per mm for the z channel."""

    model_config = ConfigDict(frozen=True, populate_by_name=True)

    k_d: float = Field(gt=0, alias="kd", description="Stiffness, N/rad or N/mm")
    d_d: float = Field(gt=0, alias="dd", description="Damping, N*s/rad or N*s/mm")
    m_d: float = Field(gt=0, alias="md", description="Inertia, N*s^2/rad or N*s^2/mm")

    @field_validator("k_d", "d_d", "m_d")
    @classmethod
    def _finite(cls, value: float) -> float:
        if not math.isfinite(value):
            raise ValueError("impedance parameters must be finite")
        return value

    @property
    def natural_frequency(self) -> float:
        return math.sqrt(self.k_d / self.m_d)

    @property
    def damping_ratio(self) -> float:
        return self.d_d / (2.0 * math.sqrt(self.m_d * self.k_d))

    @property
    def dc_gain(self) -> float:
        return 1.0 / self.k_d

    @property
    def settling_time(self) -> float:
        return 4.0 / (self.damping_ratio * self.natural_frequency)


class ChannelState(BaseModel):
    model_config = ConfigDict(frozen=True)

    disp: float = Field(default=0.0, description="Displacement since reset, rad or mm")
    vel: float = Field(default=0.0, description="Velocity, rad/s or mm/s")

    @field_validator("disp", "vel")
    @classmethod
    def _finite(cls, value: float) -> float:
        if not math.isfinite(value):
            raise ValueError("channel state must be finite")
        return value

    @classmethod
    def rest(cls) -> "ChannelState":
        return cls(disp=0.0, vel=0.0)


def synthesize_params(spec: DesignSpec) -> ImpedanceParams:
    for name in ("zeta", "t_s", "k_w"):
        value = getattr(spec, name)
        if not (math.isfinite(value) and value > 0):
            raise InvalidInputError(f"design field {name} must be positive, got {value}")

    omega_n = 4.0 / (spec.zeta * spec.t_s)
    k_d = 1.0 / spec.k_w
    m_d = k_d / omega_n ** 2
    d_d = 2.0 * spec.zeta * math.sqrt(m_d * k_d)
    return ImpedanceParams(k_d=k_d, d_d=d_d, m_d=m_d)


def step_response_analytic(
    params: ImpedanceParams, f_step: float, t: Union[float, np.ndarray]
) -> Union[float, np.ndarray]:
    """Displacement from rest under a constant force f_step switched on at t=0."""
    t_arr = np.asarray(t, dtype=float)
    if np.any(t_arr < 0):
        raise InvalidInputError("step response is defined for t >= 0 only")

    wn = params.natural_frequency
    zeta = params.damping_ratio
    final = params.dc_gain * f_step

    if abs(zeta - 1.0) <= CRITICAL_TOL:
        shape = 1.0 - np.exp(-wn * t_arr) * (1.0 + wn * t_arr)
    elif zeta < 1.0:
        root = math.sqrt(1.0 - zeta ** 2)
        wd = wn * root
        shape = 1.0 - np.exp(-zeta * wn * t_arr) * (
            np.cos(wd * t_arr) + (zeta / root) * np.sin(wd * t_arr)
        )
    else:
        root = math.sqrt(zeta ** 2 - 1.0)
        s1 = -wn * (zeta - root)
        s2 = -wn * (zeta + root)
        shape = 1.0 + (s2 * np.exp(s1 * t_arr) - s1 * np.exp(s2 * t_arr)) / (s1 - s2)

    out = final * shape
    return float(out) if np.ndim(out) == 0 else out


@lru_cache(maxsize=256)
def discretize(params: ImpedanceParams, dt: float) -> Tuple[np.ndarray, np.ndarray]:
    """ZOH transition matrices (Ad, Bd) of the companion form [x, x']."""
    a = np.array([[0.0, 1.0], [-params.k_d / params.m_d, -params.d_d / params.m_d]])
    b = np.array([[0.0], [1.0 / params.m_d]])
    c = np.array([[1.0, 0.0]])
    d = np.array([[0.0]])
    ad, bd, _, _, _ = cont2discrete((a, b, c, d), dt, method="zoh")
    bd = bd[:, 0].copy()
    ad.setflags(write=False)
    bd.setflags(write=False)
    return ad, bd


def channel_step(params: ImpedanceParams, state: ChannelState, u: float, dt: float) -> ChannelState:
    if not (0.0 < dt <= MAX_DT):
        raise InvalidInputError(f"dt must lie in (0, {MAX_DT}], got {dt}")
    ad, bd = discretize(params, float(dt))
    disp = ad[0, 0] * state.disp + ad[0, 1] * state.vel + bd[0] * u
    vel = ad[1, 0] * state.disp + ad[1, 1] * state.vel + bd[1] * u
    return ChannelState(disp=float(disp), vel=float(vel))
