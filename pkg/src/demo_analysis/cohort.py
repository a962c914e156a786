#plugsim\src\demo_analysis\cohort.py
"""
Cohort statistics over per-user summaries and the DC gains derived from them.

Gains pair a tilt range with the lateral force that causes it. With
cross-axis pairing (default) K_w_rot_x = mean(dtheta_x) / mean(dF_y) and
K_w_rot_y = mean(dtheta_y) / mean(dF_x).
"""

import math
from typing import List, Optional, Sequence

from pydantic import BaseModel, Field, model_validator

from src.control.controller import Wiring
from src.core.errors import DegenerateStatsError, InvalidInputError
from src.demo_analysis.user_summary import UserSummary

STATS_TOL = 1e-9


class FieldStats(BaseModel):
    mean: float
    extremum: float = Field(description="max, or min for the plug-in force")
    std: float = Field(ge=0, description="Population standard deviation")


class CohortStats(BaseModel):
    n_users: int = Field(ge=1)
    delta_theta_x: FieldStats
    delta_theta_y: FieldStats
    delta_f_x: FieldStats
    delta_f_y: FieldStats
    f_z_plug_in: FieldStats
    f_z_plug_out: FieldStats
    t_response: Optional[FieldStats] = None

    @model_validator(mode="after")
    def _extremum_bounds_mean(self):
        for name in ("delta_theta_x", "delta_theta_y", "delta_f_x", "delta_f_y", "f_z_plug_out", "t_response"):
            s = getattr(self, name)
            if s is not None and s.extremum < s.mean - STATS_TOL * max(1.0, abs(s.mean)):
                raise ValueError(f"{name}: max below mean")
        s = self.f_z_plug_in
        if s.extremum > s.mean + STATS_TOL * max(1.0, abs(s.mean)):
            raise ValueError("f_z_plug_in: min above mean")
        return self


class CalibrationGains(BaseModel):
    k_w_rot_x: float = Field(gt=0, description="rad/N")
    k_w_rot_y: float = Field(gt=0, description="rad/N")
    k_w_lin_z: float = Field(gt=0, description="mm/N")
    f_z_ref: float = Field(gt=0, description="Magnitude of the axial reference, N")


def _field_stats(values: Sequence[float], use_min: bool = False) -> FieldStats:
    # fsum keeps the result independent of input order
    n = len(values)
    mean = math.fsum(values) / n
    std = math.sqrt(math.fsum((v - mean) ** 2 for v in values) / n)
    return FieldStats(mean=mean, extremum=min(values) if use_min else max(values), std=std)


def aggregate(summaries: List[UserSummary]) -> CohortStats:
    if not summaries:
        raise InvalidInputError("aggregate needs at least one user summary")

    def column(name: str) -> List[float]:
        return [getattr(s, name) for s in summaries]

    responses = [s.t_response for s in summaries if s.t_response is not None]
    return CohortStats(
        n_users=len(summaries),
        delta_theta_x=_field_stats(column("delta_theta_x")),
        delta_theta_y=_field_stats(column("delta_theta_y")),
        delta_f_x=_field_stats(column("delta_f_x")),
        delta_f_y=_field_stats(column("delta_f_y")),
        f_z_plug_in=_field_stats(column("f_z_plug_in"), use_min=True),
        f_z_plug_out=_field_stats(column("f_z_plug_out")),
        t_response=_field_stats(responses) if responses else None,
    )


def _ratio(num: float, den: float, label: str) -> float:
    if den == 0.0 or not math.isfinite(den):
        raise DegenerateStatsError(f"{label}: zero denominator")
    value = num / den
    if not (math.isfinite(value) and value > 0):
        raise DegenerateStatsError(f"{label}: gain {value} is not positive")
    return value


def derive_gains(stats: CohortStats, d_depth: float, wiring: Wiring = Wiring.CROSS_AXIS) -> CalibrationGains:
    if not (math.isfinite(d_depth) and d_depth > 0):
        raise InvalidInputError(f"d_depth must be positive, got {d_depth}")

    if wiring == Wiring.CROSS_AXIS:
        f_for_x, f_for_y = stats.delta_f_y.mean, stats.delta_f_x.mean
    else:
        f_for_x, f_for_y = stats.delta_f_x.mean, stats.delta_f_y.mean

    f_z_ref = min(abs(stats.f_z_plug_in.mean), abs(stats.f_z_plug_out.mean))
    return CalibrationGains(
        k_w_rot_x=_ratio(stats.delta_theta_x.mean, f_for_x, "K_w_rot_x"),
        k_w_rot_y=_ratio(stats.delta_theta_y.mean, f_for_y, "K_w_rot_y"),
        k_w_lin_z=_ratio(d_depth, f_z_ref, "K_w_lin_z"),
        f_z_ref=f_z_ref,
    )
