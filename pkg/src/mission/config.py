#plugsim\src\mission\config.py
from enum import Enum

from pydantic import BaseModel, ConfigDict, Field, model_validator

MAX_DT = 0.1


class ZAnchor(str, Enum):
    # floating: the linear channel's displacement is re-zeroed every cycle,
    # so it regulates force through damping alone.
    # phase_start: displacement accumulates from the phase switch.
    FLOATING = "floating"
    PHASE_START = "phase_start"


class MissionConfig(BaseModel):
    model_config = ConfigDict(frozen=True)

    f_z_ref_in: float = Field(default=-75.6, description="Axial reference while plugging in, N")
    f_z_ref_out: float = Field(default=75.6, description="Axial reference while plugging out, N")
    dt: float = Field(default=0.01, gt=0, le=MAX_DT, description="Control period, s")
    depth_target: float = Field(default=34.8, gt=0, description="mm")
    depth_tol: float = Field(default=0.5, ge=0, description="mm")
    entry_force_slack: float = Field(default=15.0, ge=0, description="Plug-in ends once |F_z| >= |f_z_ref_in| - slack, N")
    disengage_force: float = Field(default=5.0, gt=0, description="N")
    disengage_hold: float = Field(default=0.1, ge=0, description="s")
    timeout: float = Field(default=30.0, gt=0, description="s")
    force_limit: float = Field(default=120.0, gt=0, description="Limit on |F|, N")
    z_anchor: ZAnchor = ZAnchor.FLOATING

    @model_validator(mode="after")
    def _reference_signs(self):
        if not self.f_z_ref_in < 0 < self.f_z_ref_out:
            raise ValueError("f_z_ref_in must be negative and f_z_ref_out positive")
        return self

    @property
    def hold_cycles(self) -> int:
        return max(1, round(self.disengage_hold / self.dt))
