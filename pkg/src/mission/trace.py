#plugsim\src\mission\trace.py
"""
Mission trace table, its CSV form, and metric extraction.
"""

import io
import math
from enum import Enum
from pathlib import Path
from typing import BinaryIO, List, Optional, Sequence, TextIO, Union

import numpy as np
import pandas as pd
from pydantic import BaseModel, ConfigDict, Field

from src.core.errors import InvalidInputError, SchemaMismatchError, TraceParseError
from src.core.files import decode_text, read_text
from src.geometry.frames import MisalignmentAngles
from src.mission.config import MissionConfig

MISSION_COLUMNS = [
    't_s', 'phase', 'theta_x_deg', 'theta_y_deg', 'depth_mm',
    'fx_n', 'fy_n', 'fz_n', 'cmd_wx_rad_s', 'cmd_wy_rad_s', 'cmd_vz_mm_s',
]
PLATEAU_BAND = 0.15


class Phase(str, Enum):
    PLUG_IN = "plug_in"
    PLUG_OUT = "plug_out"
    DONE = "done"
    FAULT = "fault"


PHASE_ORDER = {Phase.PLUG_IN: 0, Phase.PLUG_OUT: 1, Phase.DONE: 2}


class MissionResult(BaseModel):
    success: bool
    final_theta: MisalignmentAngles = Field(description="Tilt at the last plug-in row")
    plug_in_duration: float = Field(ge=0, description="s")
    plug_out_duration: float = Field(ge=0, description="s")
    f_z_plateau_mean: float = Field(description="Mean F_z over the middle 80% of plug-in, N")
    f_z_plateau_frac_within_15pct: float = Field(ge=0, le=1)
    fault_reason: Optional[str] = None

    def summary_lines(self) -> List[str]:
        tx, ty = self.final_theta.to_degrees()
        status = "SUCCESS" if self.success else f"FAULT ({self.fault_reason or 'reason not recorded'})"
        return [
            f"status: {status}",
            f"final_theta_x_deg: {tx:.4f}",
            f"final_theta_y_deg: {ty:.4f}",
            f"plug_in_duration_s: {self.plug_in_duration:.2f}",
            f"plug_out_duration_s: {self.plug_out_duration:.2f}",
            f"f_z_plateau_mean_n: {self.f_z_plateau_mean:.3f}",
            f"f_z_plateau_frac_within_15pct: {self.f_z_plateau_frac_within_15pct:.3f}",
        ]


class MissionTrace(BaseModel):
    """One row per control cycle, columns as in MISSION_COLUMNS."""

    model_config = ConfigDict(arbitrary_types_allowed=True)

    frame: pd.DataFrame

    @classmethod
    def from_frame(cls, frame: pd.DataFrame) -> "MissionTrace":
        # Not a model validator: pydantic would wrap InvalidInputError in ValidationError
        validate_mission_frame(frame)
        return cls(frame=frame)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence]) -> "MissionTrace":
        return cls.from_frame(pd.DataFrame(list(rows), columns=MISSION_COLUMNS))

    def __len__(self) -> int:
        return len(self.frame)

    @property
    def phases(self) -> List[Phase]:
        return [Phase(p) for p in self.frame['phase']]

    def to_csv(self, path: Union[str, Path, TextIO, None] = None) -> Optional[str]:
        if isinstance(path, (str, Path)):
            Path(path).parent.mkdir(parents=True, exist_ok=True)
        return self.frame.to_csv(path, index=False, lineterminator='\n')


def validate_mission_frame(frame: pd.DataFrame) -> None:
    if list(frame.columns) != MISSION_COLUMNS:
        raise InvalidInputError(f"mission trace columns must be {MISSION_COLUMNS}")
    if frame.empty:
        return
    t = frame['t_s'].to_numpy(dtype=float)
    if np.any(np.diff(t) <= 0):
        raise InvalidInputError("mission trace time must be strictly increasing")

    try:
        phases = [Phase(p) for p in frame['phase']]
    except ValueError as e:
        raise InvalidInputError(f"unknown phase label: {e}") from e
    for i, (prev, cur) in enumerate(zip(phases, phases[1:]), start=1):
        if prev in (Phase.DONE, Phase.FAULT):
            raise InvalidInputError(f"row {i}: no rows may follow a terminal phase")
        if cur != Phase.FAULT and PHASE_ORDER[cur] < PHASE_ORDER[prev]:
            raise InvalidInputError(f"row {i}: phase moved backward ({prev.value} -> {cur.value})")


def read_mission_trace(source: Union[str, Path, TextIO, BinaryIO]) -> MissionTrace:
    """Read a trace CSV; a header mismatch names the first offending column."""
    if isinstance(source, (str, Path)):
        text = read_text(source, "mission trace")
    else:
        data = source.read()
        text = decode_text(data, "mission trace") if isinstance(data, bytes) else data
    header = text.splitlines()[0].strip().split(',') if text.strip() else []
    for i, expected in enumerate(MISSION_COLUMNS):
        if i >= len(header) or header[i] != expected:
            raise SchemaMismatchError(header[i] if i < len(header) else expected)
    if len(header) > len(MISSION_COLUMNS):
        raise SchemaMismatchError(header[len(MISSION_COLUMNS)])

    dtypes = {c: float for c in MISSION_COLUMNS if c != 'phase'}
    dtypes['phase'] = str
    try:
        frame = pd.read_csv(io.StringIO(text), dtype=dtypes, float_precision='round_trip')
    except (ValueError, pd.errors.ParserError) as e:
        raise TraceParseError(f"malformed mission trace: {e}") from e
    if frame.isna().any().any():
        bad = frame.columns[frame.isna().any()].tolist()[0]
        raise SchemaMismatchError(bad, f"column '{bad}' has missing values")
    return MissionTrace.from_frame(frame)


def evaluate_result(trace: MissionTrace, cfg: MissionConfig) -> MissionResult:
    """Metrics of a (simulated or converted) trace; durations are row counts times cfg.dt."""
    f_z_ref_in, dt = cfg.f_z_ref_in, cfg.dt
    frame = trace.frame
    if frame.empty:
        raise InvalidInputError("cannot evaluate an empty trace")
    plug_in = frame[frame['phase'] == Phase.PLUG_IN.value]
    if plug_in.empty:
        raise InvalidInputError("trace has no plug_in rows")
    n_out = int((frame['phase'] == Phase.PLUG_OUT.value).sum())

    n = len(plug_in)
    window = plug_in.iloc[math.floor(0.1 * n):math.ceil(0.9 * n)]
    fz = window['fz_n'].to_numpy(dtype=float)
    within = np.abs(fz - f_z_ref_in) <= PLATEAU_BAND * abs(f_z_ref_in)

    last = plug_in.iloc[-1]
    return MissionResult(
        success=frame['phase'].iloc[-1] == Phase.DONE.value,
        final_theta=MisalignmentAngles.from_degrees(float(last['theta_x_deg']), float(last['theta_y_deg'])),
        plug_in_duration=n * dt,
        plug_out_duration=n_out * dt,
        f_z_plateau_mean=float(np.mean(fz)),
        f_z_plateau_frac_within_15pct=float(np.mean(within)),
    )
