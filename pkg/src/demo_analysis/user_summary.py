#plugsim\src\demo_analysis\user_summary.py
import logging
from typing import List, Optional

import numpy as np
from pydantic import BaseModel, Field

from src.core.errors import NoEventError, SegmentationError
from src.demo_analysis.phase_detector import PhaseSegmentation, detect_phases, smooth
from src.demo_analysis.trace_loader import DemoTrace

logger = logging.getLogger(__name__)

MATCH_WINDOW_S = 1.0
MATCH_TOL_S = 1e-9


class UserSummary(BaseModel):
    """Per-user quantities of the cohort table. Angles in radians, forces in N."""

    delta_theta_x: float = Field(ge=0, description="Range of theta_x over the contact span, rad")
    delta_theta_y: float = Field(ge=0, description="Range of theta_y over the contact span, rad")
    delta_f_x: float = Field(ge=0, description="Range of F_x over the contact span, N")
    delta_f_y: float = Field(ge=0, description="Range of F_y over the contact span, N")
    f_z_plug_in: float = Field(lt=0, description="Median F_z while plugging in, N")
    f_z_plug_out: float = Field(gt=0, description="Median F_z while plugging out, N")
    t_response: Optional[float] = Field(
        default=None, ge=0, description="Median force-to-motion reversal delay, s (None without events)"
    )


def sign_flip_times(t: np.ndarray, values: np.ndarray) -> np.ndarray:
    """Zero crossings between adjacent samples of opposite sign, linearly interpolated."""
    v = np.asarray(values, dtype=float)
    flips: List[float] = []
    for i in range(len(v) - 1):
        a, b = v[i], v[i + 1]
        if a * b < 0:
            flips.append(t[i] + (t[i + 1] - t[i]) * a / (a - b))
        elif b == 0.0 and a != 0.0 and i + 2 < len(v) and a * v[i + 2] < 0:
            flips.append(t[i + 1])
    return np.asarray(flips)


def response_time(
    trace: DemoTrace,
    phases: Optional[PhaseSegmentation] = None,
    window: float = MATCH_WINDOW_S,
) -> float:
    """
    Median delay from a lateral-force reversal to the next reversal of the
    matching angular velocity (F_x with theta_x, F_y with theta_y). Only force
    reversals inside the plug-in or plug-out interval count; phases are
    detected when not given.
    """
    if phases is None:
        phases = detect_phases(trace)
    contact = (phases.plug_in, phases.plug_out)
    t = trace.times
    theta_x, theta_y = trace.misalignment()
    forces = trace.forces

    delays: List[float] = []
    for force, theta in ((forces[:, 0], theta_x), (forces[:, 1], theta_y)):
        force_flips = np.asarray([
            tf for tf in sign_flip_times(t, smooth(force)) if any(lo <= tf <= hi for lo, hi in contact)
        ])
        if force_flips.size == 0:
            continue
        velocity_flips = sign_flip_times(t, np.gradient(theta, t))
        for tf in force_flips:
            later = velocity_flips[velocity_flips >= tf - MATCH_TOL_S]
            if later.size and later[0] - tf <= window:
                delays.append(max(0.0, float(later[0] - tf)))

    if not delays:
        raise NoEventError("no lateral force reversal was followed by a velocity reversal within the window")
    return float(np.median(delays))


def summarize_user(trace: DemoTrace, phases: PhaseSegmentation) -> UserSummary:
    t = trace.times
    in_mask = (t >= phases.plug_in[0]) & (t <= phases.plug_in[1])
    out_mask = (t >= phases.plug_out[0]) & (t <= phases.plug_out[1])
    if not in_mask.any():
        raise SegmentationError("plug_in", "plug_in interval contains no samples")
    if not out_mask.any():
        raise SegmentationError("plug_out", "plug_out interval contains no samples")
    span = in_mask | out_mask

    theta_x, theta_y = trace.misalignment()
    forces = trace.forces

    try:
        t_response = response_time(trace, phases)
    except NoEventError as e:
        logger.info(f"User {trace.user_id}: no response-time events ({e})")
        t_response = None

    return UserSummary(
        delta_theta_x=float(np.ptp(theta_x[span])),
        delta_theta_y=float(np.ptp(theta_y[span])),
        delta_f_x=float(np.ptp(forces[span, 0])),
        delta_f_y=float(np.ptp(forces[span, 1])),
        f_z_plug_in=float(np.median(forces[in_mask, 2])),
        f_z_plug_out=float(np.median(forces[out_mask, 2])),
        t_response=t_response,
    )
