#plugsim\src\mission\demo_conversion.py
"""
Map a human demonstration onto the mission trace schema so recorded data can
be scored like a simulated run.

- rows from the start of plug-in to its end are labelled plug_in, later rows
  up to the end of plug-out are labelled plug_out, the row after that is done
  (samples before contact and after that row are dropped);
- theta comes from the recorded pose, depth from pz_mm;
- command columns are finite-difference rates of the recorded motion.
"""

import numpy as np
import pandas as pd

from src.demo_analysis.phase_detector import detect_phases
from src.demo_analysis.trace_loader import DemoTrace
from src.mission.config import MissionConfig
from src.mission.trace import MISSION_COLUMNS, MissionTrace, Phase


def demo_to_mission_trace(trace: DemoTrace) -> MissionTrace:
    phases = detect_phases(trace)
    t = trace.times
    theta_x, theta_y = trace.misalignment()
    depth = trace.frame['pz_mm'].to_numpy(dtype=float)
    forces = trace.forces

    start = int(np.searchsorted(t, phases.plug_in[0], side='left'))
    in_end = int(np.searchsorted(t, phases.plug_in[1], side='right'))
    out_end = int(np.searchsorted(t, phases.plug_out[1], side='right'))
    stop = min(out_end + 1, len(t))

    labels = np.full(len(t), Phase.PLUG_OUT.value, dtype=object)
    labels[start:in_end] = Phase.PLUG_IN.value
    labels[stop - 1] = Phase.DONE.value

    frame = pd.DataFrame({
        't_s': t,
        'phase': labels,
        'theta_x_deg': np.degrees(theta_x),
        'theta_y_deg': np.degrees(theta_y),
        'depth_mm': depth,
        'fx_n': forces[:, 0],
        'fy_n': forces[:, 1],
        'fz_n': forces[:, 2],
        'cmd_wx_rad_s': np.gradient(theta_x, t),
        'cmd_wy_rad_s': np.gradient(theta_y, t),
        'cmd_vz_mm_s': np.gradient(depth, t),
    }, columns=MISSION_COLUMNS)
    return MissionTrace.from_frame(frame.iloc[start:stop].reset_index(drop=True))


def demo_mission_config(trace: DemoTrace) -> MissionConfig:
    """Mission settings for scoring a recording: sampled at its median period."""
    return MissionConfig(dt=float(np.median(np.diff(trace.times))))
