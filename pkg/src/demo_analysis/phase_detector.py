#plugsim\src\demo_analysis\phase_detector.py
"""
Plug-in / plug-out segmentation from the sign of the axial force.
"""

from typing import Optional, Tuple

import numpy as np
import pandas as pd
from pydantic import BaseModel, ConfigDict, model_validator

from src.core.errors import SegmentationError
from src.demo_analysis.trace_loader import DemoTrace

F_CONTACT_MIN = 10.0
SMOOTHING_WINDOW = 5


class PhaseSegmentation(BaseModel):
    model_config = ConfigDict(frozen=True)

    plug_in: Tuple[float, float]
    plug_out: Tuple[float, float]

    @model_validator(mode="after")
    def _ordered(self):
        for name, (start, end) in (("plug_in", self.plug_in), ("plug_out", self.plug_out)):
            if end < start:
                raise ValueError(f"{name} interval is empty")
        if self.plug_in[1] >= self.plug_out[0]:
            raise ValueError("plug_in must end before plug_out starts")
        return self


def smooth(values, window: int = SMOOTHING_WINDOW) -> np.ndarray:
    """Centred moving average; shrinks at the edges."""
    return pd.Series(values, dtype=float).rolling(window, center=True, min_periods=1).mean().to_numpy()


def _longest_run(mask: np.ndarray) -> Optional[Tuple[int, int]]:
    """Inclusive (start, end) of the longest run of True; first one wins ties."""
    best, start = None, None
    for i, flag in enumerate(np.append(mask, False)):
        if flag and start is None:
            start = i
        elif not flag and start is not None:
            if best is None or (i - 1 - start) > (best[1] - best[0]):
                best = (start, i - 1)
            start = None
    return best


def _tighten(raw_mask: np.ndarray, run: Tuple[int, int]) -> Tuple[int, int]:
    # Smoothing bleeds a step edge outward by up to half a window
    inside = np.flatnonzero(raw_mask[run[0]:run[1] + 1])
    if inside.size == 0:
        return run
    return run[0] + int(inside[0]), run[0] + int(inside[-1])


def detect_phases(trace: DemoTrace, f_contact_min: float = F_CONTACT_MIN) -> PhaseSegmentation:
    if len(trace) == 0:
        raise SegmentationError("plug_in", "trace is empty")

    t = trace.times
    fz = trace.frame['fz_n'].to_numpy(dtype=float)
    fz_smooth = smooth(fz)

    run_in = _longest_run(fz_smooth < -f_contact_min)
    if run_in is None:
        raise SegmentationError("plug_in", f"no plug_in interval (smoothed F_z never below -{f_contact_min} N)")
    run_in = _tighten(fz < -f_contact_min, run_in)

    offset = run_in[1] + 1
    run_out = _longest_run(fz_smooth[offset:] > f_contact_min)
    if run_out is None:
        raise SegmentationError("plug_out", f"no plug_out interval (smoothed F_z never above {f_contact_min} N after plug-in)")
    run_out = (run_out[0] + offset, run_out[1] + offset)
    run_out = _tighten(fz > f_contact_min, run_out)

    return PhaseSegmentation(
        plug_in=(float(t[run_in[0]]), float(t[run_in[1]])),
        plug_out=(float(t[run_out[0]]), float(t[run_out[1]])),
    )
