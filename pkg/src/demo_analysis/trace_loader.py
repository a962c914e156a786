#plugsim\src\demo_analysis\trace_loader.py
import io
import logging
import re
from concurrent.futures import ThreadPoolExecutor, as_completed
from pathlib import Path
from typing import BinaryIO, Dict, List, Optional, TextIO, Tuple, Union

import numpy as np
import pandas as pd
from pydantic import BaseModel, ConfigDict, Field, model_validator
from scipy.spatial.transform import Rotation as ScipyRotation

from src.core.errors import PlugSimError, TraceParseError, TraceValidationError
from src.core.files import decode_text, read_text
from src.geometry.frames import Pose, Rotation, misalignment_series

logger = logging.getLogger(__name__)

DEMO_COLUMNS = [
    't_s', 'fx_n', 'fy_n', 'fz_n', 'tx_nm', 'ty_nm', 'tz_nm',
    'qw', 'qx', 'qy', 'qz', 'px_mm', 'py_mm', 'pz_mm',
]
NOMINAL_DT = 0.01
DT_TOLERANCE = 0.2
FORCE_RANGE_N = 150.0
TORQUE_RANGE_NM = 15.0


class DemoSample(BaseModel):
    """One fused FT + pose sample."""

    t: float
    force: Tuple[float, float, float]
    torque: Tuple[float, float, float]
    pose: Pose


class DemoTrace(BaseModel):
    """A user's recording: one row per sample, columns as in DEMO_COLUMNS."""

    model_config = ConfigDict(arbitrary_types_allowed=True)

    user_id: str
    frame: pd.DataFrame = Field(description="Samples in DEMO_COLUMNS order")

    @model_validator(mode="after")
    def _check_samples(self):
        validate_demo_frame(self.frame)
        return self

    @classmethod
    def from_samples(cls, samples: List[DemoSample], user_id: str) -> "DemoTrace":
        rows = []
        for s in samples:
            qw, qx, qy, qz = s.pose.rotation.as_quaternion()
            rows.append([s.t, *s.force, *s.torque, qw, qx, qy, qz, *s.pose.translation])
        return cls(user_id=user_id, frame=pd.DataFrame(rows, columns=DEMO_COLUMNS))

    def samples(self) -> List[DemoSample]:
        out = []
        for row in self.frame.itertuples(index=False):
            out.append(DemoSample(
                t=row.t_s,
                force=(row.fx_n, row.fy_n, row.fz_n),
                torque=(row.tx_nm, row.ty_nm, row.tz_nm),
                pose=Pose(
                    rotation=Rotation.from_quaternion(row.qw, row.qx, row.qy, row.qz),
                    translation=(row.px_mm, row.py_mm, row.pz_mm),
                ),
            ))
        return out

    def __len__(self) -> int:
        return len(self.frame)

    @property
    def times(self) -> np.ndarray:
        return self.frame['t_s'].to_numpy(dtype=float)

    @property
    def forces(self) -> np.ndarray:
        return self.frame[['fx_n', 'fy_n', 'fz_n']].to_numpy(dtype=float)

    def z_axes(self) -> np.ndarray:
        quats = self.frame[['qx', 'qy', 'qz', 'qw']].to_numpy(dtype=float)
        return ScipyRotation.from_quat(quats).apply([0.0, 0.0, 1.0])

    def misalignment(self) -> Tuple[np.ndarray, np.ndarray]:
        """Signed (theta_x, theta_y) series in radians."""
        return misalignment_series(self.z_axes())


def validate_demo_frame(frame: pd.DataFrame) -> None:
    if list(frame.columns) != DEMO_COLUMNS:
        raise TraceValidationError(f"columns must be {DEMO_COLUMNS}")
    if frame.empty:
        raise TraceValidationError("trace has no samples")

    t = frame['t_s'].to_numpy(dtype=float)
    steps = np.diff(t)
    if np.any(steps <= 0):
        first = int(np.argmax(steps <= 0)) + 1
        raise TraceValidationError(f"timestamps not strictly increasing at sample {first} (t={t[first]})")
    if steps.size and abs(float(np.median(steps)) - NOMINAL_DT) > DT_TOLERANCE * NOMINAL_DT:
        raise TraceValidationError(
            f"median sample interval {np.median(steps):.4f} s is not within 20% of {NOMINAL_DT} s"
        )

    forces = frame[['fx_n', 'fy_n', 'fz_n']].to_numpy(dtype=float)
    torques = frame[['tx_nm', 'ty_nm', 'tz_nm']].to_numpy(dtype=float)
    if np.any(np.abs(forces) > FORCE_RANGE_N):
        raise TraceValidationError(f"force sample outside the +/-{FORCE_RANGE_N} N sensor range")
    if np.any(np.abs(torques) > TORQUE_RANGE_NM):
        raise TraceValidationError(f"torque sample outside the +/-{TORQUE_RANGE_NM} N*m sensor range")


def _read_text(source: Union[str, Path, bytes, BinaryIO, TextIO]) -> str:
    if isinstance(source, (str, Path)):
        return read_text(source, "demo trace")
    data = source if isinstance(source, bytes) else source.read()
    return decode_text(data, "demo trace") if isinstance(data, bytes) else data


def load_demo_trace(
    source: Union[str, Path, bytes, BinaryIO, TextIO],
    user_id: Optional[str] = None,
) -> DemoTrace:
    """Parse and validate a demo CSV. The user id defaults to the file stem."""
    if user_id is None:
        user_id = Path(source).stem if isinstance(source, (str, Path)) else 'unknown'

    text = _read_text(source)
    header = text.splitlines()[0].strip() if text.strip() else ''
    if header != ','.join(DEMO_COLUMNS):
        raise TraceParseError(f"header must be '{','.join(DEMO_COLUMNS)}'", line=1)

    try:
        frame = pd.read_csv(io.StringIO(text), dtype=str, keep_default_na=False)
    except pd.errors.ParserError as e:
        match = re.search(r'line (\d+)', str(e))
        raise TraceParseError(f"malformed row: {e}", line=int(match.group(1)) if match else None) from e

    numeric = frame.apply(pd.to_numeric, errors='coerce')
    bad_rows = numeric.isna().any(axis=1).to_numpy()
    if bad_rows.any():
        row = int(np.argmax(bad_rows))
        raise TraceParseError("non-numeric or missing field", line=row + 2)

    # Re-parse as floats with exact round-tripping of the written text
    frame = pd.read_csv(io.StringIO(text), dtype=float, float_precision='round_trip')
    return DemoTrace(user_id=user_id, frame=frame)


def write_demo_trace(trace: DemoTrace, path: Union[str, Path, TextIO]) -> None:
    if isinstance(path, (str, Path)):
        Path(path).parent.mkdir(parents=True, exist_ok=True)
    trace.frame.to_csv(path, index=False, lineterminator='\n')


def load_demo_directory(
    demo_dir: Union[str, Path], max_workers: int = 4
) -> Tuple[List[DemoTrace], Dict[str, str]]:
    """Load every *.csv under demo_dir in parallel; returns (traces sorted by user, per-file failures)."""
    demo_dir = Path(demo_dir)
    files = sorted(demo_dir.glob('*.csv'))
    traces: List[DemoTrace] = []
    failures: Dict[str, str] = {}

    logger.info(f"Loading {len(files)} demo traces from {demo_dir} with {max_workers} workers...")
    with ThreadPoolExecutor(max_workers=max_workers) as executor:
        future_to_file = {executor.submit(load_demo_trace, f): f for f in files}
        for future in as_completed(future_to_file):
            f = future_to_file[future]
            try:
                traces.append(future.result())
            except (PlugSimError, ValueError, OSError) as e:
                failures[f.name] = str(e)
                logger.warning(f"❌ {f.name}: {e}")

    traces.sort(key=lambda tr: tr.user_id)
    return traces, failures
