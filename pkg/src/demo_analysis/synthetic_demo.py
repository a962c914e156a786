#plugsim\src\demo_analysis\synthetic_demo.py
"""
Synthetic demonstration factory.

Builds a 100 Hz trace whose summary reproduces a target UserSummary:
each contact phase carries five half-periods of a lateral-force sine, the
tilt angles follow a cosine whose velocity lags the force by t_response,
and F_z sits on a constant plateau per phase. The seed only affects idle
durations, torque noise and translation jitter.
"""

import math
from typing import Dict, List, Tuple

import numpy as np
import pandas as pd
from scipy.spatial.transform import Rotation as ScipyRotation
from scipy.stats import norm

from src.core.errors import InvalidInputError
from src.demo_analysis.phase_detector import F_CONTACT_MIN
from src.demo_analysis.trace_loader import DEMO_COLUMNS, FORCE_RANGE_N, NOMINAL_DT, DemoTrace
from src.demo_analysis.user_summary import MATCH_WINDOW_S, UserSummary
from src.geometry.frames import rotations_from_misalignment_series

HALF_PERIODS_PER_PHASE = 5
MIN_QUARTER_SAMPLES = 30
TORQUE_NOISE_NM = 0.05
TRANSLATION_JITTER_MM = 0.1


def _check_targets(targets: UserSummary) -> None:
    tau = targets.t_response
    if tau is None or not (0.0 < tau < MATCH_WINDOW_S):
        raise InvalidInputError(f"t_response must lie in (0, {MATCH_WINDOW_S}) s, got {tau}")
    for name in ("f_z_plug_in", "f_z_plug_out"):
        level = abs(getattr(targets, name))
        if level <= F_CONTACT_MIN or level > FORCE_RANGE_N:
            raise InvalidInputError(f"|{name}| must lie in ({F_CONTACT_MIN}, {FORCE_RANGE_N}] N, got {level}")
    for name in ("delta_f_x", "delta_f_y"):
        if getattr(targets, name) > 2 * FORCE_RANGE_N:
            raise InvalidInputError(f"{name} exceeds the sensor range")
    for name in ("delta_theta_x", "delta_theta_y"):
        if getattr(targets, name) > math.pi / 2:
            raise InvalidInputError(f"{name} too large for a valid charger pose")


def generate_synthetic_demo(
    targets: UserSummary,
    seed: int,
    user_id: str = "synthetic",
    depth_mm: float = 34.8,
) -> DemoTrace:
    _check_targets(targets)
    rng = np.random.default_rng(seed)
    dt = NOMINAL_DT
    lag = targets.t_response / dt

    q = max(MIN_QUARTER_SAMPLES, math.ceil(lag) + 1)
    half = 2 * q
    period = 4 * q
    n_contact = HALF_PERIODS_PER_PHASE * half

    idle_pre = int(rng.integers(50, 150))
    # Odd number of half-periods, so plug-out starts in phase with plug-in
    gap = half * (1 + 2 * int(rng.integers(0, 2)))
    idle_post = int(rng.integers(50, 150))

    k_in = idle_pre
    k_out = k_in + n_contact + gap
    n = k_out + n_contact + idle_post
    k = np.arange(n)

    fx, fy, fz = np.zeros(n), np.zeros(n), np.zeros(n)
    pz = np.zeros(n)
    amp_fx, amp_fy = targets.delta_f_x / 2.0, targets.delta_f_y / 2.0
    for start, level, rising in ((k_in, targets.f_z_plug_in, True), (k_out, targets.f_z_plug_out, False)):
        j = np.arange(1, n_contact)
        idx = start + j
        wave = np.sin(2.0 * np.pi * j / period)
        fx[idx] = amp_fx * wave
        fy[idx] = amp_fy * wave
        fz[idx] = level
        progress = j / n_contact
        pz[idx] = depth_mm * (progress if rising else 1.0 - progress)
    pz[k_in + n_contact:k_out + 1] = depth_mm

    phase = 2.0 * np.pi * (k - k_in - lag) / period
    theta_x = -(targets.delta_theta_x / 2.0) * np.cos(phase)
    theta_y = -(targets.delta_theta_y / 2.0) * np.cos(phase)
    quats = ScipyRotation.from_matrix(rotations_from_misalignment_series(theta_x, theta_y)).as_quat()

    torques = rng.normal(0.0, TORQUE_NOISE_NM, size=(n, 3))
    jitter = rng.normal(0.0, TRANSLATION_JITTER_MM, size=(n, 2))

    frame = pd.DataFrame({
        't_s': k * dt,
        'fx_n': fx,
        'fy_n': fy,
        'fz_n': fz,
        'tx_nm': torques[:, 0],
        'ty_nm': torques[:, 1],
        'tz_nm': torques[:, 2],
        'qw': quats[:, 3],
        'qx': quats[:, 0],
        'qy': quats[:, 1],
        'qz': quats[:, 2],
        'px_mm': jitter[:, 0],
        'py_mm': jitter[:, 1],
        'pz_mm': pz,
    }, columns=DEMO_COLUMNS)
    return DemoTrace(user_id=user_id, frame=frame)


def synthetic_cohort(
    targets: Dict[str, Tuple[float, float]],
    n_users: int,
    seed: int = 0,
) -> List[UserSummary]:
    """
    Per-user summaries whose cohort mean and population std match
    `targets` ({field: (mean, std)}) exactly. Values sit on evenly spaced
    normal quantiles, shuffled independently per field.
    """
    if n_users < 1:
        raise InvalidInputError(f"n_users must be at least 1, got {n_users}")
    rng = np.random.default_rng(seed)
    if n_users == 1:
        base = np.zeros(1)
    else:
        base = norm.ppf((np.arange(n_users) + 0.5) / n_users)
        base = (base - base.mean()) / base.std()

    columns = {name: mean + std * rng.permutation(base) for name, (mean, std) in targets.items()}
    return [
        UserSummary(**{name: float(values[i]) for name, values in columns.items()})
        for i in range(n_users)
    ]
