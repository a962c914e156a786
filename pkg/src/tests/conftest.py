#plugsim\src\tests\conftest.py
import math

import numpy as np
import pandas as pd
import pytest

from src.demo_analysis import DEMO_COLUMNS, DemoTrace, UserSummary

# Cohort table: field -> (mean, population std); angles in radians
COHORT_TABLE = {
    'delta_theta_x': (math.radians(9.5), math.radians(2.1)),
    'delta_theta_y': (math.radians(6.8), math.radians(1.8)),
    'delta_f_x': (27.7, 10.3),
    'delta_f_y': (32.6, 7.9),
    'f_z_plug_in': (-81.6, 14.5),
    'f_z_plug_out': (75.6, 8.6),
    't_response': (0.26, 0.08),
}


@pytest.fixture(scope="session")
def cohort_table():
    return dict(COHORT_TABLE)


@pytest.fixture
def mean_user():
    """A single user sitting exactly on the cohort means."""
    return UserSummary(**{name: mean for name, (mean, _) in COHORT_TABLE.items()})


@pytest.fixture
def demo_frame():
    """Factory: a valid 100 Hz demo frame with identity pose and the given force columns."""

    def build(fz, fx=None, fy=None):
        fz = np.asarray(fz, dtype=float)
        n = len(fz)
        zeros = np.zeros(n)
        return pd.DataFrame({
            't_s': np.arange(n) * 0.01,
            'fx_n': zeros if fx is None else np.asarray(fx, dtype=float),
            'fy_n': zeros if fy is None else np.asarray(fy, dtype=float),
            'fz_n': fz,
            'tx_nm': zeros,
            'ty_nm': zeros,
            'tz_nm': zeros,
            'qw': np.ones(n),
            'qx': zeros,
            'qy': zeros,
            'qz': zeros,
            'px_mm': zeros,
            'py_mm': zeros,
            'pz_mm': zeros,
        }, columns=DEMO_COLUMNS)

    return build


@pytest.fixture
def contact_trace(demo_frame):
    """Idle, 1 s pushing at -60 N, idle, 1 s pulling at +55 N, idle."""
    fz = np.concatenate([np.zeros(50), np.full(100, -60.0), np.zeros(50), np.full(100, 55.0), np.zeros(50)])
    return DemoTrace(user_id='contact', frame=demo_frame(fz))
