#plugsim\src\reporting\tables.py
import math

import pandas as pd

from src.demo_analysis.cohort import CohortStats

# label, field, unit, conversion to display units, number format
_ROWS = [
    ("delta_theta_x", "delta_theta_x", "deg", math.degrees, ".1f"),
    ("delta_theta_y", "delta_theta_y", "deg", math.degrees, ".1f"),
    ("delta_F_x", "delta_f_x", "N", float, ".1f"),
    ("delta_F_y", "delta_f_y", "N", float, ".1f"),
    ("F_z plug-in", "f_z_plug_in", "N", float, ".1f"),
    ("F_z plug-out", "f_z_plug_out", "N", float, ".1f"),
    ("t_response", "t_response", "s", float, ".2f"),
]
TABLE_COLUMNS = ["X", "X_mean", "X_max", "sigma_X", "Unit"]


def cohort_table(stats: CohortStats) -> pd.DataFrame:
    """Cohort statistics laid out as X | X_mean | X_max | sigma_X | Unit."""
    records = []
    for label, field, unit, convert, fmt in _ROWS:
        s = getattr(stats, field)
        if s is None:
            records.append(dict(zip(TABLE_COLUMNS, [label, "n/a", "n/a", "n/a", unit])))
            continue
        extremum = format(convert(s.extremum), fmt)
        if field == "f_z_plug_in":
            extremum += " (min)"
        records.append(dict(zip(TABLE_COLUMNS, [
            label, format(convert(s.mean), fmt), extremum, format(convert(s.std), fmt), unit,
        ])))
    return pd.DataFrame(records, columns=TABLE_COLUMNS)


def format_cohort_table(stats: CohortStats) -> str:
    return f"Cohort statistics ({stats.n_users} users)\n" + cohort_table(stats).to_string(index=False)
