from .plots import plot_mission
from .tables import cohort_table, format_cohort_table

__all__ = ['plot_mission', 'cohort_table', 'format_cohort_table']
