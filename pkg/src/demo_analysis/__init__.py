"""
Demo Analysis - human demonstration ingestion, segmentation and cohort statistics.

Exposes the loaders, per-user summary and gain derivation for upstream
modules (calibration service, pipeline script).
"""
from .trace_loader import DEMO_COLUMNS, DemoSample, DemoTrace, load_demo_directory, load_demo_trace, write_demo_trace
from .phase_detector import PhaseSegmentation, detect_phases
from .user_summary import UserSummary, response_time, summarize_user
from .cohort import CalibrationGains, CohortStats, FieldStats, aggregate, derive_gains
from .synthetic_demo import generate_synthetic_demo, synthetic_cohort

__all__ = [
    'DEMO_COLUMNS',
    'DemoSample',
    'DemoTrace',
    'load_demo_trace',
    'write_demo_trace',
    'load_demo_directory',
    'PhaseSegmentation',
    'detect_phases',
    'UserSummary',
    'summarize_user',
    'response_time',
    'FieldStats',
    'CohortStats',
    'CalibrationGains',
    'aggregate',
    'derive_gains',
    'generate_synthetic_demo',
    'synthetic_cohort',
]
