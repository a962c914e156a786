from .run_config import RunConfig, SweepSpec, load_run_config, load_sweep_spec
from .simulation_service import BatchReport, CalibrationReport, SimulationService

__all__ = [
    'RunConfig',
    'SweepSpec',
    'load_run_config',
    'load_sweep_spec',
    'SimulationService',
    'CalibrationReport',
    'BatchReport',
]
