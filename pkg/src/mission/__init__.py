"""
Mission - plug-in/plug-out state machine, traces and result metrics.
"""
from .config import MissionConfig, ZAnchor
from .trace import MISSION_COLUMNS, MissionResult, MissionTrace, Phase, evaluate_result, read_mission_trace
from .runner import run_mission
from .demo_conversion import demo_mission_config, demo_to_mission_trace

__all__ = [
    'MissionConfig',
    'ZAnchor',
    'Phase',
    'MISSION_COLUMNS',
    'MissionResult',
    'MissionTrace',
    'evaluate_result',
    'read_mission_trace',
    'run_mission',
    'demo_to_mission_trace',
    'demo_mission_config',
]
