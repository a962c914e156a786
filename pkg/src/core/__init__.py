from .config import Settings, get_settings, settings
from .errors import (
    DegenerateStatsError,
    InvalidInputError,
    JamFault,
    NoEventError,
    PlugSimError,
    PoseOutOfRangeError,
    SchemaMismatchError,
    SegmentationError,
    TraceParseError,
    TraceValidationError,
)

__all__ = [
    'Settings',
    'get_settings',
    'settings',
    'PlugSimError',
    'InvalidInputError',
    'PoseOutOfRangeError',
    'TraceParseError',
    'TraceValidationError',
    'SegmentationError',
    'NoEventError',
    'DegenerateStatsError',
    'SchemaMismatchError',
    'JamFault',
]
