#plugsim\src\core\errors.py
"""
Exception hierarchy shared by every plugsim package.
The CLI maps these onto its exit codes (2 for bad input, 1 for a mission fault).
"""

from typing import Optional


class PlugSimError(Exception):
    """Base class for all plugsim errors."""


class InvalidInputError(PlugSimError, ValueError):
    """A caller handed over a value outside the documented domain."""


class PoseOutOfRangeError(PlugSimError):
    """Charger axis points away from the socket (z component <= 0)."""


class TraceParseError(PlugSimError):
    def __init__(self, message: str, line: Optional[int] = None):
        self.line = line
        prefix = f"line {line}: " if line is not None else ""
        super().__init__(f"{prefix}{message}")


class TraceValidationError(PlugSimError):
    """Trace parsed but breaks a sampling or sensor-range rule."""


class SegmentationError(PlugSimError):
    def __init__(self, phase: str, message: Optional[str] = None):
        self.phase = phase
        super().__init__(message or f"no {phase} interval found")


class NoEventError(PlugSimError):
    """No lateral-force reversal could be paired with a velocity reversal."""


class DegenerateStatsError(PlugSimError):
    """Cohort statistics cannot produce a finite, positive gain."""


class SchemaMismatchError(PlugSimError):
    def __init__(self, column: str, message: Optional[str] = None):
        self.column = column
        super().__init__(message or f"unexpected or missing column '{column}'")


class JamFault(PlugSimError):
    """Raised by the contact model when an insertion can no longer proceed."""
