"""
Geometry - charger/socket frames and misalignment angles.
"""
from .frames import (
    MisalignmentAngles,
    Pose,
    Rotation,
    apply,
    extract_misalignment,
    misalignment_series,
    rotation_about_axis,
    rotation_from_misalignment,
    rotations_from_misalignment_series,
)

__all__ = [
    'Rotation',
    'MisalignmentAngles',
    'Pose',
    'apply',
    'extract_misalignment',
    'misalignment_series',
    'rotation_about_axis',
    'rotation_from_misalignment',
    'rotations_from_misalignment_series',
]
