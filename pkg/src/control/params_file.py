#plugsim\src\control\params_file.py
"""
Controller parameter file (JSON):

{"rot_x": {"kd": ..., "dd": ..., "md": ...}, "rot_y": {...}, "lin_z": {...},
 "f_z_ref_in": -75.6, "f_z_ref_out": 75.6, "wiring": "cross_axis",
 "ts_s": 0.2, "zeta": 1.0}
"""

import logging
from pathlib import Path
from typing import TYPE_CHECKING, Union

from pydantic import BaseModel, Field, ValidationError, model_validator

from src.control.controller import Wiring
from src.control.impedance import DesignSpec, ImpedanceParams, synthesize_params
from src.core.errors import InvalidInputError
from src.core.files import read_text

if TYPE_CHECKING:
    from src.demo_analysis.cohort import CalibrationGains

logger = logging.getLogger(__name__)


class ControllerParamsFile(BaseModel):
    rot_x: ImpedanceParams
    rot_y: ImpedanceParams
    lin_z: ImpedanceParams
    f_z_ref_in: float = Field(default=-75.6, lt=0)
    f_z_ref_out: float = Field(default=75.6, gt=0)
    wiring: Wiring = Wiring.CROSS_AXIS
    ts_s: float = Field(default=0.2, gt=0)
    zeta: float = Field(default=1.0, gt=0)

    @model_validator(mode="after")
    def _refs_symmetric_sign(self):
        if not self.f_z_ref_in < 0 < self.f_z_ref_out:
            raise ValueError("f_z_ref_in must be negative and f_z_ref_out positive")
        return self


def params_from_gains(
    gains: "CalibrationGains",
    zeta: float = 1.0,
    t_s: float = 0.2,
    wiring: Wiring = Wiring.CROSS_AXIS,
) -> ControllerParamsFile:
    """Synthesise all three channels from derived DC gains."""
    return ControllerParamsFile(
        rot_x=synthesize_params(DesignSpec(zeta=zeta, t_s=t_s, k_w=gains.k_w_rot_x)),
        rot_y=synthesize_params(DesignSpec(zeta=zeta, t_s=t_s, k_w=gains.k_w_rot_y)),
        lin_z=synthesize_params(DesignSpec(zeta=zeta, t_s=t_s, k_w=gains.k_w_lin_z)),
        f_z_ref_in=-gains.f_z_ref,
        f_z_ref_out=gains.f_z_ref,
        wiring=wiring,
        ts_s=t_s,
        zeta=zeta,
    )


def load_params_file(path: Union[str, Path]) -> ControllerParamsFile:
    path = Path(path)
    text = read_text(path, "parameter file")
    try:
        return ControllerParamsFile.model_validate_json(text)
    except ValidationError as e:
        raise InvalidInputError(f"invalid parameter file {path}: {e}") from e


def write_params_file(params: ControllerParamsFile, path: Union[str, Path]) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(params.model_dump_json(by_alias=True, indent=2) + "\n", encoding="utf-8")
    logger.info(f"✅ Wrote controller parameters to {path}")
    return path
