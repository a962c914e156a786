#plugsim\src\services\run_config.py
"""
Run and sweep configuration documents (JSON). Every field has a default, so
an empty object `{}` is the reference scenario.
"""

import math
from pathlib import Path
from typing import List, Optional, Tuple, Union

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, ValidationError, model_validator

from src.control.controller import CommandLimits, ControllerConfig, Wiring
from src.control.impedance import DesignSpec, ImpedanceParams, synthesize_params
from src.control.params_file import ControllerParamsFile, load_params_file
from src.core.errors import InvalidInputError
from src.core.files import read_text
from src.geometry.frames import MisalignmentAngles
from src.mission.config import MissionConfig
from src.plant.noise import NoiseModel
from src.plant.socket_plant import ChargerState, SocketModel

DEFAULT_ZETA = 1.0
DEFAULT_TS_S = 0.2
DEFAULT_GAINS = {"rot_x": 5.086e-3, "rot_y": 4.285e-3, "lin_z": 0.460}


class ChannelSpec(BaseModel):
    """Exactly one of explicit parameters or a design target."""

    model_config = ConfigDict(extra="forbid")

    params: Optional[ImpedanceParams] = None
    design: Optional[DesignSpec] = None

    @model_validator(mode="after")
    def _exactly_one(self):
        if (self.params is None) == (self.design is None):
            raise ValueError("give exactly one of 'params' or 'design' per channel")
        return self

    def resolve(self) -> ImpedanceParams:
        return self.params if self.params is not None else synthesize_params(self.design)


def _default_channel(name: str) -> ChannelSpec:
    return ChannelSpec(design=DesignSpec(zeta=DEFAULT_ZETA, t_s=DEFAULT_TS_S, k_w=DEFAULT_GAINS[name]))


class ControllerSection(BaseModel):
    model_config = ConfigDict(extra="forbid")

    params_file: Optional[str] = Field(
        default=None, description="Calibrated parameter JSON; relative paths resolve against the config file"
    )
    rot_x: Optional[ChannelSpec] = None
    rot_y: Optional[ChannelSpec] = None
    lin_z: Optional[ChannelSpec] = None
    wiring: Optional[Wiring] = None
    limits: CommandLimits = Field(default_factory=CommandLimits)


class PlantSection(BaseModel):
    model_config = ConfigDict(extra="forbid")

    socket: SocketModel = Field(default_factory=SocketModel)
    noise: NoiseModel = Field(default_factory=NoiseModel)


class InitSection(BaseModel):
    model_config = ConfigDict(extra="forbid")

    theta_x_deg: float = 4.0
    theta_y_deg: float = 4.0
    z_mm: float = Field(default=0.0, le=0, description="Start at or outside the entry plane")
    lateral_mm: Tuple[float, float] = (0.0, 0.0)

    def to_state(self) -> ChargerState:
        return ChargerState(
            theta=MisalignmentAngles.from_degrees(self.theta_x_deg, self.theta_y_deg),
            z=self.z_mm,
            lateral=self.lateral_mm,
        )


class RunConfig(BaseModel):
    model_config = ConfigDict(extra="forbid")

    controller: ControllerSection = Field(default_factory=ControllerSection)
    mission: MissionConfig = Field(default_factory=MissionConfig)
    plant: PlantSection = Field(default_factory=PlantSection)
    init: InitSection = Field(default_factory=InitSection)
    seed: Optional[int] = Field(default=None, description="Noise seed; falls back to PLUGSIM_SEED")

    base_dir: Optional[str] = Field(default=None, exclude=True)

    def load_params(self) -> Optional[ControllerParamsFile]:
        """The calibrated parameter file named by the controller section, if any."""
        if not self.controller.params_file:
            return None
        path = Path(self.controller.params_file)
        if not path.is_absolute() and self.base_dir:
            path = Path(self.base_dir) / path
        return load_params_file(path)

    def build_mission(self, from_file: Optional[ControllerParamsFile] = None) -> MissionConfig:
        """Axial references: mission section if set there, else the parameter file, else the defaults."""
        from_file = from_file or self.load_params()
        if from_file is None:
            return self.mission
        update = {
            name: getattr(from_file, name)
            for name in ("f_z_ref_in", "f_z_ref_out")
            if name not in self.mission.model_fields_set
        }
        return self.mission.model_copy(update=update)

    def build_controller(self, from_file: Optional[ControllerParamsFile] = None) -> ControllerConfig:
        section = self.controller
        wiring = section.wiring
        channels = {}
        from_file = from_file or self.load_params()
        if from_file is not None:
            channels = {"rot_x": from_file.rot_x, "rot_y": from_file.rot_y, "lin_z": from_file.lin_z}
            wiring = wiring or from_file.wiring
        for name in ("rot_x", "rot_y", "lin_z"):
            spec = getattr(section, name)
            if spec is not None:
                channels[name] = spec.resolve()
            elif name not in channels:
                channels[name] = _default_channel(name).resolve()

        return ControllerConfig(
            params_rot_x=channels["rot_x"],
            params_rot_y=channels["rot_y"],
            params_lin_z=channels["lin_z"],
            f_ref=(0.0, 0.0, self.build_mission(from_file).f_z_ref_in),
            wiring=wiring or Wiring.CROSS_AXIS,
            limits=section.limits,
        )

    def resolved(self) -> "RunConfig":
        """Copy that replays without base_dir: absolute params_file, axial references written out."""
        section = self.controller
        if section.params_file and self.base_dir and not Path(section.params_file).is_absolute():
            absolute = str((Path(self.base_dir) / section.params_file).resolve())
            section = section.model_copy(update={"params_file": absolute})
        mission = self.build_mission()
        # explicit so a dumped copy keeps these references when reloaded
        mission = MissionConfig(**mission.model_dump())
        return self.model_copy(update={"controller": section, "mission": mission})

    def with_seed(self, seed: int) -> "RunConfig":
        return self.model_copy(update={"seed": seed})

    def with_init(self, theta_x_deg: float, theta_y_deg: float) -> "RunConfig":
        init = self.init.model_copy(update={"theta_x_deg": theta_x_deg, "theta_y_deg": theta_y_deg})
        return self.model_copy(update={"init": init})


class SweepSpec(BaseModel):
    model_config = ConfigDict(extra="forbid")

    n_runs: int = Field(default=100, ge=1)
    theta_total_max: float = Field(default=10.0, ge=0, description="deg")
    seed: int = Field(default=0, description="Seeds every run via SeedSequence")
    base: RunConfig = Field(default_factory=RunConfig)

    @model_validator(mode="after")
    def _within_tilt(self):
        if self.theta_total_max > self.base.plant.socket.max_tilt:
            raise ValueError("theta_total_max exceeds the socket's max_tilt")
        return self


def _read_json(path: Union[str, Path], model):
    text = read_text(path, "configuration file")
    try:
        return model.model_validate_json(text)
    except ValidationError as e:
        raise InvalidInputError(f"invalid configuration {path}: {e}") from e


def load_run_config(path: Union[str, Path]) -> RunConfig:
    cfg = _read_json(path, RunConfig)
    return cfg.model_copy(update={"base_dir": str(Path(path).resolve().parent)})


def load_sweep_spec(path: Union[str, Path]) -> SweepSpec:
    spec = _read_json(path, SweepSpec)
    base = spec.base.model_copy(update={"base_dir": str(Path(path).resolve().parent)})
    return spec.model_copy(update={"base": base})


def sample_initial_tilts(spec: SweepSpec) -> List[Tuple[int, float, float]]:
    """(run seed, theta_x_deg, theta_y_deg) per run: uniform magnitude and direction."""
    seeds = np.random.SeedSequence(spec.seed).generate_state(spec.n_runs)
    runs = []
    for s in seeds:
        rng = np.random.default_rng(int(s))
        magnitude = rng.uniform(0.0, spec.theta_total_max)
        direction = rng.uniform(0.0, 2.0 * math.pi)
        runs.append((int(s), magnitude * math.cos(direction), magnitude * math.sin(direction)))
    return runs
