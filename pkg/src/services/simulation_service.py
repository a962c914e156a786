#plugsim\src\services\simulation_service.py
"""
Orchestration behind the CLI and the pipeline script:
calibration (demos -> parameter file), single runs, seeded sweeps and trace analysis.
"""

import io
import logging
import math
from concurrent.futures import ThreadPoolExecutor, as_completed
from pathlib import Path
from typing import Dict, List, Optional, Tuple, Union

import numpy as np
from pydantic import BaseModel, Field

from src.control.controller import Wiring
from src.control.params_file import ControllerParamsFile, params_from_gains, write_params_file
from src.core.config import get_settings
from src.core.errors import InvalidInputError, PlugSimError
from src.core.files import read_text
from src.demo_analysis.cohort import CalibrationGains, CohortStats, aggregate, derive_gains
from src.demo_analysis.phase_detector import detect_phases
from src.demo_analysis.trace_loader import DEMO_COLUMNS, DemoTrace, load_demo_directory, load_demo_trace
from src.demo_analysis.user_summary import UserSummary, summarize_user
from src.mission.config import MissionConfig
from src.mission.demo_conversion import demo_mission_config, demo_to_mission_trace
from src.mission.runner import run_mission
from src.mission.trace import MissionResult, MissionTrace, evaluate_result, read_mission_trace
from src.services.run_config import RunConfig, SweepSpec, sample_initial_tilts


class CalibrationReport(BaseModel):
    stats: CohortStats
    gains: CalibrationGains
    params: ControllerParamsFile
    users: List[str]
    failures: Dict[str, str] = Field(default_factory=dict)


class BatchRunEntry(BaseModel):
    index: int
    seed: int
    init_theta_x_deg: float
    init_theta_y_deg: float
    result: MissionResult
    config: RunConfig


class DistributionStats(BaseModel):
    mean: float
    max: float
    std: float


class BatchReport(BaseModel):
    n_runs: int
    success_rate: float
    final_theta_abs_deg: Optional[DistributionStats] = None
    f_z_plateau_mean_n: Optional[DistributionStats] = None
    f_z_plateau_frac_within_15pct: Optional[DistributionStats] = None
    runs: List[BatchRunEntry]


def _distribution(values: List[float]) -> Optional[DistributionStats]:
    if not values:
        return None
    arr = np.asarray(values, dtype=float)
    return DistributionStats(mean=float(arr.mean()), max=float(arr.max()), std=float(arr.std()))


class SimulationService:
    def __init__(self, jobs: Optional[int] = None):
        settings = get_settings()
        self.jobs = jobs or settings.jobs
        self.default_seed = settings.seed
        self.d_depth = settings.d_depth_mm
        self.design_zeta = settings.design_zeta
        self.design_ts = settings.design_ts_s
        self.logger = logging.getLogger(__name__)

    # Calibration

    def summarize_traces(self, traces: List[DemoTrace]) -> Tuple[List[UserSummary], Dict[str, str]]:
        """Per-user summaries in parallel; results keep the input order."""
        summaries: Dict[int, UserSummary] = {}
        failures: Dict[str, str] = {}

        def work(trace: DemoTrace) -> UserSummary:
            return summarize_user(trace, detect_phases(trace))

        with ThreadPoolExecutor(max_workers=self.jobs) as executor:
            future_to_idx = {executor.submit(work, tr): i for i, tr in enumerate(traces)}
            for future in as_completed(future_to_idx):
                i = future_to_idx[future]
                try:
                    summaries[i] = future.result()
                except PlugSimError as e:
                    failures[traces[i].user_id] = str(e)
                    self.logger.warning(f"❌ {traces[i].user_id}: {e}")
        return [summaries[i] for i in sorted(summaries)], failures

    def calibrate(
        self,
        demo_dir: Union[str, Path],
        out_path: Union[str, Path],
        wiring: Wiring = Wiring.CROSS_AXIS,
    ) -> CalibrationReport:
        demo_dir = Path(demo_dir)
        if not demo_dir.is_dir():
            raise InvalidInputError(f"demo directory not found: {demo_dir}")

        traces, failures = load_demo_directory(demo_dir, max_workers=self.jobs)
        summaries, summary_failures = self.summarize_traces(traces)
        failures.update(summary_failures)
        if not summaries:
            raise InvalidInputError(f"no usable demo traces in {demo_dir}")

        users = [tr.user_id for tr in traces if tr.user_id not in summary_failures]
        stats = aggregate(summaries)
        gains = derive_gains(stats, self.d_depth, wiring)
        params = params_from_gains(gains, zeta=self.design_zeta, t_s=self.design_ts, wiring=wiring)
        write_params_file(params, out_path)
        self.logger.info(f"✅ Calibrated from {len(summaries)} users ({len(failures)} skipped)")
        return CalibrationReport(stats=stats, gains=gains, params=params, users=users, failures=failures)

    # Simulation

    def resolve_seed(self, config: RunConfig, seed: Optional[int] = None) -> int:
        """flag > config file > PLUGSIM_SEED > 0"""
        if seed is not None:
            return seed
        if config.seed is not None:
            return config.seed
        return self.default_seed

    def simulate(self, config: RunConfig, seed: Optional[int] = None) -> Tuple[MissionResult, MissionTrace]:
        run_seed = self.resolve_seed(config, seed)
        noise = config.plant.noise.model_copy(update={"seed": run_seed})
        self.logger.info(
            f"Running mission: init=({config.init.theta_x_deg:.2f}, {config.init.theta_y_deg:.2f}) deg, seed={run_seed}"
        )
        from_file = config.load_params()
        return run_mission(
            socket=config.plant.socket,
            noise=noise,
            cfg_ctrl=config.build_controller(from_file),
            cfg_mission=config.build_mission(from_file),
            init=config.init.to_state(),
        )

    def run_batch(self, spec: SweepSpec, jobs: Optional[int] = None) -> BatchReport:
        jobs = jobs or self.jobs
        plan = sample_initial_tilts(spec)
        base = spec.base.resolved()
        configs = [base.with_init(tx, ty).with_seed(s) for s, tx, ty in plan]
        self.logger.info(f"Starting sweep of {spec.n_runs} runs (max {spec.theta_total_max} deg) with {jobs} workers...")

        results: Dict[int, MissionResult] = {}
        with ThreadPoolExecutor(max_workers=jobs) as executor:
            future_to_idx = {executor.submit(self.simulate, cfg): i for i, cfg in enumerate(configs)}
            for future in as_completed(future_to_idx):
                i = future_to_idx[future]
                results[i] = future.result()[0]
                if (len(results)) % 10 == 0:
                    self.logger.info(f"📊 Progress: {len(results)}/{spec.n_runs} runs")

        entries = [
            BatchRunEntry(
                index=i, seed=plan[i][0], init_theta_x_deg=plan[i][1], init_theta_y_deg=plan[i][2],
                result=results[i], config=configs[i],
            )
            for i in range(spec.n_runs)
        ]
        ok = [e.result for e in entries if e.result.success]
        return BatchReport(
            n_runs=spec.n_runs,
            success_rate=len(ok) / spec.n_runs,
            final_theta_abs_deg=_distribution(
                [abs(math.degrees(a)) for r in ok for a in (r.final_theta.theta_x, r.final_theta.theta_y)]
            ),
            f_z_plateau_mean_n=_distribution([r.f_z_plateau_mean for r in ok]),
            f_z_plateau_frac_within_15pct=_distribution([r.f_z_plateau_frac_within_15pct for r in ok]),
            runs=entries,
        )

    # Analysis

    def analyze(self, trace_path: Union[str, Path], cfg: Optional[MissionConfig] = None) -> MissionResult:
        """Score a mission trace CSV, or a demo CSV after schema conversion."""
        trace_path = Path(trace_path)
        text = read_text(trace_path, "trace")
        header = text.splitlines()[0].strip() if text else ""

        if header == ",".join(DEMO_COLUMNS):
            demo = load_demo_trace(io.StringIO(text), user_id=trace_path.stem)
            self.logger.info(f"{trace_path.name} is a demo recording; converting to the mission schema")
            return evaluate_result(demo_to_mission_trace(demo), cfg or demo_mission_config(demo))
        return evaluate_result(read_mission_trace(io.StringIO(text)), cfg or MissionConfig())
