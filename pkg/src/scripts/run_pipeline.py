#plugsim\src\scripts\run_pipeline.py

#python src/scripts/run_pipeline.py --n-runs 100
"""
Master Pipeline Orchestrator for plugsim
Runs the complete chain: synthetic cohort -> calibration -> mission -> robustness sweep
"""

import argparse
import json
import logging
import sys
import time
from datetime import datetime
from pathlib import Path


def _find_repo_root(start: Path) -> Path:
    """Walk up parents to find a repo root marker file.
    Looks for requirements.txt, README.md, or .git as hints.
    Falls back to two levels up if none found.
    """
    start = start.resolve()
    candidates = [start] + list(start.parents)
    for p in candidates:
        if (p / 'requirements.txt').exists() or (p / 'README.md').exists() or (p / '.git').exists():
            return p
    return Path(__file__).resolve().parent.parent


project_root = _find_repo_root(Path(__file__).parent)
# Add repository root to sys.path so `src` is importable as a top-level package (i.e. import src.*)
if str(project_root) not in sys.path:
    sys.path.insert(0, str(project_root))

import numpy as np  # noqa: E402

from src.demo_analysis import generate_synthetic_demo, synthetic_cohort, write_demo_trace  # noqa: E402
from src.reporting import format_cohort_table, plot_mission  # noqa: E402
from src.services import RunConfig, SimulationService, SweepSpec, load_run_config  # noqa: E402

logger = logging.getLogger(__name__)

# Cohort table means / standard deviations used to draw synthetic participants
COHORT_TARGETS = {
    'delta_theta_x': (np.radians(9.5), np.radians(2.1)),
    'delta_theta_y': (np.radians(6.8), np.radians(1.8)),
    'delta_f_x': (27.7, 10.3),
    'delta_f_y': (32.6, 7.9),
    'f_z_plug_in': (-81.6, 14.5),
    'f_z_plug_out': (75.6, 8.6),
    't_response': (0.26, 0.08),
}
N_USERS = 23


class PlugSimPipeline:
    def __init__(self, out_dir: Path = None):
        self.out_dir = Path(out_dir) if out_dir else project_root / 'data' / 'runs' / datetime.now().strftime('%Y%m%d_%H%M')
        self.demo_dir = self.out_dir / 'demos'
        self.out_dir.mkdir(parents=True, exist_ok=True)
        self.demo_dir.mkdir(exist_ok=True)
        self.service = SimulationService()

    def run_phase1_synthetic_demos(self, n_users: int = N_USERS, seed: int = 0) -> list:
        print("=" * 60)
        print("PHASE 1: SYNTHETIC DEMONSTRATIONS")
        print("=" * 60)

        summaries = synthetic_cohort(COHORT_TARGETS, n_users, seed)
        for i, targets in enumerate(summaries):
            user_id = f"user_{i + 1:02d}"
            trace = generate_synthetic_demo(targets, seed=seed + i, user_id=user_id)
            write_demo_trace(trace, self.demo_dir / f"{user_id}.csv")
        print(f"Wrote {len(summaries)} demo traces to {self.demo_dir}")
        return summaries

    def run_phase2_calibration(self) -> Path:
        print("\n" + "=" * 60)
        print("PHASE 2: CALIBRATION")
        print("=" * 60)

        params_path = self.out_dir / 'controller_params.json'
        report = self.service.calibrate(self.demo_dir, params_path)
        print(format_cohort_table(report.stats))
        for name, ch in (('rot_x', report.params.rot_x), ('rot_y', report.params.rot_y), ('lin_z', report.params.lin_z)):
            print(f"  {name}: K_d={ch.k_d:.4f}  D_d={ch.d_d:.4f}  M_d={ch.m_d:.6f}")
        return params_path

    def run_phase3_mission(self, params_path: Path = None):
        print("\n" + "=" * 60)
        print("PHASE 3: MISSION (init 4 deg / 4 deg)")
        print("=" * 60)

        config_path = project_root / 'src' / 'Datasets' / 'configs' / 'reference_default.json'
        config = load_run_config(config_path) if config_path.exists() else RunConfig()
        if params_path is not None:
            controller = config.controller.model_copy(update={'params_file': str(params_path)})
            config = config.model_copy(update={'controller': controller})

        result, trace = self.service.simulate(config)
        trace.to_csv(self.out_dir / 'mission_trace.csv')
        plot_mission(trace, self.out_dir / 'mission_trace.svg', config.build_mission())
        for line in result.summary_lines():
            print(f"  {line}")
        return result

    def run_phase4_sweep(self, n_runs: int = 100, params_path: Path = None):
        print("\n" + "=" * 60)
        print("PHASE 4: ROBUSTNESS SWEEP")
        print("=" * 60)

        base = RunConfig()
        if params_path is not None:
            base = base.model_copy(update={'controller': base.controller.model_copy(update={'params_file': str(params_path)})})
        started = time.time()
        report = self.service.run_batch(SweepSpec(n_runs=n_runs, base=base))
        report_path = self.out_dir / 'sweep_report.json'
        report_path.write_text(report.model_dump_json(indent=2) + "\n", encoding='utf-8')
        print(f"  success rate: {report.success_rate:.3f} over {n_runs} runs ({time.time() - started:.1f} s)")
        print(f"  report: {report_path}")
        return report

    def run(self, phase: str = 'all', n_runs: int = 100):
        params_path = None
        if phase in ('all', 'demos'):
            self.run_phase1_synthetic_demos()
        if phase in ('all', 'calibrate'):
            params_path = self.run_phase2_calibration()
        if phase in ('all', 'mission'):
            self.run_phase3_mission(params_path)
        if phase in ('all', 'sweep'):
            self.run_phase4_sweep(n_runs, params_path)

        summary = {'out_dir': str(self.out_dir), 'phase': phase, 'finished': datetime.now().isoformat()}
        (self.out_dir / 'pipeline_summary.json').write_text(json.dumps(summary, indent=2), encoding='utf-8')
        print(f"\nPipeline finished. Outputs in {self.out_dir}")


def main():
    parser = argparse.ArgumentParser(description='Run the plugsim pipeline')
    parser.add_argument('--phase', choices=['all', 'demos', 'calibrate', 'mission', 'sweep'], default='all')
    parser.add_argument('--n-runs', type=int, default=100, help='Runs in the robustness sweep')
    parser.add_argument('--out-dir', type=str, default=None)
    args = parser.parse_args()

    logging.basicConfig(level=logging.INFO, format='%(asctime)s - %(levelname)s - %(message)s')
    PlugSimPipeline(args.out_dir).run(args.phase, args.n_runs)


if __name__ == "__main__":
    main()
