#plugsim\src\scripts\plugsim.py

# python -m src.scripts.plugsim simulate --config src/Datasets/configs/reference_default.json --out out/trace.csv --plot out/trace.svg
"""
plugsim command line: calibrate, simulate, batch, analyze.
Exit codes: 0 success, 1 mission fault, 2 invalid input.
"""

import logging
import sys
from pathlib import Path
from typing import Optional


def _find_repo_root(start: Path) -> Path:
    """Walk up parents to the directory holding requirements.txt or README.md."""
    start = start.resolve()
    for p in [start] + list(start.parents):
        if (p / 'requirements.txt').exists() or (p / 'README.md').exists() or (p / '.git').exists():
            return p
    return Path(__file__).resolve().parent.parent.parent


project_root = _find_repo_root(Path(__file__).parent)
if str(project_root) not in sys.path:
    sys.path.insert(0, str(project_root))

import typer  # noqa: E402
from pydantic import ValidationError  # noqa: E402

from src.core.config import get_settings  # noqa: E402
from src.core.errors import PlugSimError, SchemaMismatchError  # noqa: E402
from src.reporting.plots import plot_mission  # noqa: E402
from src.reporting.tables import format_cohort_table  # noqa: E402
from src.services.run_config import load_run_config, load_sweep_spec  # noqa: E402
from src.services.simulation_service import SimulationService  # noqa: E402

EXIT_OK = 0
EXIT_FAULT = 1
EXIT_INVALID = 2

app = typer.Typer(help="Human-calibrated impedance control for robotic EV charging (simulation toolkit).")
logger = logging.getLogger("plugsim")


@app.callback()
def main(
    log_level: Optional[str] = typer.Option(None, "--log-level", help="DEBUG, INFO, WARNING ..."),
):
    level = (log_level or get_settings().log_level).upper()
    logging.basicConfig(level=level, format='%(asctime)s - %(levelname)s - %(message)s')


def _invalid(message: str) -> typer.Exit:
    typer.echo(f"error: {message}", err=True)
    return typer.Exit(code=EXIT_INVALID)


@app.command()
def calibrate(
    demos: Path = typer.Option(..., "--demos", help="Directory of demo CSVs, one per user"),
    out: Path = typer.Option(..., "--out", help="Controller parameter JSON to write"),
    jobs: Optional[int] = typer.Option(None, "--jobs", help="Worker threads"),
):
    """Demo traces -> cohort statistics -> K_w -> impedance parameters."""
    service = SimulationService(jobs=jobs)
    try:
        report = service.calibrate(demos, out)
    except (PlugSimError, ValidationError, OSError) as e:
        raise _invalid(str(e))

    for name, reason in sorted(report.failures.items()):
        typer.echo(f"skipped {name}: {reason}", err=True)
    typer.echo(format_cohort_table(report.stats))
    g = report.gains
    typer.echo(
        f"K_w_rot_x={g.k_w_rot_x:.4e} rad/N  K_w_rot_y={g.k_w_rot_y:.4e} rad/N  "
        f"K_w_lin_z={g.k_w_lin_z:.4f} mm/N  F_z_ref={g.f_z_ref:.1f} N"
    )
    typer.echo(f"wrote {out}")


@app.command()
def simulate(
    config: Path = typer.Option(..., "--config", help="Run configuration JSON"),
    out: Path = typer.Option(..., "--out", help="Mission trace CSV to write"),
    plot: Optional[Path] = typer.Option(None, "--plot", help="Optional SVG plot"),
    seed: Optional[int] = typer.Option(None, "--seed", help="Overrides the configured seed"),
):
    """Run one plug-in/plug-out mission against the simulated socket."""
    service = SimulationService()
    try:
        run_config = load_run_config(config)
        result, trace = service.simulate(run_config, seed=seed)
    except (PlugSimError, ValidationError) as e:
        raise _invalid(str(e))

    try:
        trace.to_csv(out)
        if plot is not None:
            plot_mission(trace, plot, run_config.build_mission())
    except OSError as e:
        raise _invalid(f"cannot write output: {e}")
    for line in result.summary_lines():
        typer.echo(line)
    raise typer.Exit(code=EXIT_OK if result.success else EXIT_FAULT)


@app.command()
def batch(
    sweep: Path = typer.Option(..., "--sweep", help="Sweep specification JSON"),
    out: Path = typer.Option(..., "--out", help="JSON report to write"),
    jobs: Optional[int] = typer.Option(None, "--jobs", help="Worker threads"),
):
    """Seeded robustness sweep over initial orientation errors."""
    service = SimulationService(jobs=jobs)
    try:
        report = service.run_batch(load_sweep_spec(sweep), jobs=jobs)
    except (PlugSimError, ValidationError) as e:
        raise _invalid(str(e))

    try:
        out.parent.mkdir(parents=True, exist_ok=True)
        out.write_text(report.model_dump_json(indent=2) + "\n", encoding="utf-8")
    except OSError as e:
        raise _invalid(f"cannot write report: {e}")
    typer.echo(f"runs: {report.n_runs}")
    typer.echo(f"success_rate: {report.success_rate:.3f}")
    if report.final_theta_abs_deg is not None:
        typer.echo(f"final_theta_abs_deg_max: {report.final_theta_abs_deg.max:.4f}")
    typer.echo(f"wrote {out}")


@app.command()
def analyze(
    trace: Path = typer.Option(..., "--trace", help="Mission trace CSV (demo CSVs are converted)"),
):
    """Recompute mission metrics from a trace file."""
    service = SimulationService()
    try:
        result = service.analyze(trace)
    except SchemaMismatchError as e:
        raise _invalid(f"schema mismatch in column '{e.column}': {e}")
    except (PlugSimError, ValidationError) as e:
        raise _invalid(str(e))

    for line in result.summary_lines():
        typer.echo(line)


if __name__ == "__main__":
    app()
