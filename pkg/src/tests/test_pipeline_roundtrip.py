#plugsim\src\tests\test_pipeline_roundtrip.py
"""
End to end: synthetic cohort -> demo CSVs -> calibration -> parameters,
and a seeded robustness sweep with the default controller.
"""
import math

import pytest

from src.control.impedance import DesignSpec, synthesize_params
from src.demo_analysis import generate_synthetic_demo, synthetic_cohort, write_demo_trace
from src.services import RunConfig, SimulationService, SweepSpec
from src.services.run_config import sample_initial_tilts


@pytest.fixture(scope="module")
def calibration(tmp_path_factory, cohort_table):
    root = tmp_path_factory.mktemp("cohort")
    demos = root / "demos"
    for i, targets in enumerate(synthetic_cohort(cohort_table, 23, seed=0)):
        write_demo_trace(generate_synthetic_demo(targets, seed=i, user_id=f"user_{i + 1:02d}"), demos / f"user_{i + 1:02d}.csv")
    return SimulationService(jobs=4).calibrate(demos, root / "params.json"), root


def test_all_users_used(calibration):
    report, _ = calibration
    assert report.failures == {}
    assert len(report.users) == 23
    assert report.stats.n_users == 23


def test_cohort_statistics_recovered(calibration, cohort_table):
    report, _ = calibration
    for name, (mean, std) in cohort_table.items():
        field = getattr(report.stats, name)
        assert field.mean == pytest.approx(mean, rel=1e-2)
        assert field.std == pytest.approx(std, rel=2e-2)


@pytest.mark.parametrize("channel, k_w", [
    ("rot_x", math.radians(9.5) / 32.6),
    ("rot_y", math.radians(6.8) / 27.7),
    ("lin_z", 34.8 / 75.6),
])
def test_parameters_within_one_percent(calibration, channel, k_w):
    report, _ = calibration
    expected = synthesize_params(DesignSpec(zeta=1.0, t_s=0.2, k_w=k_w))
    got = getattr(report.params, channel)
    assert got.k_d == pytest.approx(expected.k_d, rel=1e-2)
    assert got.d_d == pytest.approx(expected.d_d, rel=1e-2)
    assert got.m_d == pytest.approx(expected.m_d, rel=1e-2)


def test_calibrated_file_drives_a_mission(calibration):
    _, root = calibration
    config = RunConfig.model_validate({"controller": {"params_file": str(root / "params.json")}})
    result, _ = SimulationService().simulate(config)
    assert result.success


def test_sweep_seeding_is_stable():
    spec = SweepSpec(n_runs=20, theta_total_max=10.0, seed=0)
    plan = sample_initial_tilts(spec)
    assert plan == sample_initial_tilts(spec)
    assert all(math.hypot(tx, ty) <= 10.0 + 1e-12 for _, tx, ty in plan)
    assert len({s for s, _, _ in plan}) == 20


def test_sweep_up_to_ten_degrees_always_succeeds():
    report = SimulationService(jobs=4).run_batch(SweepSpec(n_runs=100, theta_total_max=10.0, seed=0))
    assert report.n_runs == 100
    assert report.success_rate == 1.0
    assert report.final_theta_abs_deg.max < 2.0
    assert abs(report.f_z_plateau_mean_n.mean + 75.6) <= 0.15 * 75.6
