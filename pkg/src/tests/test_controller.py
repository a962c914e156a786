#plugsim\src\tests\test_controller.py
import pytest

from src.control.controller import (
    ChannelStates,
    CommandLimits,
    ControllerConfig,
    Wiring,
    controller_update,
    reset,
)
from src.control.impedance import DesignSpec, synthesize_params
from src.control.params_file import load_params_file, params_from_gains, write_params_file
from src.core.errors import InvalidInputError
from src.demo_analysis.cohort import CalibrationGains
from src.services.run_config import RunConfig

DT = 0.01


def make_config(wiring=Wiring.CROSS_AXIS, limits=None):
    return ControllerConfig(
        params_rot_x=synthesize_params(DesignSpec(zeta=1.0, t_s=0.2, k_w=5.086e-3)),
        params_rot_y=synthesize_params(DesignSpec(zeta=1.0, t_s=0.2, k_w=4.285e-3)),
        params_lin_z=synthesize_params(DesignSpec(zeta=1.0, t_s=0.2, k_w=0.460)),
        wiring=wiring,
        limits=limits or CommandLimits(),
    )


def test_zero_force_error_gives_zero_command():
    cfg = make_config()
    states, cmd = controller_update(cfg, ChannelStates.rest(), cfg.f_ref, DT)
    assert (cmd.omega_x, cmd.omega_y, cmd.v_z) == (0.0, 0.0, 0.0)
    assert states == ChannelStates.rest()


def test_free_space_drives_insertion():
    cfg = make_config()
    _, cmd = controller_update(cfg, ChannelStates.rest(), (0.0, 0.0, 0.0), DT)
    assert cmd.v_z > 0


def test_cross_axis_routes_lateral_forces():
    cfg = make_config(Wiring.CROSS_AXIS)
    f_z = cfg.f_ref[2]

    _, cmd = controller_update(cfg, ChannelStates.rest(), (0.0, 10.0, f_z), DT)
    assert cmd.omega_x < 0
    assert cmd.omega_y == 0.0

    _, cmd = controller_update(cfg, ChannelStates.rest(), (10.0, 0.0, f_z), DT)
    assert cmd.omega_y > 0
    assert cmd.omega_x == 0.0


def test_same_axis_routes_directly():
    cfg = make_config(Wiring.SAME_AXIS)
    _, cmd = controller_update(cfg, ChannelStates.rest(), (10.0, 0.0, cfg.f_ref[2]), DT)
    assert cmd.omega_x > 0
    assert cmd.omega_y == 0.0


def test_commands_clipped_but_states_are_not():
    limits = CommandLimits(max_omega=0.5, max_v_z=50.0)
    cfg = make_config(limits=limits)
    states, cmd = controller_update(cfg, ChannelStates.rest(), (1000.0, -1000.0, 500.0), DT)
    assert abs(cmd.omega_x) == pytest.approx(0.5)
    assert abs(cmd.omega_y) == pytest.approx(0.5)
    assert cmd.v_z == pytest.approx(50.0)
    assert abs(states.rot_x.vel) > 0.5
    assert states.lin_z.vel > 50.0


def test_reset_returns_rest_and_reference_swap():
    cfg = make_config()
    states, _ = controller_update(cfg, ChannelStates.rest(), (5.0, 5.0, 0.0), DT)
    assert states != ChannelStates.rest()
    assert reset(states) == ChannelStates.rest()

    out = cfg.with_f_z_ref(75.6)
    assert out.f_ref == (0.0, 0.0, 75.6)
    assert cfg.f_ref[2] == -75.6
    assert cfg.max_settling_time == pytest.approx(0.2)


def test_params_file_round_trip(tmp_path):
    gains = CalibrationGains(k_w_rot_x=5.086e-3, k_w_rot_y=4.285e-3, k_w_lin_z=0.460, f_z_ref=75.6)
    params = params_from_gains(gains, wiring=Wiring.SAME_AXIS)
    assert params.rot_x.k_d == pytest.approx(196.61, rel=5e-3)
    assert params.f_z_ref_in == -75.6

    path = write_params_file(params, tmp_path / "params" / "controller.json")
    assert '"kd"' in path.read_text(encoding="utf-8")
    loaded = load_params_file(path)
    assert loaded == params

    cfg = RunConfig(controller={"params_file": str(path)}).build_controller()
    assert cfg.params_rot_x == params.rot_x
    assert cfg.f_ref == (0.0, 0.0, -75.6)
    assert cfg.wiring == Wiring.SAME_AXIS


def test_params_file_errors(tmp_path):
    with pytest.raises(InvalidInputError):
        load_params_file(tmp_path / "missing.json")
    bad = tmp_path / "bad.json"
    bad.write_text('{"rot_x": {"kd": -1, "dd": 1, "md": 1}}', encoding="utf-8")
    with pytest.raises(InvalidInputError):
        load_params_file(bad)


def test_constant_force_command_dies_out():
    cfg = make_config()
    states, f_meas = ChannelStates.rest(), (2.0, -3.0, -70.0)
    peak = [0.0, 0.0, 0.0]
    for _ in range(200):
        states, cmd = controller_update(cfg, states, f_meas, DT)
        values = (cmd.omega_x, cmd.omega_y, cmd.v_z)
        peak = [max(p, abs(v)) for p, v in zip(peak, values)]
    assert all(p > 0 for p in peak)
    for p, v in zip(peak, values):
        assert abs(v) < 1e-6 * p


def test_axial_reference_precedence(tmp_path):
    gains = CalibrationGains(k_w_rot_x=5.086e-3, k_w_rot_y=4.285e-3, k_w_lin_z=0.460, f_z_ref=70.0)
    path = write_params_file(params_from_gains(gains), tmp_path / "controller.json")

    assert RunConfig().build_controller().f_ref == (0.0, 0.0, -75.6)

    from_file = RunConfig(controller={"params_file": str(path)})
    assert from_file.build_controller().f_ref == (0.0, 0.0, -70.0)
    assert from_file.build_mission().f_z_ref_out == 70.0

    explicit = RunConfig(controller={"params_file": str(path)}, mission={"f_z_ref_in": -80.0})
    assert explicit.build_controller().f_ref == (0.0, 0.0, -80.0)
    assert explicit.build_mission().f_z_ref_out == 70.0

    replay = RunConfig.model_validate_json(from_file.resolved().model_dump_json())
    assert replay.mission.f_z_ref_in == -70.0
