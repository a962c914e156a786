#plugsim\src\tests\test_mission.py
import io

import pandas as pd
import pytest

from src.control.controller import ChannelStates, controller_update
from src.core.errors import InvalidInputError, SchemaMismatchError
from src.geometry.frames import MisalignmentAngles
from src.mission import (
    MISSION_COLUMNS,
    MissionConfig,
    MissionTrace,
    Phase,
    ZAnchor,
    demo_to_mission_trace,
    evaluate_result,
    read_mission_trace,
    run_mission,
)
from src.plant.noise import NoiseModel
from src.plant.socket_plant import ChargerState, SocketModel
from src.services.run_config import RunConfig

REF = 75.6


def start(tx_deg=4.0, ty_deg=4.0):
    return ChargerState(theta=MisalignmentAngles.from_degrees(tx_deg, ty_deg))


def run(init=None, mission=None, seed=0, update_fn=controller_update):
    return run_mission(
        socket=SocketModel(),
        noise=NoiseModel(sigma_f=0.5, seed=seed),
        cfg_ctrl=RunConfig().build_controller(),
        cfg_mission=mission or MissionConfig(),
        init=init or start(),
        update_fn=update_fn,
    )


@pytest.fixture(scope="module")
def reference_run():
    return run()


def test_reference_mission_succeeds(reference_run):
    result, trace = reference_run
    assert result.success
    assert result.fault_reason is None
    assert trace.phases[-1] == Phase.DONE
    assert trace.phases[0] == Phase.PLUG_IN
    assert result.plug_in_duration > 0
    assert result.plug_out_duration > 0


def test_tilt_is_reduced_during_insertion(reference_run):
    result, _ = reference_run
    tx, ty = result.final_theta.to_degrees()
    assert abs(tx) < 1.0
    assert abs(ty) < 1.0


def test_plug_in_force_tracks_reference(reference_run):
    result, _ = reference_run
    assert abs(result.f_z_plateau_mean + REF) <= 0.15 * REF
    assert result.f_z_plateau_frac_within_15pct >= 0.9


def test_depth_reached_before_switch(reference_run):
    _, trace = reference_run
    frame = trace.frame
    first_out = frame.index[frame['phase'] == Phase.PLUG_OUT.value][0]
    assert frame.loc[first_out, 'depth_mm'] >= 34.8 - 0.5


def test_reference_switch_and_channel_reset():
    calls = []

    def shim(cfg, states, f_meas, dt):
        calls.append((cfg.f_ref[2], states))
        return controller_update(cfg, states, f_meas, dt)

    result, trace = run(update_fn=shim)
    assert result.success

    refs = [ref for ref, _ in calls]
    n_in = trace.phases.count(Phase.PLUG_IN)
    n_out = trace.phases.count(Phase.PLUG_OUT)
    assert refs == [-REF] * n_in + [REF] * n_out
    assert calls[n_in][1] == ChannelStates.rest()


def test_same_seed_same_trace():
    _, a = run(seed=3)
    _, b = run(seed=3)
    _, c = run(seed=4)
    pd.testing.assert_frame_equal(a.frame, b.frame, check_exact=True)
    assert not a.frame['fz_n'].equals(c.frame['fz_n'])


def test_phase_start_anchor_stalls_into_timeout():
    mission = MissionConfig(z_anchor=ZAnchor.PHASE_START, timeout=3.0)
    result, trace = run(mission=mission)
    assert not result.success
    assert result.fault_reason.startswith("timeout")
    assert trace.phases[-1] == Phase.FAULT


def test_excess_tilt_jams():
    result, trace = run(init=start(13.0, 0.0))
    assert not result.success
    assert "jam" in result.fault_reason
    assert trace.phases[-1] == Phase.FAULT


def test_mission_must_start_outside_socket():
    with pytest.raises(InvalidInputError):
        run(init=ChargerState(z=1.0))


def test_timeout_must_exceed_settling():
    with pytest.raises(InvalidInputError):
        run(mission=MissionConfig(timeout=1.0))


def test_evaluate_matches_run_and_csv(reference_run):
    result, trace = reference_run
    cfg = MissionConfig()
    assert evaluate_result(trace, cfg) == result

    reread = read_mission_trace(io.StringIO(trace.to_csv()))
    pd.testing.assert_frame_equal(reread.frame, trace.frame, check_exact=True)
    assert evaluate_result(reread, cfg) == result


def test_header_mismatch_names_column(reference_run):
    _, trace = reference_run
    text = trace.to_csv().replace('fz_n', 'force_z', 1)
    with pytest.raises(SchemaMismatchError) as exc:
        read_mission_trace(io.StringIO(text))
    assert exc.value.column == 'force_z'


def _rows(*phases):
    return [[0.01 * i, p] + [0.0] * (len(MISSION_COLUMNS) - 2) for i, p in enumerate(phases)]


def test_trace_rejects_backward_and_trailing_rows():
    with pytest.raises(InvalidInputError):
        MissionTrace.from_rows(_rows('plug_in', 'plug_out', 'plug_in'))
    with pytest.raises(InvalidInputError):
        MissionTrace.from_rows(_rows('plug_in', 'done', 'plug_out'))
    MissionTrace.from_rows(_rows('plug_in', 'plug_in', 'fault'))


def test_read_rejects_backward_phase_and_bad_bytes():
    csv = pd.DataFrame(_rows('plug_in', 'plug_out', 'plug_in'), columns=MISSION_COLUMNS).to_csv(index=False)
    with pytest.raises(InvalidInputError, match="backward"):
        read_mission_trace(io.StringIO(csv))
    with pytest.raises(InvalidInputError, match="UTF-8"):
        read_mission_trace(io.BytesIO(b"\xff\xfe" + csv.encode("utf-16-le")))


def test_evaluate_needs_plug_in_rows():
    with pytest.raises(InvalidInputError):
        evaluate_result(MissionTrace.from_rows(_rows('plug_out', 'done')), MissionConfig())


def test_plateau_window_uses_middle_of_plug_in():
    rows = _rows(*(['plug_in'] * 10 + ['done']))
    for i, row in enumerate(rows[:10]):
        row[MISSION_COLUMNS.index('fz_n')] = 0.0 if i in (0, 9) else -REF
    result = evaluate_result(MissionTrace.from_rows(rows), MissionConfig())
    assert result.f_z_plateau_mean == pytest.approx(-REF)
    assert result.f_z_plateau_frac_within_15pct == 1.0
    assert result.plug_in_duration == pytest.approx(0.10)
    assert result.success


def test_demo_recording_scores_as_success(mean_user):
    from src.demo_analysis import generate_synthetic_demo

    trace = demo_to_mission_trace(generate_synthetic_demo(mean_user, seed=2))
    assert trace.phases[0] == Phase.PLUG_IN
    assert trace.phases[-1] == Phase.DONE
    result = evaluate_result(trace, MissionConfig())
    assert result.success
    assert result.f_z_plateau_mean == pytest.approx(mean_user.f_z_plug_in)


def test_noise_free_aligned_plateau_is_steady():
    result, trace = run_mission(
        socket=SocketModel(),
        noise=NoiseModel(sigma_f=0.0),
        cfg_ctrl=RunConfig().build_controller(),
        cfg_mission=MissionConfig(),
        init=start(0.0, 0.0),
    )
    assert result.success
    assert result.f_z_plateau_frac_within_15pct == 1.0
    tx, ty = result.final_theta.to_degrees()
    assert tx == 0.0 and ty == 0.0
