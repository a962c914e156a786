#plugsim\src\mission\runner.py
"""
Plug-in / plug-out mission loop.

Each cycle: read the contact wrench (plus sensor noise), check the force
limit and phase-termination conditions, run one controller update with the
phase's axial reference, log the row, then move the plant.
"""

import logging
import math
from typing import List, Optional, Tuple

import numpy as np

from src.control.controller import (
    ChannelStates,
    ControllerCommand,
    ControllerConfig,
    UpdateFn,
    controller_update,
    reset,
)
from src.control.impedance import ChannelState
from src.core.errors import InvalidInputError, JamFault
from src.mission.config import MissionConfig, ZAnchor
from src.mission.trace import MissionResult, MissionTrace, Phase, evaluate_result
from src.plant.noise import ForceNoise, NoiseModel
from src.plant.socket_plant import ChargerState, SocketModel, contact_forces, step_plant

logger = logging.getLogger(__name__)


def _row(t: float, phase: Phase, state: ChargerState, force, cmd: ControllerCommand) -> list:
    return [
        t, phase.value,
        math.degrees(state.theta.theta_x), math.degrees(state.theta.theta_y), state.z,
        float(force[0]), float(force[1]), float(force[2]),
        cmd.omega_x, cmd.omega_y, cmd.v_z,
    ]


def run_mission(
    socket: SocketModel,
    noise: NoiseModel,
    cfg_ctrl: ControllerConfig,
    cfg_mission: MissionConfig,
    init: ChargerState,
    update_fn: UpdateFn = controller_update,
) -> Tuple[MissionResult, MissionTrace]:
    if init.z > 0:
        raise InvalidInputError(f"mission must start outside the socket (init z={init.z} mm)")
    if cfg_mission.timeout <= 10 * cfg_ctrl.max_settling_time:
        raise InvalidInputError(
            f"timeout {cfg_mission.timeout} s must exceed 10x the slowest channel settling time "
            f"({cfg_ctrl.max_settling_time:.3f} s)"
        )

    dt = cfg_mission.dt
    max_steps = int(round(cfg_mission.timeout / dt))
    stream = ForceNoise(noise)
    refs = {Phase.PLUG_IN: cfg_mission.f_z_ref_in, Phase.PLUG_OUT: cfg_mission.f_z_ref_out}
    ctrl_by_phase = {phase: cfg_ctrl.with_f_z_ref(ref) for phase, ref in refs.items()}

    state = init
    states = ChannelStates.rest()
    phase = Phase.PLUG_IN
    v_z_cmd = 0.0
    hold = 0
    fault_reason: Optional[str] = None
    rows: List[list] = []

    for k in range(max_steps + 1):
        t = k * dt

        try:
            wrench = contact_forces(socket, state, v_z_cmd)
        except JamFault as e:
            fault_reason = str(e)
            rows.append(_row(t, Phase.FAULT, state, (0.0, 0.0, 0.0), ControllerCommand.zero()))
            break
        f_meas = np.asarray(wrench.force) + stream.sample()

        if float(np.linalg.norm(f_meas)) > cfg_mission.force_limit:
            fault_reason = f"force limit: |F|={np.linalg.norm(f_meas):.1f} N exceeds {cfg_mission.force_limit} N"
            rows.append(_row(t, Phase.FAULT, state, f_meas, ControllerCommand.zero()))
            break

        if phase == Phase.PLUG_IN:
            deep_enough = state.z >= cfg_mission.depth_target - cfg_mission.depth_tol
            pressing = abs(f_meas[2]) >= abs(cfg_mission.f_z_ref_in) - cfg_mission.entry_force_slack
            if deep_enough and pressing:
                logger.info(f"Plug-in complete at t={t:.2f} s (z={state.z:.2f} mm, F_z={f_meas[2]:.1f} N)")
                phase = Phase.PLUG_OUT
                states = reset(states)
        elif phase == Phase.PLUG_OUT:
            if state.z <= 0.0 and abs(f_meas[2]) < cfg_mission.disengage_force:
                hold += 1
            else:
                hold = 0
            if hold >= cfg_mission.hold_cycles:
                logger.info(f"Plug-out complete at t={t:.2f} s")
                rows.append(_row(t, Phase.DONE, state, f_meas, ControllerCommand.zero()))
                phase = Phase.DONE
                break

        if k == max_steps:
            fault_reason = f"timeout: {phase.value} not finished after {cfg_mission.timeout} s"
            rows.append(_row(t, Phase.FAULT, state, f_meas, ControllerCommand.zero()))
            break

        if cfg_mission.z_anchor == ZAnchor.FLOATING:
            states = states.model_copy(update={"lin_z": ChannelState(disp=0.0, vel=states.lin_z.vel)})
        states, cmd = update_fn(ctrl_by_phase[phase], states, f_meas, dt)

        rows.append(_row(t, phase, state, f_meas, cmd))
        state = step_plant(state, cmd, dt, socket)
        v_z_cmd = cmd.v_z

    trace = MissionTrace.from_rows(rows)
    if fault_reason:
        logger.warning(f"❌ Mission fault: {fault_reason}")

    try:
        result = evaluate_result(trace, cfg_mission)
    except InvalidInputError:
        # Faulted before a single plug-in row was logged
        result = MissionResult(
            success=False,
            final_theta=init.theta,
            plug_in_duration=0.0,
            plug_out_duration=0.0,
            f_z_plateau_mean=0.0,
            f_z_plateau_frac_within_15pct=0.0,
        )
    return result.model_copy(update={"fault_reason": fault_reason}), trace
