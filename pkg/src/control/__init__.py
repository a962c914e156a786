"""
Control - impedance channel synthesis/integration and the three-channel controller.
"""
from .impedance import (
    ChannelState,
    DesignSpec,
    ImpedanceParams,
    channel_step,
    step_response_analytic,
    synthesize_params,
)
from .controller import (
    ChannelStates,
    CommandLimits,
    ControllerCommand,
    ControllerConfig,
    Wiring,
    controller_update,
    reset,
)
from .params_file import ControllerParamsFile, load_params_file, params_from_gains, write_params_file

__all__ = [
    'DesignSpec',
    'ImpedanceParams',
    'ChannelState',
    'synthesize_params',
    'step_response_analytic',
    'channel_step',
    'Wiring',
    'CommandLimits',
    'ControllerConfig',
    'ControllerCommand',
    'ChannelStates',
    'controller_update',
    'reset',
    'ControllerParamsFile',
    'load_params_file',
    'write_params_file',
    'params_from_gains',
]
