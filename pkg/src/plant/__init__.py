"""
Plant - simulated charger/socket contact.
"""
from .noise import ForceNoise, NoiseModel, sample_noise
from .socket_plant import ChargerState, ContactForces, SocketModel, contact_forces, step_plant

__all__ = [
    'SocketModel',
    'ChargerState',
    'ContactForces',
    'contact_forces',
    'step_plant',
    'NoiseModel',
    'ForceNoise',
    'sample_noise',
]
