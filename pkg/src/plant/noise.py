#plugsim\src\plant\noise.py
from typing import Optional

import numpy as np
from pydantic import BaseModel, ConfigDict, Field


class NoiseModel(BaseModel):
    model_config = ConfigDict(frozen=True)

    sigma_f: float = Field(default=0.5, ge=0, description="Std dev per force axis, N")
    seed: int = Field(default=0, description="Seed of the noise stream")


class ForceNoise:
    """Seeded stream of zero-mean Gaussian force perturbations."""

    def __init__(self, model: NoiseModel):
        self.model = model
        self._rng = np.random.default_rng(model.seed)

    def sample(self, n: Optional[int] = None) -> np.ndarray:
        shape = (3,) if n is None else (n, 3)
        if self.model.sigma_f == 0.0:
            return np.zeros(shape)
        return self._rng.normal(0.0, self.model.sigma_f, size=shape)


def sample_noise(model: NoiseModel, stream: Optional[ForceNoise] = None) -> np.ndarray:
    """One 3-vector draw; without a stream this is the first draw of model.seed."""
    stream = stream or ForceNoise(model)
    return stream.sample()
