#plugsim\src\core\config.py
from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    # Reproducibility (PLUGSIM_SEED)
    seed: int = 0

    # Logging
    log_level: str = "INFO"

    # Batch execution
    jobs: int = 4

    # Calibration targets
    d_depth_mm: float = 34.8
    design_zeta: float = 1.0
    design_ts_s: float = 0.2

    model_config = SettingsConfigDict(env_prefix="PLUGSIM_", env_file=".env", extra="ignore")


def get_settings() -> Settings:
    # Re-read on every call so env changes made by the CLI or tests are visible
    return Settings()


settings = Settings()
