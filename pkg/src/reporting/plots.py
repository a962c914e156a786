#plugsim\src\reporting\plots.py
"""
Two-panel mission plot: tilt angles over time, and F_z with its references.
SVG output is byte-stable for identical traces.
"""

import logging
from pathlib import Path
from typing import Union

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

from src.mission.config import MissionConfig  # noqa: E402
from src.mission.trace import MissionTrace  # noqa: E402

logger = logging.getLogger(__name__)

SVG_HASHSALT = "plugsim"


def plot_mission(trace: MissionTrace, out_path: Union[str, Path], cfg: MissionConfig = MissionConfig()) -> Path:
    out_path = Path(out_path)
    out_path.parent.mkdir(parents=True, exist_ok=True)
    frame = trace.frame
    t = frame["t_s"]

    with plt.rc_context({"svg.hashsalt": SVG_HASHSALT}):
        fig, (ax_theta, ax_fz) = plt.subplots(2, 1, figsize=(8, 6), sharex=True)

        ax_theta.plot(t, frame["theta_x_deg"], label=r"$\theta_x$")
        ax_theta.plot(t, frame["theta_y_deg"], label=r"$\theta_y$")
        ax_theta.set_ylabel("angle [deg]")
        ax_theta.grid(True, alpha=0.3)
        ax_theta.legend(loc="upper right")

        ax_fz.plot(t, frame["fz_n"], color="tab:red", label=r"$F_z$")
        ax_fz.axhline(cfg.f_z_ref_in, color="gray", linestyle="--", linewidth=1, label="reference")
        ax_fz.axhline(cfg.f_z_ref_out, color="gray", linestyle="--", linewidth=1)
        ax_fz.set_xlabel("time [s]")
        ax_fz.set_ylabel("force [N]")
        ax_fz.grid(True, alpha=0.3)
        ax_fz.legend(loc="upper right")

        fig.tight_layout()
        fig.savefig(out_path, format="svg", metadata={"Date": None})
        plt.close(fig)

    logger.info(f"✅ Plot saved to {out_path}")
    return out_path
