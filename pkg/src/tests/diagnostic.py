# diagnostic.py
# python src/tests/diagnostic.py
import sys
from pathlib import Path

# Add the repository root to Python path
project_root = Path(__file__).resolve().parents[2]
sys.path.insert(0, str(project_root))


def main():
    print("🔍 Running plugsim Diagnostic...")

    # Test 1: Import the service layer
    try:
        from src.services import RunConfig, SimulationService
        print("✅ Simulation service imports successfully")
    except Exception as e:
        print(f"❌ Simulation service import failed: {e}")
        return

    # Test 2: Build the default controller
    try:
        config = RunConfig()
        ctrl = config.build_controller()
        for name in ("params_rot_x", "params_rot_y", "params_lin_z"):
            p = getattr(ctrl, name)
            print(f"✅ {name}: K_d={p.k_d:.4f} D_d={p.d_d:.4f} M_d={p.m_d:.6f} (t_s={p.settling_time:.3f} s)")
    except Exception as e:
        print(f"❌ Controller construction failed: {e}")
        return

    # Test 3: Run the reference mission
    try:
        result, trace = SimulationService().simulate(config)
        print(f"✅ Mission finished with {len(trace)} rows")
        for line in result.summary_lines():
            print(f"   {line}")
    except Exception as e:
        print(f"❌ Mission failed: {e}")


if __name__ == "__main__":
    main()
