#plugsim\src\scripts\check_environment.py
"""
Environment check for plugsim: interpreter, packages, PLUGSIM_* settings, output directory.
"""

import importlib
import os
import sys
from pathlib import Path

REQUIRED_PACKAGES = ['numpy', 'scipy', 'pandas', 'pydantic', 'pydantic_settings', 'typer', 'matplotlib']
SETTINGS_VARS = ['PLUGSIM_SEED', 'PLUGSIM_LOG_LEVEL', 'PLUGSIM_JOBS', 'PLUGSIM_D_DEPTH_MM']


def check_python_environment():
    print("Checking Python Environment...")
    print(f"   Python version: {sys.version.split()[0]}")
    ok = sys.version_info >= (3, 9)
    if not ok:
        print("   ❌ Python 3.9+ required")

    for name in REQUIRED_PACKAGES:
        try:
            module = importlib.import_module(name)
            print(f"   {name} {getattr(module, '__version__', '')}")
        except ImportError:
            print(f"   ❌ {name} - Not installed")
            ok = False
    return ok


def check_environment_variables():
    print("\nChecking PLUGSIM_* settings...")
    for var in SETTINGS_VARS:
        value = os.getenv(var)
        print(f"   {var}: {value if value is not None else '(default)'}")

    try:
        from src.core.config import get_settings
        settings = get_settings()
        print(f"   resolved: seed={settings.seed} jobs={settings.jobs} log_level={settings.log_level}")
        return True
    except Exception as e:
        print(f"   ❌ settings invalid: {e}")
        return False


def check_output_directory(project_root: Path):
    print("\nChecking output directory...")
    out_dir = project_root / 'data' / 'runs'
    try:
        out_dir.mkdir(parents=True, exist_ok=True)
        marker = out_dir / '.write_test'
        marker.write_text('ok', encoding='utf-8')
        marker.unlink()
        print(f"   {out_dir} writable")
        return True
    except OSError as e:
        print(f"   ❌ {out_dir} not writable: {e}")
        return False


def main():
    project_root = Path(__file__).resolve().parent.parent.parent
    if str(project_root) not in sys.path:
        sys.path.insert(0, str(project_root))

    print("plugsim Environment Check")
    print("=" * 50)

    checks = [
        check_python_environment(),
        check_environment_variables(),
        check_output_directory(project_root),
    ]

    print("\n" + "=" * 50)
    if all(checks):
        print("All environment checks passed!")
        print("   Next steps:")
        print("   1. Run: python src/scripts/run_pipeline.py")
        print("   2. Run: python -m src.scripts.plugsim --help")
    else:
        print("Some checks failed. Please fix the issues above.")
        sys.exit(1)


if __name__ == "__main__":
    main()
