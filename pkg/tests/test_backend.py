import os
import subprocess
import sys

from ekrperm.extremal import BACKEND


def _backend_in_subprocess(**env):
    proc = subprocess.run(
        [sys.executable, "-c", "from ekrperm.extremal import BACKEND; print(BACKEND)"],
        capture_output=True, text=True, check=True, env={**os.environ, **env},
    )
    return proc.stdout.strip()


def test_forced_fallback():
    assert _backend_in_subprocess(EKR_PURE_PYTHON="1") == "python"


def test_default_backend_is_known():
    assert BACKEND in ("cython", "python")
    assert _backend_in_subprocess() == BACKEND
