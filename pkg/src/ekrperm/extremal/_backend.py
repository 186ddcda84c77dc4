"""Pick the clique kernel: compiled if importable, else pure Python.

Set ``EKR_PURE_PYTHON=1`` to force the fallback.
"""
import os

if os.environ.get("EKR_PURE_PYTHON"):
    from . import _clique_py as kernel
else:
    try:
        from . import _clique_ext as kernel
    except ImportError:
        from . import _clique_py as kernel

BACKEND = kernel.NAME
