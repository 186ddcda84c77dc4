"""Build the optional compiled clique kernel.

Without Cython or a C compiler the package still installs and falls back to
the pure-Python kernel at import time.
"""
import os

from setuptools import Extension, setup

ext_modules = []
if not os.environ.get("EKR_NO_EXT"):
    try:
        from Cython.Build import cythonize
    except ImportError:
        cythonize = None
    if cythonize is not None:
        ext_modules = cythonize(
            [
                Extension(
                    "ekrperm.extremal._clique_ext",
                    ["src/ekrperm/extremal/_clique_ext.pyx"],
                    extra_compile_args=["-O3"],
                )
            ],
            compiler_directives={"language_level": "3"},
        )

setup(ext_modules=ext_modules)
