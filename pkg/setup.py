"""Build script: compiles the optional Cython kernel extension.

The package works without the extension (a pure-Python fallback is selected
at import time); set PRIMEJAC_PURE_PYTHON=1 to skip compilation entirely.
"""

import os

from setuptools import Extension, setup

ext_modules = []
if not os.environ.get("PRIMEJAC_PURE_PYTHON"):
    try:
        from Cython.Build import cythonize
    except ImportError:
        cythonize = None
    if cythonize is not None:
        ext_modules = cythonize(
            [
                Extension(
                    "primejac._kernels._speedups",
                    ["src/primejac/_kernels/_speedups.pyx"],
                )
            ],
            language_level=3,
        )

setup(ext_modules=ext_modules)
