"""Build script for the optional compiled term-arithmetic kernel.

The package works without the extension: ladderops.backend falls back to
the pure-Python kernel when the compiled module is missing (or when
LADDEROPS_PURE=1 is set at runtime).  Set LADDEROPS_NO_EXT=1 to skip the
extension build entirely.
"""

import os

from setuptools import Extension, setup

ext_modules = []
if not os.environ.get("LADDEROPS_NO_EXT"):
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [Extension("ladderops._kernel", ["src/ladderops/_kernel.pyx"])],
            language_level="3",
        )
    except ImportError:
        ext_modules = []

setup(ext_modules=ext_modules)
