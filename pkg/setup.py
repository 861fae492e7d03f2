"""Build script: compiles the optional LCS speedup extension.

The package works without the extension (a pure-Python kernel is selected
at import time), so the build is marked optional and a failed compile does
not fail the install.
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "intentmesh.metrics._lcs",
                sources=["src/intentmesh/metrics/_lcs.pyx"],
                optional=True,
            )
        ],
        language_level=3,
    )
except ImportError:
    ext_modules = []

setup(ext_modules=ext_modules)
