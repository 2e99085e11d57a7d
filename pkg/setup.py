"""Build script: compiles the Cython elimination kernel when possible.

The package works without the extension (the pure-Python backend is
selected at import time), so a failed compilation is not fatal for
development installs; run ``pip install -e . --no-build-isolation`` to
build it.
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
    ext_modules = cythonize(
        [Extension("sympspin._kernels_cy",
                   ["src/sympspin/_kernels_cy.pyx"])],
        language_level=3)
except ImportError:
    ext_modules = []

setup(ext_modules=ext_modules)
