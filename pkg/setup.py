"""Build script for the optional compiled quadrature core.

The package is fully functional without the extension (a pure-Python
fallback is selected at import time); the extension exists because the
tanh-sinh node loop dominates runtime for sweeps and inversions.
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    cythonize = None

if cythonize is not None:
    ext_modules = cythonize(
        [
            Extension(
                "pqtrig._dequad_c",
                ["src/pqtrig/_dequad_c.pyx"],
                extra_compile_args=["-O3"],
                optional=True,
            )
        ],
        compiler_directives={"language_level": "3"},
    )
else:
    ext_modules = []

setup(ext_modules=ext_modules)
