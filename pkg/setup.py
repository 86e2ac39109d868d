"""Build script for the optional compiled kernel.

The package is fully functional without the extension (a pure-Python
implementation of the same kernels is selected at import time), so a failed
or skipped compilation is not an error.
"""

from setuptools import setup
from setuptools.extension import Extension

try:
    from Cython.Build import cythonize
except ImportError:
    ext_modules = []
else:
    ext_modules = cythonize(
        [
            Extension(
                "braidkit._kernel._ckernel",
                ["src/braidkit/_kernel/_ckernel.pyx"],
            )
        ],
        language_level="3",
    )

setup(ext_modules=ext_modules)
