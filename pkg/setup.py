"""Build script for the optional compiled ascent kernel.

The package works without the extension (a pure-Python kernel is selected at
import time), so a missing Cython or a failed compile only costs speed.
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    cythonize = None

extensions = [
    Extension(
        "hlbounds._ascent._kernel",
        ["src/hlbounds/_ascent/_kernel.pyx"],
        extra_compile_args=["-O3"],
    )
]

setup(ext_modules=cythonize(extensions, language_level=3) if cythonize else [])
