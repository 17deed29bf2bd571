"""Build script for the optional compiled kernels.

The package is fully functional without the extension (a numpy fallback is
selected at import time); building it just makes the hot loops faster.
Build in place with:

    python setup.py build_ext --inplace

Set EISENKIT_NO_OPENMP=1 to build the extension without OpenMP.
"""

import os

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    cythonize = None

compile_args = ["-O3"]
link_args = []
if os.environ.get("EISENKIT_NO_OPENMP", "0") in ("", "0"):
    compile_args.append("-fopenmp")
    link_args.append("-fopenmp")

ext_modules = []
if cythonize is not None:
    ext_modules = cythonize(
        [
            Extension(
                "eisenkit._kernels._speedups",
                ["src/eisenkit/_kernels/_speedups.pyx"],
                extra_compile_args=compile_args,
                extra_link_args=link_args,
            )
        ],
        compiler_directives={"language_level": "3"},
    )

setup(ext_modules=ext_modules)
