"""Build script: compiles the optional fixed-width integer kernels.

The compiled extension is a pure accelerator. If Cython or a C compiler is
missing, or MUKAITWIST_NO_EXT=1 is set, the package installs without it and
falls back to the arbitrary-precision Python kernels at import time.
"""
import os

from setuptools import Extension, setup

ext_modules = []
if os.environ.get("MUKAITWIST_NO_EXT") != "1":
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [
                Extension(
                    "mukaitwist._kernels._fast",
                    ["src/mukaitwist/_kernels/_fast.pyx"],
                )
            ],
            language_level=3,
        )
        for ext in ext_modules:
            ext.optional = True
    except ImportError:
        ext_modules = []

setup(ext_modules=ext_modules)
