"""Builds the optional compiled kernel extension.

The package works without the extension (a NumPy fallback is selected at
import time), so any failure here is non-fatal by design: simply install
without Cython to get the pure-Python build.
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    ext_modules = []
else:
    ext_modules = cythonize(
        [
            Extension(
                "corstitch._kernels._native",
                ["src/corstitch/_kernels/_native.pyx"],
                extra_compile_args=["-O3"],
            )
        ],
        language_level=3,
    )

setup(ext_modules=ext_modules)
