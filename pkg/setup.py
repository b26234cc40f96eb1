"""Build the optional Cython matching kernel.

The package works without it: ``cornergap.kernels`` falls back to the
pure-Python implementation when the extension is missing.
"""
import os

from setuptools import Extension, setup


def _extensions():
    if os.environ.get("CORNERGAP_NO_EXT"):
        return []
    try:
        from Cython.Build import cythonize
    except ImportError:
        return []
    ext = Extension(
        "cornergap._matching_ext",
        ["src/cornergap/_matching_ext.pyx"],
        language="c++",
        extra_compile_args=["-O3"],
    )
    return cythonize([ext], compiler_directives={"language_level": "3"})


setup(ext_modules=_extensions())
