"""Build script: compiles the optional fast kernel when Cython is available.

`pip install .` works without a compiler; the package falls back to the
pure-Python kernel at import time.  Build the native kernel in a checkout
with:

    python setup.py build_ext --inplace
"""

from setuptools import setup

ext_modules = []
try:
    from Cython.Build import cythonize
    from setuptools import Extension

    ext_modules = cythonize(
        [
            Extension(
                "bookembed._fast._native",
                ["src/bookembed/_fast/_native.pyx"],
                extra_compile_args=["-O2"],
            )
        ],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    pass

setup(ext_modules=ext_modules)
