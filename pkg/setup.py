"""Build hook for the optional compiled enumeration kernel.

The package works without it: ``ringschemes.search`` falls back to the pure
Python kernel when the extension is missing.
"""
from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:  # no Cython: ship the pure-Python kernel only
    ext_modules = []
else:
    ext_modules = cythonize(
        [
            Extension(
                "ringschemes._kernel",
                ["src/ringschemes/_kernel.pyx"],
                extra_compile_args=["-O3"],
                optional=True,
            )
        ],
        compiler_directives={"language_level": "3"},
    )

setup(ext_modules=ext_modules)
