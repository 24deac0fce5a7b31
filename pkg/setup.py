"""Build the optional compiled kernel.

The package works without it (a pure-Python twin is selected at import
time), so a missing compiler or Cython only costs speed.
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    ext_modules = []
else:
    ext_modules = cythonize(
        [Extension("bellgamma._native", ["src/bellgamma/_native.pyx"])],
        language_level=3,
    )

setup(ext_modules=ext_modules)
