"""Build the optional Cython kernel; the package still works without it."""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:  # pure-Python install
    ext_modules = []
else:
    ext_modules = cythonize(
        [Extension("nbstab._kernels", ["src/nbstab/_kernels.pyx"])],
        language_level=3,
    )

setup(ext_modules=ext_modules)
