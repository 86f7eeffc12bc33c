import os

from setuptools import Extension, setup

ext_modules = []
if os.environ.get("HHPAIRING_NO_EXT") != "1":
    try:
        from Cython.Build import cythonize
    except ImportError:
        cythonize = None
    if cythonize is not None:
        ext_modules = cythonize(
            [Extension("hhpairing._speedups", ["src/hhpairing/_speedups.pyx"], optional=True)],
            compiler_directives={
                "language_level": "3",
                "boundscheck": False,
                "wraparound": False,
                "initializedcheck": False,
            },
        )

setup(ext_modules=ext_modules)
