import os

from setuptools import Extension, setup

ext_modules = []
if os.environ.get("CLONEFINDER_NO_EXT") != "1":
    try:
        from Cython.Build import cythonize

        ext = Extension(
            "clonefinder._kernels",
            ["src/clonefinder/_kernels.pyx"],
        )
        ext.optional = True
        ext_modules = cythonize([ext], language_level=3)
    except ImportError:
        # Pure-Python fallback in clonefinder.kernels takes over at import time.
        ext_modules = []

setup(ext_modules=ext_modules)
