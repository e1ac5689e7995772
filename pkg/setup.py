import os

from setuptools import Extension, setup

ext_modules = []
if not os.environ.get("LIE2_PURE"):
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [Extension("lie2alg._core", ["src/lie2alg/_core.pyx"])],
            compiler_directives={"language_level": "3"},
        )
    except ImportError:
        # Pure-Python fallback kernel is selected at import time.
        ext_modules = []

setup(ext_modules=ext_modules)
