import os

from setuptools import Extension, setup

extensions = []
if os.environ.get("OLFM_PURE_BUILD") != "1":
    try:
        from Cython.Build import cythonize

        extensions = cythonize(
            [
                Extension(
                    "olfm._core",
                    ["src/olfm/_core.pyx"],
                    extra_compile_args=["-O3"],
                    optional=True,
                )
            ],
            compiler_directives={"language_level": "3"},
        )
    except ImportError:
        # No Cython available: the package still works through the
        # pure-Python kernel selected at import time.
        extensions = []

setup(ext_modules=extensions)
