import os

from setuptools import Extension, setup

extensions = []
if not os.environ.get("CAPKIT_PURE_PYTHON"):
    try:
        from Cython.Build import cythonize

        extensions = cythonize(
            [
                Extension(
                    "capkit._kernels",
                    ["src/capkit/_kernels.pyx"],
                    extra_compile_args=["-O3"],
                )
            ],
            compiler_directives={"language_level": "3"},
        )
    except ImportError:
        # No Cython: ship the pure-Python kernels only.
        extensions = []

setup(ext_modules=extensions)
