import os

from setuptools import Extension, setup

# The compiled kernels are optional: without Cython the package falls back to
# cubicpart._pykernels at import time.
ext_modules = []
if os.environ.get("CUBICPART_NO_EXT") != "1":
    try:
        from Cython.Build import cythonize
    except ImportError:
        cythonize = None
    if cythonize is not None:
        ext_modules = cythonize(
            [
                Extension(
                    "cubicpart._ckernels",
                    ["src/cubicpart/_ckernels.pyx"],
                    extra_compile_args=["-O3"],
                )
            ],
            compiler_directives={"language_level": "3"},
        )

setup(ext_modules=ext_modules)
