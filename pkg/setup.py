import numpy as np
from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    # Pure-Python install still works; bombrl falls back to the Python
    # implementations of the grid kernels at import time.
    ext_modules = []
else:
    ext_modules = cythonize(
        [
            Extension(
                "bombrl._gridkernels",
                ["src/bombrl/_gridkernels.pyx"],
                include_dirs=[np.get_include()],
                extra_compile_args=["-O3"],
            )
        ],
        compiler_directives={"language_level": "3"},
    )

setup(ext_modules=ext_modules)
