from setuptools import Extension, setup

ext_modules = []
try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [Extension("editgec.kernels._speedups", ["src/editgec/kernels/_speedups.pyx"])],
        language_level=3,
    )
except ImportError:
    # Pure-Python fallback kernels are selected at import time.
    pass

setup(ext_modules=ext_modules)
