"""Build script: compiles the optional Cython statistic kernels.

The extension is marked optional; if Cython or a C compiler is missing the
install still succeeds and the package falls back to the numpy kernels in
rvexact._kernels._pykernels.
"""

from setuptools import Extension, setup

ext_modules = []
try:
    import numpy
    from Cython.Build import cythonize

    ext = Extension(
        "rvexact._kernels._ckernels",
        sources=["src/rvexact/_kernels/_ckernels.pyx"],
        include_dirs=[numpy.get_include()],
        define_macros=[("NPY_NO_DEPRECATED_API", "NPY_1_7_API_VERSION")],
        extra_compile_args=["-O3"],
    )
    ext.optional = True
    ext_modules = cythonize([ext], language_level=3)
except ImportError:
    pass

setup(ext_modules=ext_modules)
